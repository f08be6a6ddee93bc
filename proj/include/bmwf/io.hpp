#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "bmwf/brauer.hpp"
#include "bmwf/fusion.hpp"
#include "bmwf/hecke.hpp"
#include "bmwf/suites.hpp"

namespace bmwf {

using Json = nlohmann::ordered_json;

Json element_to_json(const RElement& e);
/// Throws DomainMismatch if n, q or nu disagree with the context, Parse on malformed input.
RElement element_from_json(const Json& j, const RationalContext& ctx);

Json idempotent_to_json(const Idempotent& e);
Idempotent idempotent_from_json(const Json& j, const RationalContext& ctx);

Json brauer_to_json(const BrauerElement& e);
Json hecke_to_json(const HElement& e, const Rational& q);
Json report_to_json(const SuiteReport& r);

inline constexpr int kCacheFormatVersion = 1;

/// One file per (n, q, nu, format version) holding idempotent records by method.
class IdempotentCache {
 public:
  /// BMWF_CACHE, when set, overrides `dir`. An empty directory disables the cache.
  explicit IdempotentCache(std::filesystem::path dir);

  bool enabled() const { return !dir_.empty(); }
  std::filesystem::path file_for(int n, const ParamSet& p) const;
  std::optional<std::vector<Idempotent>> load(const RationalContext& ctx, const ParamSet& p,
                                              const std::string& method) const;
  void store(const ParamSet& p, const std::string& method, const std::vector<Idempotent>& records) const;

 private:
  std::filesystem::path dir_;
};

/// Writes text to path through a temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

}  // namespace bmwf
