#include "bmwf/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace bmwf {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rational_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) parse_error(std::string("field \"") + key + "\" must be a rational string");
  return Rational::parse(v.get<std::string>());
}

std::string file_token(const Rational& r) {
  std::string s = r.str();
  for (char& ch : s) {
    if (ch == '/') ch = '_';
    if (ch == '-') ch = 'm';
  }
  return s;
}

}  // namespace

Json element_to_json(const RElement& e) {
  const auto& ctx = e.context();
  Json terms = Json::array();
  for (const auto& [b, c] : e.terms()) {
    Json word = Json::array();
    for (const auto& l : ctx.basis_word(b)) word.push_back(letter_name(l));
    terms.push_back({{"word", word}, {"coeff", c.str()}});
  }
  return {{"algebra", "bmw"},
          {"n", ctx.n()},
          {"params", {{"q", ctx.scalars().q.str()}, {"nu", ctx.scalars().nu.str()}}},
          {"terms", terms}};
}

RElement element_from_json(const Json& j, const RationalContext& ctx) {
  if (field(j, "algebra") != "bmw") parse_error("algebra must be \"bmw\"");
  const Json& n = field(j, "n");
  if (!n.is_number_integer()) parse_error("n must be an integer");
  if (n.get<int>() != ctx.n()) throw Error(ErrorCode::DomainMismatch, "element is for n = " + n.dump());
  const Json& params = field(j, "params");
  if (rational_field(params, "q") != ctx.scalars().q || rational_field(params, "nu") != ctx.scalars().nu)
    throw Error(ErrorCode::DomainMismatch, "element parameters differ from the context");
  RElement out(ctx);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) parse_error("terms must be an array");
  for (const auto& t : terms) {
    Word w;
    const Json& word = field(t, "word");
    if (!word.is_array()) parse_error("word must be an array");
    for (const auto& l : word) {
      if (!l.is_string()) parse_error("letters must be strings");
      w.push_back(parse_letter(l.get<std::string>(), ctx.n()));
    }
    Rational c = rational_field(t, "coeff");
    for (const auto& [b, s] : ctx.reduce(w)) out.add_term(b, c * s);
  }
  return out;
}

Json idempotent_to_json(const Idempotent& e) {
  Json contents = Json::array();
  for (const auto& c : e.contents) contents.push_back(c.str());
  return {{"tableau", encode_tableau(e.tableau)},
          {"contents", contents},
          {"method", e.method},
          {"element", element_to_json(e.element)}};
}

Idempotent idempotent_from_json(const Json& j, const RationalContext& ctx) {
  Idempotent e;
  const Json& t = field(j, "tableau");
  if (!t.is_string()) parse_error("tableau must be a string");
  e.tableau = parse_tableau(t.get<std::string>());
  for (const auto& c : field(j, "contents")) {
    if (!c.is_string()) parse_error("contents must be rational strings");
    e.contents.push_back(Rational::parse(c.get<std::string>()));
  }
  const Json& m = field(j, "method");
  if (!m.is_string()) parse_error("method must be a string");
  e.method = m.get<std::string>();
  e.element = element_from_json(field(j, "element"), ctx);
  return e;
}

Json brauer_to_json(const BrauerElement& e) {
  Json terms = Json::array();
  for (const auto& [d, c] : e.terms()) {
    Json pairs = Json::array();
    for (const auto& [a, b] : d.pairs()) pairs.push_back({a, b});
    terms.push_back({{"diagram", pairs}, {"coeff", c.str()}});
  }
  return {{"algebra", "brauer"}, {"n", e.n()}, {"params", {{"omega", e.omega().str()}}}, {"terms", terms}};
}

Json hecke_to_json(const HElement& e, const Rational& q) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"perm", w}, {"coeff", c.str()}});
  return {{"algebra", "hecke"}, {"n", e.n()}, {"params", {{"q", q.str()}}}, {"terms", terms}};
}

Json report_to_json(const SuiteReport& r) {
  Json j = {{"suite", r.name}, {"pass", r.pass()}, {"checks", r.checks}, {"failures", r.failures}};
  j["first_failure"] = r.first_failure.empty() ? Json(nullptr) : Json(r.first_failure);
  return j;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  namespace fs = std::filesystem;
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error(ErrorCode::Io, "rename to " + path.string() + ": " + ec.message());
  }
}

IdempotentCache::IdempotentCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (const char* env = std::getenv("BMWF_CACHE"); env && *env) dir_ = env;
}

std::filesystem::path IdempotentCache::file_for(int n, const ParamSet& p) const {
  return dir_ / ("bmw_n" + std::to_string(n) + "_q" + file_token(p.q) + "_nu" + file_token(p.nu) + "_v" +
                 std::to_string(kCacheFormatVersion) + ".json");
}

std::optional<std::vector<Idempotent>> IdempotentCache::load(const RationalContext& ctx, const ParamSet& p,
                                                             const std::string& method) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(file_for(ctx.n(), p), std::ios::binary);
  if (!in) return std::nullopt;
  Json j = Json::parse(in, nullptr, false);
  // A stale or damaged file is ignored and later overwritten.
  if (j.is_discarded() || !j.is_object() || j.value("format_version", -1) != kCacheFormatVersion ||
      j.value("n", -1) != ctx.n() || j.value("q", "") != p.q.str() || j.value("nu", "") != p.nu.str())
    return std::nullopt;
  if (!j.contains("records") || !j["records"].contains(method)) return std::nullopt;
  std::vector<Idempotent> out;
  try {
    for (const auto& r : j["records"][method]) out.push_back(idempotent_from_json(r, ctx));
  } catch (const Error&) {
    return std::nullopt;
  }
  return out;
}

void IdempotentCache::store(const ParamSet& p, const std::string& method,
                            const std::vector<Idempotent>& records) const {
  if (!enabled() || records.empty()) return;
  int n = records.front().element.context().n();
  auto path = file_for(n, p);
  Json j;
  {
    std::ifstream in(path, std::ios::binary);
    if (in) j = Json::parse(in, nullptr, false);
  }
  if (j.is_discarded() || !j.is_object() || j.value("format_version", -1) != kCacheFormatVersion)
    j = Json{{"format_version", kCacheFormatVersion}, {"n", n}, {"q", p.q.str()}, {"nu", p.nu.str()},
             {"records", Json::object()}};
  Json arr = Json::array();
  for (const auto& r : records) arr.push_back(idempotent_to_json(r));
  j["records"][method] = arr;
  write_file_atomic(path, j.dump() + "\n");
}

}  // namespace bmwf
