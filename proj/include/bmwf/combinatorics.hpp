#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bmwf/params.hpp"
#include "bmwf/rational.hpp"

namespace bmwf {

/// Weakly decreasing list of positive parts; the empty list is the empty diagram.
using Partition = std::vector<int>;

struct Box {
  int row = 1;  // 1-based
  int col = 1;
  friend bool operator==(const Box&, const Box&) = default;
};

struct BoxStep {
  bool added = true;
  Box box;
  friend bool operator==(const BoxStep&, const BoxStep&) = default;
};

/// Sequence of diagrams starting from a single box, each obtained from the
/// previous one by adding or removing one box.
struct UpDownTableau {
  std::vector<Partition> shapes;
  std::vector<BoxStep> steps;

  int length() const { return static_cast<int>(shapes.size()); }
  bool is_standard() const;  // no removed boxes
  friend bool operator==(const UpDownTableau&, const UpDownTableau&) = default;
};

inline constexpr int kDefaultCap = 6;

std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> removable_boxes(const Partition& p);
Partition transpose(const Partition& p);

/// All up-down tableaux of length n, depth-first with added boxes before
/// removed ones and boxes ordered by row.
std::vector<UpDownTableau> enumerate_tableaux(int n, int cap = kDefaultCap);

/// Builds a tableau from its shapes, validating every step.
UpDownTableau tableau_from_shapes(const std::vector<Partition>& shapes);

UpDownTableau transpose(const UpDownTableau& t);

/// Quantum content of one step: q^{2(b-a)} for an added box, nu^2 q^{2(a-b)} for a removed one.
template <class S>
S quantum_content(const BoxStep& step, const S& q, const S& nu) {
  int m = step.box.col - step.box.row;
  if (step.added) return q.pow(2L * m);
  return nu * nu * q.pow(-2L * m);
}

template <class S>
std::vector<S> quantum_contents(const UpDownTableau& t, const S& q, const S& nu) {
  std::vector<S> out;
  out.reserve(t.steps.size());
  for (const auto& s : t.steps) out.push_back(quantum_content(s, q, nu));
  return out;
}

std::vector<Rational> quantum_contents(const UpDownTableau& t, const ParamSet& params);

enum class ContentFlavor { Quantum, Classical, TClassical };

/// Classical: ±((b-a) + (omega-1)/2); t-classical: the classical content of the transposed box.
std::vector<Rational> classical_contents(const UpDownTableau& t, const Rational& omega, ContentFlavor flavor);

/// Eigenvalues of the next Jucys-Murphy element on the image of an idempotent
/// with final shape `shape`: contents of every addable box then every removable box.
template <class S>
std::vector<S> extension_spectrum(const Partition& shape, const S& q, const S& nu) {
  std::vector<S> out;
  for (const auto& b : addable_boxes(shape)) out.push_back(quantum_content(BoxStep{true, b}, q, nu));
  for (const auto& b : removable_boxes(shape)) out.push_back(quantum_content(BoxStep{false, b}, q, nu));
  return out;
}

/// Rational version; throws NotGeneric on a collision in the spectrum.
std::vector<Rational> extension_spectrum(const Partition& shape, const ParamSet& params);

std::string encode_partition(const Partition& p);
std::string encode_tableau(const UpDownTableau& t);
std::string encode_step(const BoxStep& s);
Partition parse_partition(std::string_view text);
/// Parses "1;2;2,1"; an empty field (or "0") is the empty diagram.
UpDownTableau parse_tableau(std::string_view text);

}  // namespace bmwf
