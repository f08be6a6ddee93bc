#include "bmwf/combinatorics.hpp"

#include <algorithm>
#include <charconv>

#include "bmwf/error.hpp"

namespace bmwf {

bool UpDownTableau::is_standard() const {
  return std::all_of(steps.begin(), steps.end(), [](const BoxStep& s) { return s.added; });
}

std::vector<Box> addable_boxes(const Partition& p) {
  std::vector<Box> out;
  int rows = static_cast<int>(p.size());
  for (int r = 0; r <= rows; ++r) {
    int len = r < rows ? p[static_cast<std::size_t>(r)] : 0;
    int above = r == 0 ? -1 : p[static_cast<std::size_t>(r - 1)];
    if (r == 0 || len < above) out.push_back({r + 1, len + 1});
  }
  return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
  std::vector<Box> out;
  int rows = static_cast<int>(p.size());
  for (int r = 0; r < rows; ++r) {
    int len = p[static_cast<std::size_t>(r)];
    int below = r + 1 < rows ? p[static_cast<std::size_t>(r + 1)] : 0;
    if (len > below) out.push_back({r + 1, len});
  }
  return out;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int c = 1; c <= p[0]; ++c) {
    int h = 0;
    while (h < static_cast<int>(p.size()) && p[static_cast<std::size_t>(h)] >= c) ++h;
    t.push_back(h);
  }
  return t;
}

namespace {

Partition apply_step(Partition p, const BoxStep& s) {
  auto r = static_cast<std::size_t>(s.box.row - 1);
  if (s.added) {
    if (r == p.size()) p.push_back(1);
    else ++p[r];
  } else {
    if (--p[r] == 0) p.pop_back();
  }
  return p;
}

void extend(std::vector<UpDownTableau>& out, UpDownTableau& cur, int n) {
  if (cur.length() == n) {
    out.push_back(cur);
    return;
  }
  const Partition last = cur.shapes.back();
  std::vector<BoxStep> moves;
  for (const auto& b : addable_boxes(last)) moves.push_back({true, b});
  for (const auto& b : removable_boxes(last)) moves.push_back({false, b});
  for (const auto& m : moves) {
    cur.shapes.push_back(apply_step(last, m));
    cur.steps.push_back(m);
    extend(out, cur, n);
    cur.shapes.pop_back();
    cur.steps.pop_back();
  }
}

}  // namespace

std::vector<UpDownTableau> enumerate_tableaux(int n, int cap) {
  if (n < 1) throw Error(ErrorCode::IndexOutOfRange, "tableau length must be positive");
  if (n > cap) throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<UpDownTableau> out;
  UpDownTableau start{{Partition{1}}, {BoxStep{true, {1, 1}}}};
  extend(out, start, n);
  return out;
}

UpDownTableau tableau_from_shapes(const std::vector<Partition>& shapes) {
  if (shapes.empty() || shapes[0] != Partition{1})
    throw Error(ErrorCode::Parse, "an up-down tableau starts with a single box");
  UpDownTableau t{{shapes[0]}, {BoxStep{true, {1, 1}}}};
  for (std::size_t j = 1; j < shapes.size(); ++j) {
    const Partition& prev = shapes[j - 1];
    bool found = false;
    for (const auto& b : addable_boxes(prev))
      if (apply_step(prev, {true, b}) == shapes[j]) {
        t.steps.push_back({true, b});
        found = true;
      }
    for (const auto& b : removable_boxes(prev))
      if (apply_step(prev, {false, b}) == shapes[j]) {
        t.steps.push_back({false, b});
        found = true;
      }
    if (!found)
      throw Error(ErrorCode::Parse, "shapes " + encode_partition(prev) + " -> " + encode_partition(shapes[j]) +
                                        " do not differ by one box");
    t.shapes.push_back(shapes[j]);
  }
  return t;
}

UpDownTableau transpose(const UpDownTableau& t) {
  UpDownTableau out;
  for (const auto& s : t.shapes) out.shapes.push_back(transpose(s));
  for (const auto& s : t.steps) out.steps.push_back({s.added, {s.box.col, s.box.row}});
  return out;
}

std::vector<Rational> quantum_contents(const UpDownTableau& t, const ParamSet& params) {
  return quantum_contents(t, params.q, params.nu);
}

std::vector<Rational> classical_contents(const UpDownTableau& t, const Rational& omega, ContentFlavor flavor) {
  Rational shift = (omega - Rational(1)) / Rational(2);
  std::vector<Rational> out;
  for (const auto& s : t.steps) {
    Rational m(s.box.col - s.box.row);
    switch (flavor) {
      case ContentFlavor::Classical: out.push_back(s.added ? m + shift : -m - shift); break;
      case ContentFlavor::TClassical: out.push_back(s.added ? -m + shift : m - shift); break;
      case ContentFlavor::Quantum:
        throw Error(ErrorCode::DomainMismatch, "quantum contents need q and nu");
    }
  }
  return out;
}

std::vector<Rational> extension_spectrum(const Partition& shape, const ParamSet& params) {
  auto out = extension_spectrum(shape, params.q, params.nu);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (out[i] == out[j])
        throw Error(ErrorCode::NotGeneric, "spectrum collision at shape " + encode_partition(shape));
  return out;
}

std::string encode_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string encode_tableau(const UpDownTableau& t) {
  std::string out;
  for (std::size_t i = 0; i < t.shapes.size(); ++i) {
    if (i) out += ';';
    out += encode_partition(t.shapes[i]);
  }
  return out;
}

std::string encode_step(const BoxStep& s) {
  return (s.added ? "+" : "-") + std::to_string(s.box.row) + "," + std::to_string(s.box.col);
}

Partition parse_partition(std::string_view text) {
  Partition p;
  if (text.empty() || text == "0") return p;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size() || v <= 0)
      throw Error(ErrorCode::Parse, "bad partition '" + std::string(text) + "'");
    if (!p.empty() && v > p.back()) throw Error(ErrorCode::Parse, "partition not decreasing: " + std::string(text));
    p.push_back(v);
    pos = end + 1;
  }
  return p;
}

UpDownTableau parse_tableau(std::string_view text) {
  std::vector<Partition> shapes;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    shapes.push_back(parse_partition(text.substr(pos, end - pos)));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return tableau_from_shapes(shapes);
}

}  // namespace bmwf
