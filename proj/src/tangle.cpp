#include "bmwf/tangle.hpp"

#include <charconv>

#include "bmwf/error.hpp"

namespace bmwf {

std::string letter_name(Letter l) {
  static const char kNames[] = {'T', 'U', 'K'};
  return std::string(1, kNames[static_cast<int>(l.kind)]) + std::to_string(l.index);
}

Letter parse_letter(std::string_view text, int n) {
  if (text.size() < 2) throw Error(ErrorCode::Parse, "bad letter '" + std::string(text) + "'");
  Letter l;
  switch (text[0]) {
    case 'T': l.kind = LetterKind::T; break;
    case 'U': l.kind = LetterKind::U; break;
    case 'K': l.kind = LetterKind::K; break;
    default: throw Error(ErrorCode::Parse, "bad letter '" + std::string(text) + "'");
  }
  auto body = text.substr(1);
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), l.index);
  if (ec != std::errc() || ptr != body.data() + body.size())
    throw Error(ErrorCode::Parse, "bad letter '" + std::string(text) + "'");
  if (l.index < 1 || l.index >= n)
    throw Error(ErrorCode::IndexOutOfRange, "letter '" + std::string(text) + "' outside 1.." + std::to_string(n - 1));
  return l;
}

std::string word_name(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w) out += (out.empty() ? "" : " ") + letter_name(l);
  return out;
}

namespace {

enum Side { kDown = 0, kUp = 1 };

struct Walker {
  const Word& w;
  int n;
  int L;
  std::vector<char> visited;
  std::vector<CrossingTrace> cross;  // indexed by step
  std::int32_t clock = 0;

  int id(int layer, int pos) const { return layer * n + (pos - 1); }

  // One edge from (layer,pos) leaving through `side`. Returns the new point
  // and the side it was entered from.
  void step(int& layer, int& pos, Side& side) {
    if (side == kDown) {
      const Letter& l = w[static_cast<std::size_t>(layer)];
      int i = l.index;
      if (pos != i && pos != i + 1) {
        ++layer;
        side = kUp;
      } else if (l.kind == LetterKind::K) {
        pos = pos == i ? i + 1 : i;
        side = kDown;
      } else {
        auto& c = cross[static_cast<std::size_t>(layer)];
        if (pos == i) {
          c.time_a = clock;
          c.forward_a = true;
          pos = i + 1;
        } else {
          c.time_b = clock;
          c.forward_b = true;
          pos = i;
        }
        ++layer;
        side = kUp;
      }
    } else {
      const Letter& l = w[static_cast<std::size_t>(layer - 1)];
      int i = l.index;
      if (pos != i && pos != i + 1) {
        --layer;
        side = kDown;
      } else if (l.kind == LetterKind::K) {
        pos = pos == i ? i + 1 : i;
        side = kUp;
      } else {
        auto& c = cross[static_cast<std::size_t>(layer - 1)];
        if (pos == i + 1) {
          c.time_a = clock;
          c.forward_a = false;
          pos = i;
        } else {
          c.time_b = clock;
          c.forward_b = false;
          pos = i + 1;
        }
        --layer;
        side = kDown;
      }
    }
    ++clock;
    visited[static_cast<std::size_t>(id(layer, pos))] = 1;
  }
};

}  // namespace

TangleTrace trace_word(const Word& w, int n) {
  TangleTrace out;
  const int L = static_cast<int>(w.size());
  if (L == 0) {
    out.diagram = BrauerDiagram::identity(n);
    return out;
  }
  Walker wk{w, n, L, std::vector<char>(static_cast<std::size_t>((L + 1) * n), 0),
            std::vector<CrossingTrace>(static_cast<std::size_t>(L)), 0};
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  for (int e = 0; e < 2 * n; ++e) {
    if (partner[static_cast<std::size_t>(e)] >= 0) continue;
    int layer = e < n ? 0 : L;
    int pos = e < n ? e + 1 : e - n + 1;
    Side side = e < n ? kDown : kUp;
    wk.visited[static_cast<std::size_t>(wk.id(layer, pos))] = 1;
    while (true) {
      wk.step(layer, pos, side);
      // Leave through the opposite side unless we reached the boundary.
      side = side == kDown ? kUp : kDown;
      if ((layer == 0 && side == kUp) || (layer == L && side == kDown)) break;
    }
    int end = layer == 0 ? pos - 1 : n + pos - 1;
    partner[static_cast<std::size_t>(e)] = end;
    partner[static_cast<std::size_t>(end)] = e;
  }
  for (int layer = 1; layer < L; ++layer)
    for (int pos = 1; pos <= n; ++pos) {
      if (wk.visited[static_cast<std::size_t>(wk.id(layer, pos))]) continue;
      ++out.loops;
      int l = layer, p = pos;
      Side side = kDown;
      wk.visited[static_cast<std::size_t>(wk.id(l, p))] = 1;
      while (true) {
        wk.step(l, p, side);
        side = side == kDown ? kUp : kDown;
        if (l == layer && p == pos) break;
      }
    }
  out.diagram = BrauerDiagram(std::move(partner));
  for (int s = 0; s < L; ++s) {
    if (w[static_cast<std::size_t>(s)].kind == LetterKind::K) continue;
    auto c = wk.cross[static_cast<std::size_t>(s)];
    c.step = s;
    out.crossings.push_back(c);
  }
  return out;
}

bool crossing_descending(LetterKind kind, const CrossingTrace& c) {
  return kind == LetterKind::T ? c.time_a < c.time_b : c.time_b < c.time_a;
}

int crossing_sign(LetterKind kind, const CrossingTrace& c) {
  int ax = c.forward_a ? 1 : -1, ay = c.forward_a ? 1 : -1;
  int bx = c.forward_b ? -1 : 1, by = c.forward_b ? 1 : -1;
  int cr = kind == LetterKind::T ? ax * by - ay * bx : bx * ay - by * ax;
  return cr > 0 ? 1 : -1;
}

}  // namespace bmwf
