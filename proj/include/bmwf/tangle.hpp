#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bmwf/brauer.hpp"

namespace bmwf {

/// T_i, its inverse U_i, and the tangle K_i.
enum class LetterKind : std::uint8_t { T = 0, U = 1, K = 2 };

struct Letter {
  LetterKind kind = LetterKind::T;
  int index = 1;  // 1-based, 1 <= index <= n-1
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

std::string letter_name(Letter l);
Letter parse_letter(std::string_view text, int n);
std::string word_name(const Word& w);

/// Planar picture of a word, letters stacked top to bottom. Each crossing is
/// made of edge A (position i down to i+1) and edge B (i+1 down to i).
/// Strands are walked in a fixed order: arcs by their first endpoint
/// (top points before bottom points), then closed loops by lowest point.
struct CrossingTrace {
  int step = 0;
  std::int32_t time_a = 0, time_b = 0;  // position in the walk
  bool forward_a = true, forward_b = true;
};

struct TangleTrace {
  BrauerDiagram diagram;
  int loops = 0;
  std::vector<CrossingTrace> crossings;  // ordered by step
};

/// Traces the word; crossing types are ignored (T, U and bare crossings alike).
TangleTrace trace_word(const Word& w, int n);

/// A crossing is descending when the over strand is walked before the under strand.
bool crossing_descending(LetterKind kind, const CrossingTrace& c);

/// Sign of the crossing with strands oriented along the walk.
int crossing_sign(LetterKind kind, const CrossingTrace& c);

}  // namespace bmwf
