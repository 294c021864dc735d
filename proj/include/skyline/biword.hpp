#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "skyline/composition.hpp"

namespace skyline {

using Word = std::vector<int>;

/// Two-row array over [n] in lexicographic order with respect to the top
/// row: top_r < top_{r+1}, or top_r = top_{r+1} and bottom_r <= bottom_{r+1}.
/// Equivalently a multiset of cells, the biletter (j over i) marking cell
/// (i, j) once per multiplicity.
struct Biword {
  Word top;
  Word bottom;

  size_t size() const { return top.size(); }
  bool empty() const { return top.empty(); }

  /// Validates parallel lengths, positive letters and lexicographic order.
  static Biword from_arrays(Word top, Word bottom);
  /// Sorts the biletters; accepts any order.
  static Biword from_pairs(std::vector<std::pair<int, int>> biletters);

  auto operator<=>(const Biword&) const = default;
};

bool is_lexicographic(const Biword& w);

Biword biword_from_cell_multiset(const std::map<Cell, int>& cells);
std::map<Cell, int> cell_multiset(const Biword& w);

/// Swap the two rows and re-sort lexicographically. An involution.
Biword transpose(const Biword& w);

/// Letter multiplicities of one row, as a length-n composition.
Composition top_content(const Biword& w, int n);
Composition bottom_content(const Biword& w, int n);

int max_letter(const Biword& w);

}  // namespace skyline
