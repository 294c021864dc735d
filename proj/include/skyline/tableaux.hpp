#pragma once

#include <compare>
#include <vector>

#include "skyline/biword.hpp"
#include "skyline/composition.hpp"

namespace skyline {

/// A filling of a Ferrers shape, stored row-major with the bottom row
/// first (French convention). Serves both semistandard fillings (rows
/// weakly increasing, columns strictly increasing upwards) and reverse
/// semistandard fillings (rows weakly decreasing, columns strictly
/// decreasing upwards).
struct Tableau {
  std::vector<std::vector<int>> rows;

  bool empty() const { return rows.empty(); }
  size_t cell_count() const;
  Composition shape() const;  // row lengths, bottom first

  auto operator<=>(const Tableau&) const = default;
};

bool is_ssyt(const Tableau& t);
bool is_rssyt(const Tableau& t);
/// SSYT whose column entry sets are nested left to right.
bool is_key_tableau(const Tableau& t);

Composition content(const Tableau& t, int n);

/// Entries of each column read top to bottom, columns left to right.
Word column_word(const Tableau& t);

/// Classical Schensted row insertion of a word, one letter at a time.
Tableau schensted_insert(const Word& w);

/// Reverse Schensted insertion over the alphabet [n]: insert the reversed
/// complement of the word, then complement all entries. Produces a reverse
/// SSYT of the same weight.
Tableau reverse_insert(const Word& w, int n);

/// The unique key tableau with content gamma: letter j fills the first
/// gamma_j columns.
Tableau key_tableau(const Composition& gamma);

/// i -> n - i + 1, applied to every letter.
Word complement_word(const Word& w, int n);
Tableau complement_entries(const Tableau& t, int n);

std::string render_tableau(const Tableau& t);

}  // namespace skyline
