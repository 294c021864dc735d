#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "skyline/tableaux.hpp"

namespace skyline {

/// Semi-skyline augmented filling: columns of letters over the basement
/// 1..n (the basement itself is implicit). Column j is stored bottom to
/// top; its shape is the composition of column heights.
///
/// Validity, over the implicit basement entry j in row 0 of column j:
///  - every column weakly decreases upwards (so the bottom entry of
///    column j is at most j);
///  - for columns i < j, whenever the entry b sits in row h+1 of column j
///    and the entry a in row h of column i satisfies a >= b, column i must
///    be filled at row h+1 with an entry strictly greater than b.
/// The second condition is what the leftmost-placement rule of the
/// bijection with reverse SSYTs enforces; the familiar triple condition
/// (a < b <= c whenever column i is strictly shorter) follows from it.
struct Ssaf {
  int n = 0;
  std::vector<std::vector<int>> cols;

  static Ssaf empty_of(int n) { return Ssaf{n, std::vector<std::vector<int>>(n)}; }

  Composition shape() const;
  Composition content() const;
  bool empty() const;
  size_t cell_count() const;

  /// Entry at (row, col), basement included as row 0; 0 when absent.
  int at(int row, int col) const;
  int height(int col) const { return static_cast<int>(cols[col - 1].size()); }

  auto operator<=>(const Ssaf&) const = default;
};

bool is_valid_ssaf(const Ssaf& f);

/// The shape-rearranging bijection from reverse SSYTs: column c of R fills
/// row c of the output, largest entries first, each placed on the leftmost
/// admissible entry of the row below.
Ssaf ssaf_from_rssyt(const Tableau& rssyt, int n);

/// Inverse reading: row h of F collects exactly the entries of column h of
/// the reverse SSYT. Returns nullopt when F is not in the image.
std::optional<Tableau> rssyt_from_ssaf(const Ssaf& f);

/// Reverse Schensted insertion of the column word, then ssaf_from_rssyt.
/// Weight preserving and shape rearranging on SSYTs.
Ssaf ssaf_from_ssyt(const Tableau& ssyt, int n);

/// key(sh(ssaf_from_ssyt(P))) — the right key of P.
Tableau right_key(const Tableau& ssyt, int n);

/// A word whose reverse insertion composed with ssaf_from_rssyt gives back
/// f. Used to transport word operators onto fillings.
Word word_of(const Ssaf& f);

/// All valid fillings of the given column heights, in lexicographic order
/// of their column readings.
void for_each_ssaf_of_shape(const Composition& shape,
                            const std::function<void(const Ssaf&)>& fn);

std::string render_ssaf(const Ssaf& f);

}  // namespace skyline
