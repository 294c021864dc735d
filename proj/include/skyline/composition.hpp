#pragma once

#include <compare>
#include <string>
#include <vector>

namespace skyline {

/// Weak composition: a vector of non-negative integers of fixed length n.
/// Partitions are compositions with weakly decreasing entries; shapes of
/// skyline fillings are arbitrary compositions.
using Composition = std::vector<int>;

bool is_weak_composition(const Composition& c);
bool is_partition(const Composition& c);

/// Sum of the entries.
int weight(const Composition& c);

/// The weakly decreasing rearrangement, i.e. the unique partition in the
/// S_n-orbit of c.
Composition sort_to_partition(const Composition& c);

/// Parse "(1,0,2)" or "1,0,2"; throws std::invalid_argument on junk.
Composition parse_composition(const std::string& s);
std::string composition_str(const Composition& c);

/// A cell in French convention: row 1 is the bottom row, column 1 the
/// leftmost column. Both indices are 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

/// Row lengths of the staircase (n, n-1, ..., 1).
Composition staircase(int n);

/// Cells of a Ferrers shape given by its row lengths (French convention).
std::vector<Cell> cells_of_partition(const Composition& row_lengths);
bool shape_contains(const Composition& row_lengths, const Cell& c);

/// Transpose of a partition (column lengths), padded/truncated to length m.
Composition transpose_partition(const Composition& row_lengths, int m);

/// The staircase (n, ..., 1) with one layer of k single cells sited on its
/// stairs. Labels split into a NW part r_1 < ... < r_p and a SE part given
/// by column labels e_{p+1} < ... < e_k with e = n - r. The label r puts a
/// cell at (r+1, n-r+1). Orientation of the split follows the cutting
/// diagonal: SE row labels all lie strictly below the NW ones, and when
/// both parts are present the gap r_1 - r_{p+1} must exceed 1.
struct NearStaircase {
  int n = 0;
  std::vector<int> nw;  // r_1 < ... < r_p
  std::vector<int> se;  // e_{p+1} < ... < e_k

  /// Validates all ordering constraints; throws std::invalid_argument.
  static NearStaircase make(int n, std::vector<int> nw, std::vector<int> se);

  int p() const { return static_cast<int>(nw.size()); }
  int k() const { return static_cast<int>(nw.size() + se.size()); }

  /// NW label r_i, 1 <= i <= p.
  int r_label(int i) const;
  /// SE column label e_j, p+1 <= j <= k.
  int e_label(int j) const;

  std::vector<Cell> layer_cells() const;  // NW cells then SE cells
  Cell nw_cell(int i) const;
  Cell se_cell(int j) const;

  /// All cells: staircase plus the layer.
  std::vector<Cell> cells() const;

  /// Row lengths of the resulting Ferrers shape (always a partition).
  Composition row_lengths() const;

  auto operator<=>(const NearStaircase&) const = default;
};

}  // namespace skyline
