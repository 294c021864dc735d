#pragma once

#include <string>
#include <vector>

#include "skyline/biword.hpp"
#include "skyline/ssaf.hpp"

namespace skyline {

/// Partition label at a growth-diagram corner, stored without trailing
/// zeros. The empty vector is the empty partition.
using GrowthLabel = std::vector<int>;

/// A biword spread over an expanded grid so that no two crosses share a
/// row or column. Each of the n original rows and columns widens into one
/// band of thin lines per extra cross; within one cell, repeated biletters
/// form a chain going up and to the right.
struct ZeroOneFilling {
  int n = 0;
  int width = 0;   // expanded columns
  int height = 0;  // expanded rows
  std::vector<int> col_offset;  // size n+1; band of original column j is
                                // [col_offset[j-1], col_offset[j])
  std::vector<int> row_offset;  // likewise for original rows
  std::vector<Cell> crosses;    // expanded coordinates, 1-based

  bool thick_vline(int x) const;  // is vertical line x (0..width) a band edge
  bool thick_hline(int y) const;
  bool cross_at(int row, int col) const;
};

ZeroOneFilling to_zero_one_filling(const Biword& w, int n);

/// Scanning the bands left to right, bottom to top, recovers the biword.
Biword biword_of_filling(const ZeroOneFilling& f);

/// Local rule for one cell: given the labels eps (top-right), mu
/// (bottom-right), nu (top-left) with eps contained in both and growth of
/// at most one box, produces the bottom-left label. Throws on malformed
/// inputs; a cross requires eps = mu = nu.
GrowthLabel growth_local_rule(const GrowthLabel& eps, const GrowthLabel& mu,
                              const GrowthLabel& nu, bool has_cross);

struct GrowthDiagram {
  ZeroOneFilling filling;
  /// corner[x][y], x in 0..width, y in 0..height; the top row and right
  /// column carry the empty partition.
  std::vector<std::vector<GrowthLabel>> corner;

  /// Left margin labels, top to bottom (y = height .. 0), with thickness.
  std::vector<std::pair<GrowthLabel, bool>> left_chain() const;
  /// Bottom margin labels, right to left (x = width .. 0), with thickness.
  std::vector<std::pair<GrowthLabel, bool>> bottom_chain() const;
};

GrowthDiagram growth_labels(const ZeroOneFilling& f);

enum class GrowthSide { Left, Bottom };

/// Reads the margin chain band by band and places one cell per unit of
/// growth, filled with the band's original index, in the leftmost column
/// that realizes the new label and keeps the columns weakly decreasing.
/// The left side yields the insertion filling, the bottom the recording
/// one. Throws when no admissible column exists.
Ssaf ssaf_from_labels(const GrowthDiagram& g, GrowthSide side);

std::string render_growth(const GrowthDiagram& g);

std::string growth_label_str(const GrowthLabel& l);

}  // namespace skyline
