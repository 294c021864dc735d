#include "skyline/ssaf.hpp"

#include <algorithm>
#include <stdexcept>

namespace skyline {

Composition Ssaf::shape() const {
  Composition s(n, 0);
  for (int j = 0; j < n; j++) s[j] = static_cast<int>(cols[j].size());
  return s;
}

Composition Ssaf::content() const {
  Composition c(n, 0);
  for (const auto& col : cols)
    for (int x : col) {
      if (x < 1 || x > n) throw std::invalid_argument("ssaf entry out of [n]");
      c[x - 1]++;
    }
  return c;
}

bool Ssaf::empty() const { return cell_count() == 0; }

size_t Ssaf::cell_count() const {
  size_t total = 0;
  for (const auto& col : cols) total += col.size();
  return total;
}

int Ssaf::at(int row, int col) const {
  if (col < 1 || col > n) return 0;
  if (row == 0) return col;  // basement
  const auto& c = cols[col - 1];
  if (row < 0 || row > static_cast<int>(c.size())) return 0;
  return c[row - 1];
}

bool is_valid_ssaf(const Ssaf& f) {
  if (f.n < 0 || static_cast<int>(f.cols.size()) != f.n) return false;
  for (int j = 1; j <= f.n; j++) {
    int below = j;  // basement
    for (int x : f.cols[j - 1]) {
      if (x < 1 || x > f.n || x > below) return false;
      below = x;
    }
  }
  for (int j = 2; j <= f.n; j++) {
    for (int h = 0; h + 1 <= f.height(j); h++) {
      int b = f.at(h + 1, j);
      for (int i = 1; i < j; i++) {
        if (h > f.height(i)) continue;  // no entry of column i at row h
        int a = f.at(h, i);
        if (a >= b && f.at(h + 1, i) <= b) return false;
      }
    }
  }
  return true;
}

Ssaf ssaf_from_rssyt(const Tableau& rssyt, int n) {
  if (!is_rssyt(rssyt)) throw std::invalid_argument("ssaf_from_rssyt: not a reverse SSYT");
  Ssaf f = Ssaf::empty_of(n);
  size_t ncols = rssyt.rows.empty() ? 0 : rssyt.rows[0].size();
  for (size_t c = 0; c < ncols; c++) {
    // Column c+1 of R, largest entry first (bottom to top it is strictly
    // decreasing, so bottom-up order is already largest-first).
    for (size_t r = 0; r < rssyt.rows.size(); r++) {
      if (c >= rssyt.rows[r].size()) break;
      int a = rssyt.rows[r][c];
      if (a > n) throw std::invalid_argument("ssaf_from_rssyt: entry exceeds n");
      int placed = 0;
      for (int j = 1; j <= n; j++) {
        if (f.height(j) == static_cast<int>(c) && f.at(static_cast<int>(c), j) >= a) {
          f.cols[j - 1].push_back(a);
          placed = j;
          break;
        }
      }
      if (!placed) throw std::logic_error("ssaf_from_rssyt: no admissible placement");
    }
  }
  return f;
}

std::optional<Tableau> rssyt_from_ssaf(const Ssaf& f) {
  if (!is_valid_ssaf(f)) return std::nullopt;
  int nrows = 0;
  for (int j = 1; j <= f.n; j++) nrows = std::max(nrows, f.height(j));
  // Row h of f becomes column h of R, sorted strictly decreasing upwards.
  std::vector<std::vector<int>> rcols(nrows);
  for (int h = 1; h <= nrows; h++) {
    for (int j = 1; j <= f.n; j++)
      if (h <= f.height(j)) rcols[h - 1].push_back(f.at(h, j));
    std::sort(rcols[h - 1].begin(), rcols[h - 1].end(), std::greater<int>());
    auto& col = rcols[h - 1];
    if (std::adjacent_find(col.begin(), col.end()) != col.end())
      return std::nullopt;  // repeated entry in a row of f
  }
  Tableau r;
  size_t height = rcols.empty() ? 0 : rcols[0].size();
  for (size_t row = 0; row < height; row++) {
    std::vector<int> entries;
    for (const auto& col : rcols)
      if (row < col.size()) entries.push_back(col[row]);
    r.rows.push_back(std::move(entries));
  }
  if (!is_rssyt(r)) return std::nullopt;
  if (ssaf_from_rssyt(r, f.n) != f) return std::nullopt;
  return r;
}

Ssaf ssaf_from_ssyt(const Tableau& ssyt, int n) {
  if (!is_ssyt(ssyt)) throw std::invalid_argument("ssaf_from_ssyt: not an SSYT");
  return ssaf_from_rssyt(reverse_insert(column_word(ssyt), n), n);
}

Tableau right_key(const Tableau& ssyt, int n) {
  return key_tableau(ssaf_from_ssyt(ssyt, n).shape());
}

Word word_of(const Ssaf& f) {
  auto r = rssyt_from_ssaf(f);
  if (!r) throw std::invalid_argument("word_of: not a valid skyline filling");
  // Column word of the complemented tableau, reversed and complemented
  // back: reverse insertion of this word reproduces r.
  Word w = column_word(complement_entries(*r, f.n));
  std::reverse(w.begin(), w.end());
  return complement_word(w, f.n);
}

namespace {

struct ShapeEnumerator {
  const Composition& shape;
  int n;
  int max_height;
  Ssaf cur;
  const std::function<void(const Ssaf&)>& fn;

  // Fills cells row by row from the bottom, left to right within a row.
  void fill(int row, int col) {
    while (row <= max_height) {
      while (col <= n && shape[col - 1] < row) col++;
      if (col <= n) break;
      row++;
      col = 1;
    }
    if (row > max_height) {
      fn(cur);
      return;
    }
    for (int x = 1; x <= cur.at(row - 1, col); x++) {
      if (!admissible(row, col, x)) continue;
      cur.cols[col - 1].push_back(x);
      fill(row, col + 1);
      cur.cols[col - 1].pop_back();
    }
  }

  // Pairwise condition against the already-filled columns left of col for
  // the candidate entry x at (row, col): an entry a >= x one row below in
  // column i < col must be covered there by an entry larger than x.
  bool admissible(int row, int col, int x) const {
    for (int i = 1; i < col; i++) {
      bool below_exists = (row == 1) || (row - 1 <= shape[i - 1]);
      if (!below_exists || cur.at(row - 1, i) < x) continue;
      if (shape[i - 1] < row || cur.at(row, i) <= x) return false;
    }
    return true;
  }
};

}  // namespace

void for_each_ssaf_of_shape(const Composition& shape,
                            const std::function<void(const Ssaf&)>& fn) {
  if (!is_weak_composition(shape))
    throw std::invalid_argument("for_each_ssaf_of_shape: bad shape");
  int n = static_cast<int>(shape.size());
  int max_height = 0;
  for (int h : shape) max_height = std::max(max_height, h);
  ShapeEnumerator e{shape, n, max_height, Ssaf::empty_of(n), fn};
  e.fill(1, 1);
}

std::string render_ssaf(const Ssaf& f) {
  int top = 0;
  for (int j = 1; j <= f.n; j++) top = std::max(top, f.height(j));
  std::string out;
  for (int row = top; row >= 1; row--) {
    for (int j = 1; j <= f.n; j++) {
      int x = f.at(row, j);
      out += x ? std::to_string(x) : ".";
      out += ' ';
    }
    out += '\n';
  }
  for (int j = 1; j <= f.n; j++) {
    out += std::to_string(j);
    out += ' ';
  }
  out += "  <- basement\n";
  return out;
}

}  // namespace skyline
