#include "skyline/tableaux.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skyline {

size_t Tableau::cell_count() const {
  size_t total = 0;
  for (const auto& row : rows) total += row.size();
  return total;
}

Composition Tableau::shape() const {
  Composition s;
  s.reserve(rows.size());
  for (const auto& row : rows) s.push_back(static_cast<int>(row.size()));
  return s;
}

static bool shape_ok(const Tableau& t) {
  const auto s = t.shape();
  if (!std::is_sorted(s.begin(), s.end(), std::greater<int>())) return false;
  for (const auto& row : t.rows)
    if (row.empty()) return false;
  return true;
}

bool is_ssyt(const Tableau& t) {
  if (!shape_ok(t)) return false;
  for (const auto& row : t.rows) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (row.front() < 1) return false;
  }
  for (size_t r = 0; r + 1 < t.rows.size(); r++)
    for (size_t c = 0; c < t.rows[r + 1].size(); c++)
      if (t.rows[r + 1][c] <= t.rows[r][c]) return false;
  return true;
}

bool is_rssyt(const Tableau& t) {
  if (!shape_ok(t)) return false;
  for (const auto& row : t.rows) {
    if (!std::is_sorted(row.rbegin(), row.rend())) return false;
    if (row.back() < 1) return false;
  }
  for (size_t r = 0; r + 1 < t.rows.size(); r++)
    for (size_t c = 0; c < t.rows[r + 1].size(); c++)
      if (t.rows[r + 1][c] >= t.rows[r][c]) return false;
  return true;
}

bool is_key_tableau(const Tableau& t) {
  if (!is_ssyt(t)) return false;
  size_t ncols = t.rows.empty() ? 0 : t.rows[0].size();
  std::set<int> prev;
  for (size_t c = 0; c < ncols; c++) {
    std::set<int> cur;
    for (const auto& row : t.rows)
      if (c < row.size()) cur.insert(row[c]);
    if (c > 0 && !std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()))
      return false;
    prev = std::move(cur);
  }
  return true;
}

Composition content(const Tableau& t, int n) {
  Composition c(n, 0);
  for (const auto& row : t.rows)
    for (int x : row) {
      if (x < 1 || x > n) throw std::invalid_argument("tableau entry out of [n]");
      c[x - 1]++;
    }
  return c;
}

Word column_word(const Tableau& t) {
  Word w;
  size_t ncols = t.rows.empty() ? 0 : t.rows[0].size();
  for (size_t c = 0; c < ncols; c++)
    for (size_t r = t.rows.size(); r-- > 0;)
      if (c < t.rows[r].size()) w.push_back(t.rows[r][c]);
  return w;
}

// Inserts x into the rows from the bottom up, bumping the leftmost entry
// strictly greater than x. Returns the row index of the new cell.
static int row_insert(Tableau& t, int x) {
  for (size_t r = 0; r < t.rows.size(); r++) {
    auto& row = t.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return static_cast<int>(r);
    }
    std::swap(*it, x);
  }
  t.rows.push_back({x});
  return static_cast<int>(t.rows.size()) - 1;
}

Tableau schensted_insert(const Word& w) {
  Tableau t;
  for (int x : w) row_insert(t, x);
  return t;
}

Word complement_word(const Word& w, int n) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x < 1 || x > n) throw std::invalid_argument("word letter out of [n]");
    out.push_back(n - x + 1);
  }
  return out;
}

Tableau complement_entries(const Tableau& t, int n) {
  Tableau out = t;
  for (auto& row : out.rows)
    for (int& x : row) {
      if (x < 1 || x > n) throw std::invalid_argument("tableau entry out of [n]");
      x = n - x + 1;
    }
  return out;
}

Tableau reverse_insert(const Word& w, int n) {
  Word starred(w.rbegin(), w.rend());
  starred = complement_word(starred, n);
  return complement_entries(schensted_insert(starred), n);
}

Tableau key_tableau(const Composition& gamma) {
  int ncols = 0;
  for (int g : gamma) {
    if (g < 0) throw std::invalid_argument("key tableau: negative content");
    ncols = std::max(ncols, g);
  }
  // Column c holds the letters j with gamma_j >= c, increasing upwards.
  std::vector<std::vector<int>> cols(ncols);
  for (int j = 1; j <= static_cast<int>(gamma.size()); j++)
    for (int c = 1; c <= gamma[j - 1]; c++) cols[c - 1].push_back(j);
  Tableau t;
  size_t nrows = cols.empty() ? 0 : cols[0].size();
  for (size_t r = 0; r < nrows; r++) {
    std::vector<int> row;
    for (const auto& col : cols)
      if (r < col.size()) row.push_back(col[r]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render_tableau(const Tableau& t) {
  std::string out;
  for (size_t r = t.rows.size(); r-- > 0;) {
    for (size_t c = 0; c < t.rows[r].size(); c++) {
      if (c) out += ' ';
      out += std::to_string(t.rows[r][c]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace skyline
