#include "skyline/biword.hpp"

#include <algorithm>
#include <stdexcept>

namespace skyline {

bool is_lexicographic(const Biword& w) {
  if (w.top.size() != w.bottom.size()) return false;
  for (size_t r = 0; r + 1 < w.top.size(); r++) {
    if (w.top[r] > w.top[r + 1]) return false;
    if (w.top[r] == w.top[r + 1] && w.bottom[r] > w.bottom[r + 1]) return false;
  }
  return true;
}

Biword Biword::from_arrays(Word top, Word bottom) {
  Biword w{std::move(top), std::move(bottom)};
  if (w.top.size() != w.bottom.size())
    throw std::invalid_argument("biword: rows of different lengths");
  for (size_t r = 0; r < w.top.size(); r++)
    if (w.top[r] < 1 || w.bottom[r] < 1)
      throw std::invalid_argument("biword: letters must be positive");
  if (!is_lexicographic(w))
    throw std::invalid_argument("biword: not in lexicographic order");
  return w;
}

Biword Biword::from_pairs(std::vector<std::pair<int, int>> biletters) {
  std::sort(biletters.begin(), biletters.end());
  Word top, bottom;
  top.reserve(biletters.size());
  bottom.reserve(biletters.size());
  for (auto& [j, i] : biletters) {
    top.push_back(j);
    bottom.push_back(i);
  }
  return from_arrays(std::move(top), std::move(bottom));
}

Biword biword_from_cell_multiset(const std::map<Cell, int>& cells) {
  std::vector<std::pair<int, int>> biletters;
  for (const auto& [cell, mult] : cells) {
    if (mult < 0) throw std::invalid_argument("cell multiset: negative multiplicity");
    for (int c = 0; c < mult; c++) biletters.emplace_back(cell.col, cell.row);
  }
  return Biword::from_pairs(std::move(biletters));
}

std::map<Cell, int> cell_multiset(const Biword& w) {
  std::map<Cell, int> m;
  for (size_t r = 0; r < w.size(); r++) m[{w.bottom[r], w.top[r]}]++;
  return m;
}

Biword transpose(const Biword& w) {
  std::vector<std::pair<int, int>> biletters;
  biletters.reserve(w.size());
  for (size_t r = 0; r < w.size(); r++) biletters.emplace_back(w.bottom[r], w.top[r]);
  return Biword::from_pairs(std::move(biletters));
}

static Composition row_content(const Word& row, int n) {
  Composition c(n, 0);
  for (int x : row) {
    if (x < 1 || x > n) throw std::invalid_argument("letter out of alphabet [n]");
    c[x - 1]++;
  }
  return c;
}

Composition top_content(const Biword& w, int n) { return row_content(w.top, n); }
Composition bottom_content(const Biword& w, int n) { return row_content(w.bottom, n); }

int max_letter(const Biword& w) {
  int m = 0;
  for (int x : w.top) m = std::max(m, x);
  for (int x : w.bottom) m = std::max(m, x);
  return m;
}

}  // namespace skyline
