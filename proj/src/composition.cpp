#include "skyline/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skyline {

bool is_weak_composition(const Composition& c) {
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

bool is_partition(const Composition& c) {
  return is_weak_composition(c) &&
         std::is_sorted(c.begin(), c.end(), std::greater<int>());
}

int weight(const Composition& c) {
  return std::accumulate(c.begin(), c.end(), 0);
}

Composition sort_to_partition(const Composition& c) {
  Composition p = c;
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

Composition parse_composition(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw std::invalid_argument("unbalanced parenthesis in composition: " + s);
    body = body.substr(1, body.size() - 2);
  }
  Composition c;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) pos++;
    if (pos != item.size())
      throw std::invalid_argument("bad composition entry: '" + item + "'");
    if (v < 0) throw std::invalid_argument("negative composition entry in " + s);
    c.push_back(v);
  }
  return c;
}

std::string composition_str(const Composition& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.size(); i++) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + ")";
}

Composition staircase(int n) {
  Composition rho(n);
  for (int i = 0; i < n; i++) rho[i] = n - i;
  return rho;
}

std::vector<Cell> cells_of_partition(const Composition& row_lengths) {
  std::vector<Cell> cells;
  for (int i = 0; i < static_cast<int>(row_lengths.size()); i++)
    for (int j = 1; j <= row_lengths[i]; j++) cells.push_back({i + 1, j});
  return cells;
}

bool shape_contains(const Composition& row_lengths, const Cell& c) {
  if (c.row < 1 || c.col < 1) return false;
  if (c.row > static_cast<int>(row_lengths.size())) return false;
  return c.col <= row_lengths[c.row - 1];
}

Composition transpose_partition(const Composition& row_lengths, int m) {
  Composition t(m, 0);
  for (int j = 1; j <= m; j++)
    for (int len : row_lengths)
      if (len >= j) t[j - 1]++;
  return t;
}

NearStaircase NearStaircase::make(int n, std::vector<int> nw, std::vector<int> se) {
  if (n < 1) throw std::invalid_argument("near staircase: n must be positive");
  NearStaircase s;
  s.n = n;
  s.nw = std::move(nw);
  s.se = std::move(se);
  auto check_labels = [&](const std::vector<int>& v, const char* what) {
    for (int x : v)
      if (x < 1 || x >= n)
        throw std::invalid_argument(std::string("near staircase: ") + what +
                                    " label out of [1,n-1]");
    if (!std::is_sorted(v.begin(), v.end()) ||
        std::adjacent_find(v.begin(), v.end()) != v.end())
      throw std::invalid_argument(std::string("near staircase: ") + what +
                                  " labels must be strictly increasing");
  };
  check_labels(s.nw, "nw");
  check_labels(s.se, "se");
  if (!s.nw.empty() && !s.se.empty()) {
    // e increasing means the SE row labels r = n - e are decreasing; the
    // largest of them is n - se.front(). The split requires it to sit
    // strictly below every NW label with a gap of more than one row.
    int r_p1 = n - s.se.front();
    int r_1 = s.nw.front();
    if (r_1 - r_p1 <= 1)
      throw std::invalid_argument(
          "near staircase: NW and SE parts must satisfy r_1 - r_{p+1} > 1");
  }
  if (s.k() >= n)
    throw std::invalid_argument("near staircase: layer has at most n-1 cells");
  return s;
}

int NearStaircase::r_label(int i) const {
  if (i < 1 || i > p()) throw std::invalid_argument("r_label: index out of range");
  return nw[i - 1];
}

int NearStaircase::e_label(int j) const {
  if (j <= p() || j > k()) throw std::invalid_argument("e_label: index out of range");
  return se[j - p() - 1];
}

Cell NearStaircase::nw_cell(int i) const {
  int r = r_label(i);
  return {r + 1, n - r + 1};
}

Cell NearStaircase::se_cell(int j) const {
  int e = e_label(j);
  return {n - e + 1, e + 1};
}

std::vector<Cell> NearStaircase::layer_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= p(); i++) out.push_back(nw_cell(i));
  for (int j = p() + 1; j <= k(); j++) out.push_back(se_cell(j));
  return out;
}

std::vector<Cell> NearStaircase::cells() const {
  std::vector<Cell> out = cells_of_partition(staircase(n));
  auto layer = layer_cells();
  out.insert(out.end(), layer.begin(), layer.end());
  std::sort(out.begin(), out.end());
  return out;
}

Composition NearStaircase::row_lengths() const {
  Composition lambda = staircase(n);
  for (const Cell& c : layer_cells()) lambda[c.row - 1]++;
  return lambda;
}

}  // namespace skyline
