#include "skyline/growth.hpp"

#include <algorithm>
#include <stdexcept>

namespace skyline {

namespace {

GrowthLabel trimmed(GrowthLabel l) {
  while (!l.empty() && l.back() == 0) l.pop_back();
  return l;
}

// eps inside mu with at most one extra box.
bool grows_by_at_most_one(const GrowthLabel& eps, const GrowthLabel& mu) {
  if (eps.size() > mu.size() + 1) return false;
  int extra = 0;
  for (size_t i = 0; i < std::max(eps.size(), mu.size()); i++) {
    int e = i < eps.size() ? eps[i] : 0;
    int m = i < mu.size() ? mu[i] : 0;
    if (e > m) return false;
    extra += m - e;
  }
  return extra <= 1;
}

GrowthLabel add_box(GrowthLabel l, int row) {
  if (row > static_cast<int>(l.size()) + 1)
    throw std::logic_error("add_box: row gap");
  if (row == static_cast<int>(l.size()) + 1)
    l.push_back(0);
  l[row - 1]++;
  return l;
}

}  // namespace

bool ZeroOneFilling::thick_vline(int x) const {
  return std::find(col_offset.begin(), col_offset.end(), x) != col_offset.end();
}

bool ZeroOneFilling::thick_hline(int y) const {
  return std::find(row_offset.begin(), row_offset.end(), y) != row_offset.end();
}

bool ZeroOneFilling::cross_at(int row, int col) const {
  return std::find(crosses.begin(), crosses.end(), Cell{row, col}) != crosses.end();
}

ZeroOneFilling to_zero_one_filling(const Biword& w, int n) {
  if (!is_lexicographic(w))
    throw std::invalid_argument("to_zero_one_filling: biword not lexicographic");
  size_t l = w.size();
  for (size_t r = 0; r < l; r++)
    if (w.top[r] > n || w.bottom[r] > n)
      throw std::invalid_argument("to_zero_one_filling: letter exceeds n");

  std::vector<int> col_count(n, 0), row_count(n, 0);
  for (size_t r = 0; r < l; r++) {
    col_count[w.top[r] - 1]++;
    row_count[w.bottom[r] - 1]++;
  }

  ZeroOneFilling f;
  f.n = n;
  f.col_offset.assign(n + 1, 0);
  f.row_offset.assign(n + 1, 0);
  for (int j = 1; j <= n; j++)
    f.col_offset[j] = f.col_offset[j - 1] + std::max(1, col_count[j - 1]);
  for (int i = 1; i <= n; i++)
    f.row_offset[i] = f.row_offset[i - 1] + std::max(1, row_count[i - 1]);
  f.width = f.col_offset[n];
  f.height = f.row_offset[n];

  // Biletters arrive sorted by (top, bottom); within one original column
  // they are already ordered by row, so positions in the column group give
  // the thin-column ranks directly. For the row ranks, order the biletters
  // of each original row by their position in the biword (top increases,
  // multiplicities stay adjacent), producing the up-and-right chains.
  std::vector<int> col_rank(l), row_rank(l);
  {
    std::vector<int> seen(n, 0);
    for (size_t r = 0; r < l; r++) col_rank[r] = seen[w.top[r] - 1]++;
  }
  {
    std::vector<int> seen(n, 0);
    for (size_t r = 0; r < l; r++) row_rank[r] = seen[w.bottom[r] - 1]++;
  }
  for (size_t r = 0; r < l; r++) {
    int col = f.col_offset[w.top[r] - 1] + col_rank[r] + 1;
    int row = f.row_offset[w.bottom[r] - 1] + row_rank[r] + 1;
    f.crosses.push_back({row, col});
  }
  return f;
}

Biword biword_of_filling(const ZeroOneFilling& f) {
  // Original row of an expanded row, via the band offsets.
  auto orig_row = [&](int row) {
    for (int i = 1; i <= f.n; i++)
      if (row <= f.row_offset[i]) return i;
    throw std::logic_error("biword_of_filling: row out of range");
  };
  std::vector<std::pair<int, int>> biletters;
  for (const Cell& c : f.crosses) {
    int j = 0;
    for (int cand = 1; cand <= f.n; cand++)
      if (c.col <= f.col_offset[cand]) {
        j = cand;
        break;
      }
    biletters.emplace_back(j, orig_row(c.row));
  }
  return Biword::from_pairs(std::move(biletters));
}

GrowthLabel growth_local_rule(const GrowthLabel& eps_in, const GrowthLabel& mu_in,
                              const GrowthLabel& nu_in, bool has_cross) {
  GrowthLabel eps = trimmed(eps_in), mu = trimmed(mu_in), nu = trimmed(nu_in);
  if (!std::is_sorted(eps.begin(), eps.end(), std::greater<int>()) ||
      !std::is_sorted(mu.begin(), mu.end(), std::greater<int>()) ||
      !std::is_sorted(nu.begin(), nu.end(), std::greater<int>()))
    throw std::invalid_argument("growth_local_rule: labels must be partitions");
  if (!grows_by_at_most_one(eps, mu) || !grows_by_at_most_one(eps, nu))
    throw std::invalid_argument("growth_local_rule: malformed corner labels");
  if (has_cross && !(eps == mu && eps == nu))
    throw std::invalid_argument("growth_local_rule: cross in a growing cell");

  if (eps == mu && eps == nu)
    return has_cross ? add_box(eps, 1) : eps;
  if (eps == mu) return nu;
  if (eps == nu) return mu;
  if (mu == nu) {
    // eps differs from mu in exactly one row k; add a box to row k+1.
    for (size_t i = 0; i < mu.size(); i++) {
      int e = i < eps.size() ? eps[i] : 0;
      if (mu[i] != e) return add_box(mu, static_cast<int>(i) + 2);
    }
    throw std::logic_error("growth_local_rule: unreachable");
  }
  // Pairwise different: componentwise maximum.
  GrowthLabel beta(std::max(mu.size(), nu.size()), 0);
  for (size_t i = 0; i < beta.size(); i++) {
    int m = i < mu.size() ? mu[i] : 0;
    int v = i < nu.size() ? nu[i] : 0;
    beta[i] = std::max(m, v);
  }
  return beta;
}

GrowthDiagram growth_labels(const ZeroOneFilling& f) {
  GrowthDiagram g;
  g.filling = f;
  g.corner.assign(f.width + 1, std::vector<GrowthLabel>(f.height + 1));
  // Top row and right column already hold the empty partition; sweep the
  // remaining corners right to left, top to bottom.
  for (int x = f.width - 1; x >= 0; x--)
    for (int y = f.height - 1; y >= 0; y--)
      g.corner[x][y] = growth_local_rule(g.corner[x + 1][y + 1], g.corner[x + 1][y],
                                         g.corner[x][y + 1],
                                         f.cross_at(y + 1, x + 1));
  return g;
}

std::vector<std::pair<GrowthLabel, bool>> GrowthDiagram::left_chain() const {
  std::vector<std::pair<GrowthLabel, bool>> out;
  for (int y = filling.height; y >= 0; y--)
    out.emplace_back(corner[0][y], filling.thick_hline(y));
  return out;
}

std::vector<std::pair<GrowthLabel, bool>> GrowthDiagram::bottom_chain() const {
  std::vector<std::pair<GrowthLabel, bool>> out;
  for (int x = filling.width; x >= 0; x--)
    out.emplace_back(corner[x][0], filling.thick_vline(x));
  return out;
}

namespace {

// Places one cell filled with `letter` so that the shape rearranges into
// `target` and the column stays weakly decreasing; leftmost column wins.
void place_cell(Ssaf& f, int letter, const GrowthLabel& target) {
  Composition shape = f.shape();
  for (int j = 1; j <= f.n; j++) {
    int top = f.cols[j - 1].empty() ? j : f.cols[j - 1].back();
    if (letter > top) continue;
    shape[j - 1]++;
    if (trimmed(sort_to_partition(shape)) == target) {
      f.cols[j - 1].push_back(letter);
      return;
    }
    shape[j - 1]--;
  }
  throw std::logic_error("ssaf_from_labels: no admissible placement");
}

}  // namespace

Ssaf ssaf_from_labels(const GrowthDiagram& g, GrowthSide side) {
  const ZeroOneFilling& f = g.filling;
  Ssaf out = Ssaf::empty_of(f.n);
  if (side == GrowthSide::Bottom) {
    for (int j = f.n; j >= 1; j--)
      for (int x = f.col_offset[j] - 1; x >= f.col_offset[j - 1]; x--)
        if (g.corner[x][0] != g.corner[x + 1][0]) place_cell(out, j, g.corner[x][0]);
  } else {
    for (int i = f.n; i >= 1; i--)
      for (int y = f.row_offset[i] - 1; y >= f.row_offset[i - 1]; y--)
        if (g.corner[0][y] != g.corner[0][y + 1]) place_cell(out, i, g.corner[0][y]);
  }
  return out;
}

std::string growth_label_str(const GrowthLabel& l) {
  if (l.empty()) return "0";
  bool small = std::all_of(l.begin(), l.end(), [](int x) { return x <= 9; });
  std::string s;
  for (size_t i = 0; i < l.size(); i++) {
    if (!small && i) s += ',';
    s += std::to_string(l[i]);
  }
  return s;
}

std::string render_growth(const GrowthDiagram& g) {
  const ZeroOneFilling& f = g.filling;
  // Margin width for the left labels.
  size_t margin = 1;
  for (int y = 0; y <= f.height; y++)
    margin = std::max(margin, growth_label_str(g.corner[0][y]).size());
  std::string out;
  auto hline = [&](int y) {
    std::string lbl = growth_label_str(g.corner[0][y]);
    out += std::string(margin - lbl.size(), ' ') + lbl + ' ';
    char dash = f.thick_hline(y) ? '=' : '-';
    for (int x = 0; x < f.width; x++) {
      out += '+';
      out += dash;
      out += dash;
      out += dash;
    }
    out += "+\n";
  };
  for (int y = f.height; y >= 1; y--) {
    hline(y);
    out += std::string(margin + 1, ' ');
    for (int x = 1; x <= f.width; x++) {
      out += f.thick_vline(x - 1) ? '|' : ':';
      out += ' ';
      out += f.cross_at(y, x) ? 'X' : ' ';
      out += ' ';
    }
    out += f.thick_vline(f.width) ? "|\n" : ":\n";
  }
  hline(0);
  out += "bottom (right to left):";
  for (auto& [lbl, thick] : g.bottom_chain()) {
    out += ' ';
    out += growth_label_str(lbl);
    if (!thick) out += '\'';
  }
  out += "\nleft (top to bottom):";
  for (auto& [lbl, thick] : g.left_chain()) {
    out += ' ';
    out += growth_label_str(lbl);
    if (!thick) out += '\'';
  }
  out += '\n';
  return out;
}

}  // namespace skyline
