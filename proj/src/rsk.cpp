#include "skyline/rsk.hpp"

#include <algorithm>
#include <stdexcept>

namespace skyline {

namespace {

// Row-inserts x, returns the row index (0-based) of the cell created.
int bump(Tableau& t, int x) {
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

Biword star(const Biword& w, int n) {
  // Reverse the biletter sequence and complement both rows; lexicographic
  // order is preserved.
  Word top = complement_word(Word(w.top.rbegin(), w.top.rend()), n);
  Word bottom = complement_word(Word(w.bottom.rbegin(), w.bottom.rend()), n);
  return Biword::from_arrays(std::move(top), std::move(bottom));
}

}  // namespace

std::pair<Tableau, Tableau> rsk(const Biword& w) {
  if (!is_lexicographic(w)) throw std::invalid_argument("rsk: biword not lexicographic");
  Tableau p, q;
  for (size_t r = 0; r < w.size(); r++) {
    int row = bump(p, w.bottom[r]);
    if (row == static_cast<int>(q.rows.size())) q.rows.push_back({});
    q.rows[row].push_back(w.top[r]);
  }
  return {p, q};
}

std::optional<Biword> rsk_inverse(const Tableau& p, const Tableau& q) {
  if (!is_ssyt(p) || !is_ssyt(q)) return std::nullopt;
  if (p.shape() != q.shape()) return std::nullopt;
  Tableau pp = p, qq = q;
  std::vector<std::pair<int, int>> biletters;
  while (!pp.rows.empty()) {
    // The last biletter inserted sits at the cell of Q holding the largest
    // letter; among rows ending with that letter, the lowest one holds the
    // rightmost (latest) cell.
    int best_row = -1, best = 0;
    for (size_t r = 0; r < qq.rows.size(); r++) {
      int v = qq.rows[r].back();
      if (v > best) {
        best = v;
        best_row = static_cast<int>(r);
      }
    }
    qq.rows[best_row].pop_back();
    int x = pp.rows[best_row].back();
    pp.rows[best_row].pop_back();
    if (pp.rows[best_row].empty()) {
      if (best_row != static_cast<int>(pp.rows.size()) - 1) return std::nullopt;
      pp.rows.pop_back();
      qq.rows.pop_back();
    }
    for (int r = best_row - 1; r >= 0; r--) {
      auto& row = pp.rows[r];
      // Reverse bumping: x displaced the rightmost entry smaller than it.
      auto it = std::lower_bound(row.begin(), row.end(), x);
      if (it == row.begin()) return std::nullopt;
      --it;
      std::swap(*it, x);
    }
    biletters.emplace_back(best, x);
  }
  std::reverse(biletters.begin(), biletters.end());
  // The extraction order must come out lexicographic; otherwise the pair
  // was not an RSK image.
  for (size_t r = 0; r + 1 < biletters.size(); r++)
    if (biletters[r] > biletters[r + 1]) return std::nullopt;
  Word top, bottom;
  for (auto& [j, i] : biletters) {
    top.push_back(j);
    bottom.push_back(i);
  }
  return Biword::from_arrays(std::move(top), std::move(bottom));
}

std::pair<Tableau, Tableau> reverse_rsk(const Biword& w, int n) {
  auto [p, q] = rsk(star(w, n));
  return {complement_entries(p, n), complement_entries(q, n)};
}

SsafPair phi(const Biword& w, int n) {
  auto [pt, qt] = reverse_rsk(w, n);
  return {ssaf_from_rssyt(pt, n), ssaf_from_rssyt(qt, n)};
}

std::optional<Biword> phi_inverse(const SsafPair& pair) {
  if (pair.insertion.n != pair.recording.n) return std::nullopt;
  int n = pair.insertion.n;
  if (sort_to_partition(pair.insertion.shape()) !=
      sort_to_partition(pair.recording.shape()))
    return std::nullopt;
  auto rp = rssyt_from_ssaf(pair.insertion);
  auto rq = rssyt_from_ssaf(pair.recording);
  if (!rp || !rq) return std::nullopt;
  // Complementing the reverse tableaux of the pair gives the RSK image of
  // the starred biword.
  auto ws = rsk_inverse(complement_entries(*rp, n), complement_entries(*rq, n));
  if (!ws) return std::nullopt;
  // Un-star: reverse and complement back.
  Word top = complement_word(Word(ws->top.rbegin(), ws->top.rend()), n);
  Word bottom = complement_word(Word(ws->bottom.rbegin(), ws->bottom.rend()), n);
  if (top.size() != bottom.size()) return std::nullopt;
  Biword w{std::move(top), std::move(bottom)};
  if (!is_lexicographic(w)) return std::nullopt;
  return w;
}

}  // namespace skyline
