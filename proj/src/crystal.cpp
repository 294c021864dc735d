#include "skyline/crystal.hpp"

#include <algorithm>
#include <stdexcept>

#include "skyline/rsk.hpp"

namespace skyline {

BracketMatching bracket_match(int r, const Word& v) {
  BracketMatching m;
  std::vector<size_t> stack;  // open r+1 positions
  for (size_t pos = 0; pos < v.size(); pos++) {
    if (v[pos] == r + 1) {
      stack.push_back(pos);
    } else if (v[pos] == r) {
      if (stack.empty()) {
        m.unmatched_low.push_back(pos);
      } else {
        m.pairs.emplace_back(stack.back(), pos);
        stack.pop_back();
      }
    }
  }
  m.unmatched_high = std::move(stack);
  return m;
}

std::optional<Word> crystal_e(int r, const Word& v) {
  if (r < 1) throw std::invalid_argument("crystal_e: r must be positive");
  auto m = bracket_match(r, v);
  if (m.unmatched_high.empty()) return std::nullopt;
  Word out = v;
  out[m.unmatched_high.front()] = r;
  return out;
}

std::optional<Word> crystal_f(int r, const Word& v) {
  if (r < 1) throw std::invalid_argument("crystal_f: r must be positive");
  auto m = bracket_match(r, v);
  if (m.unmatched_low.empty()) return std::nullopt;
  Word out = v;
  out[m.unmatched_low.back()] = r + 1;
  return out;
}

Biword upsilon(int r, const Biword& w) {
  Word bottom = w.bottom;
  size_t m = bracket_match(r, bottom).unmatched_high.size();
  for (size_t step = 0; step < m; step++) {
    auto next = crystal_e(r, bottom);
    if (!next) throw std::logic_error("upsilon: operator vanished early");
    bottom = std::move(*next);
  }
  return Biword::from_arrays(w.top, std::move(bottom));
}

Biword upsilon_bar(int r, const Biword& w) {
  Word bottom = w.bottom;
  size_t m = bracket_match(r, bottom).unmatched_low.size();
  for (size_t step = 0; step < m; step++) {
    auto next = crystal_f(r, bottom);
    if (!next) throw std::logic_error("upsilon_bar: operator vanished early");
    bottom = std::move(*next);
  }
  return Biword::from_arrays(w.top, std::move(bottom));
}

Biword upsilon_star(int r, const Biword& w) {
  return transpose(upsilon(r, transpose(w)));
}

Ssaf upsilon_ssaf(int r, const Ssaf& f) {
  Word v = word_of(f);
  size_t m = bracket_match(r, v).unmatched_high.size();
  for (size_t step = 0; step < m; step++) {
    auto next = crystal_e(r, v);
    if (!next) throw std::logic_error("upsilon_ssaf: operator vanished early");
    v = std::move(*next);
  }
  return ssaf_from_rssyt(reverse_insert(v, f.n), f.n);
}

CornerReport check_corner(const Composition& lambda, int r, const Biword& w, int n) {
  if (!is_partition(lambda)) throw std::invalid_argument("check_corner: shape not a partition");
  if (r < 1 || r >= n) throw std::invalid_argument("check_corner: r out of range");

  auto len = [&](const Composition& shape, int row) {
    return row <= static_cast<int>(shape.size()) ? shape[row - 1] : 0;
  };

  CornerReport rep;
  rep.support_in_shape = true;
  for (const auto& [cell, mult] : cell_multiset(w)) {
    (void)mult;
    if (!shape_contains(lambda, cell)) rep.support_in_shape = false;
  }
  Cell corner{r + 1, len(lambda, r + 1)};
  auto support = cell_multiset(w);
  rep.corner_present = corner.col >= 1 && support.count(corner) && support.at(corner) >= 1;
  if (!rep.preconditions_hold()) return rep;

  SsafPair fg = phi(w, n);
  Composition nu = fg.insertion.shape();
  Composition beta = fg.recording.shape();

  if (nu[r - 1] < nu[r]) {
    Composition expect = nu;
    std::swap(expect[r - 1], expect[r]);
    rep.clause_a = upsilon_ssaf(r, fg.insertion).shape() == expect;
  }

  {
    Biword up = upsilon(r, w);
    SsafPair lhs = phi(up, n);
    bool first = lhs.insertion == upsilon_ssaf(r, fg.insertion) && lhs.recording == fg.recording;
    Biword up_t = upsilon(r, transpose(w));
    SsafPair lhs_t = phi(up_t, n);
    bool second =
        lhs_t.insertion == upsilon_ssaf(r, fg.recording) && lhs_t.recording == fg.insertion;
    rep.clause_b = first && second;
  }

  if (len(lambda, r) == len(lambda, r + 1) && len(lambda, r + 1) > len(lambda, r + 2)) {
    bool ordered = nu[r - 1] < nu[r];
    bool shape_moves = false, fits = true;
    if (ordered) {
      Composition expect = nu;
      std::swap(expect[r - 1], expect[r]);
      shape_moves = upsilon_ssaf(r, fg.insertion).shape() == expect;
    }
    for (const auto& [cell, mult] : cell_multiset(upsilon(r, w))) {
      (void)mult;
      if (cell == corner || !shape_contains(lambda, cell)) fits = false;
    }
    rep.clause_c = ordered && shape_moves && fits;
  }

  {
    Composition mu = transpose_partition(lambda, n);
    if (len(mu, r) == len(mu, r + 1) && len(mu, r + 1) > len(mu, r + 2)) {
      bool ordered = beta[r - 1] < beta[r];
      bool shape_moves = false, fits = true;
      if (ordered) {
        Composition expect = beta;
        std::swap(expect[r - 1], expect[r]);
        shape_moves = upsilon_ssaf(r, fg.recording).shape() == expect;
      }
      // Support of the transposed saturation, read back in lambda.
      Cell deleted{len(mu, r + 1), r + 1};
      for (const auto& [cell, mult] : cell_multiset(transpose(upsilon(r, transpose(w))))) {
        (void)mult;
        if (cell == deleted || !shape_contains(lambda, cell)) fits = false;
      }
      rep.clause_d = ordered && shape_moves && fits;
    }
  }

  return rep;
}

}  // namespace skyline
