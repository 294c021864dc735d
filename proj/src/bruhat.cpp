#include "skyline/bruhat.hpp"

#include <algorithm>
#include <stdexcept>

namespace skyline {

Composition simple_swap(int i, const Composition& c) {
  if (i < 1 || i >= static_cast<int>(c.size()))
    throw std::invalid_argument("simple_swap: index out of range");
  Composition out = c;
  std::swap(out[i - 1], out[i]);
  return out;
}

Composition omega(const Composition& c) {
  return Composition(c.rbegin(), c.rend());
}

int inversion_count(const Composition& c) {
  int n = static_cast<int>(c.size());
  int count = 0;
  for (int i = 0; i < n; i++)
    for (int j = i + 1; j < n; j++)
      if (c[i] < c[j]) count++;
  return count;
}

OrbitPoset::OrbitPoset(const Composition& partition) : base_(partition) {
  if (!is_partition(base_))
    throw std::invalid_argument("OrbitPoset: base must be a partition");

  // Distinct rearrangements, via next_permutation over the ascending sort.
  Composition cur = base_;
  std::sort(cur.begin(), cur.end());
  do {
    elems_.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  std::sort(elems_.begin(), elems_.end());
  for (int idx = 0; idx < static_cast<int>(elems_.size()); idx++)
    index_[elems_[idx]] = idx;

  const int n = static_cast<int>(base_.size());
  const int V = static_cast<int>(elems_.size());
  for (int a = 0; a < V; a++) {
    const Composition& alpha = elems_[a];
    for (int i = 0; i < n; i++)
      for (int j = i + 1; j < n; j++)
        if (alpha[i] > alpha[j]) {
          Composition beta = alpha;
          std::swap(beta[i], beta[j]);
          rels_.emplace_back(a, index_.at(beta));
        }
  }

  // Reachability along the relations. Every edge strictly increases the
  // inversion count, so processing elements by decreasing count sees all
  // out-neighbours before their sources.
  words_ = (V + 63) / 64;
  reach_.assign(static_cast<size_t>(V) * words_, 0);
  std::vector<std::vector<int>> out(V);
  for (auto& [a, b] : rels_) out[a].push_back(b);
  std::vector<int> order(V);
  for (int i = 0; i < V; i++) order[i] = i;
  std::vector<int> inv(V);
  for (int i = 0; i < V; i++) inv[i] = inversion_count(elems_[i]);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return inv[x] > inv[y]; });
  for (int a : order) {
    uint64_t* row = &reach_[a * words_];
    row[a / 64] |= uint64_t(1) << (a % 64);
    for (int b : out[a]) {
      const uint64_t* src = &reach_[b * words_];
      for (size_t k = 0; k < words_; k++) row[k] |= src[k];
    }
  }
}

int OrbitPoset::index_of(const Composition& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

bool OrbitPoset::leq(int a, int b) const {
  return (reach_[a * words_ + b / 64] >> (b % 64)) & 1;
}

bool OrbitPoset::leq(const Composition& a, const Composition& b) const {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0 || ib < 0) return false;
  return leq(ia, ib);
}

OrbitCache& OrbitCache::instance() {
  static OrbitCache cache;
  return cache;
}

const OrbitPoset& OrbitCache::get(const Composition& partition) {
  {
    std::shared_lock lock(mu_);
    auto it = posets_.find(partition);
    if (it != posets_.end()) return *it->second;
  }
  std::unique_lock lock(mu_);
  auto it = posets_.find(partition);
  if (it == posets_.end())
    it = posets_.emplace(partition, std::make_unique<OrbitPoset>(partition)).first;
  return *it->second;
}

bool bruhat_leq(const Composition& a, const Composition& b) {
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  Composition pa = sort_to_partition(a);
  if (pa != sort_to_partition(b)) return false;
  return OrbitCache::instance().get(pa).leq(a, b);
}

}  // namespace skyline
