#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "skyline/composition.hpp"

namespace skyline {

/// Exchange entries i and i+1 (1-based, 1 <= i < n).
Composition simple_swap(int i, const Composition& c);

/// Reverse the entry sequence (action of the longest permutation).
Composition omega(const Composition& c);

/// Number of pairs i < j with c_i < c_j.
int inversion_count(const Composition& c);

/// Bruhat order on the S_n-orbit of a partition: transitive closure of
/// alpha < t.alpha whenever alpha_i > alpha_j for i < j and t = (i j).
/// The unique minimum is the partition itself, the maximum its reversal.
class OrbitPoset {
 public:
  explicit OrbitPoset(const Composition& partition);

  const Composition& base() const { return base_; }
  const std::vector<Composition>& elements() const { return elems_; }
  /// Index of a rearrangement, or -1 when not in the orbit.
  int index_of(const Composition& c) const;

  bool leq(int a, int b) const;
  bool leq(const Composition& a, const Composition& b) const;

  /// The defining relations (alpha, t.alpha), as index pairs.
  const std::vector<std::pair<int, int>>& relations() const { return rels_; }

 private:
  Composition base_;
  std::vector<Composition> elems_;
  std::map<Composition, int> index_;
  std::vector<std::pair<int, int>> rels_;
  size_t words_ = 0;  // 64-bit words per reachability row
  std::vector<uint64_t> reach_;
};

/// Process-wide memoization of orbit posets, keyed by partition.
/// Returned references stay valid for the lifetime of the process; reads
/// are safe from multiple threads.
class OrbitCache {
 public:
  static OrbitCache& instance();
  const OrbitPoset& get(const Composition& partition);

 private:
  std::shared_mutex mu_;
  std::map<Composition, std::unique_ptr<OrbitPoset>> posets_;
};

/// true iff a <= b in the induced Bruhat order. Inputs that are not
/// rearrangements of each other compare as false.
bool bruhat_leq(const Composition& a, const Composition& b);

}  // namespace skyline
