#pragma once

#include <utility>
#include <vector>

#include "skyline/biword.hpp"
#include "skyline/composition.hpp"
#include "skyline/ssaf.hpp"

namespace skyline {

/// A near staircase together with a choice of layer cells: H picks NW
/// labels by index (subset of [1..p]), M picks SE labels by index (subset
/// of [p+1..k]). The empty choice asks only for the staircase condition.
struct LayerSpec {
  NearStaircase shape;
  std::vector<int> H;
  std::vector<int> M;

  static LayerSpec make(NearStaircase shape, std::vector<int> H, std::vector<int> M);
  int z() const { return static_cast<int>(H.size()); }
  int t() const { return static_cast<int>(M.size()); }
};

/// (sh(F), sh(G)) for phi(w) = (F, G).
std::pair<Composition, Composition> key_pair_of(const Biword& w, int n);

/// The Bruhat system characterizing key-pairs of biwords supported on the
/// staircase plus the chosen layer cells, each used at least once:
///   prod_{j in M} s_{e_j} beta  <=  omega prod_{i in H} s_{r_i} nu,
/// with strict failure of the comparison whenever one chosen index is
/// omitted from either side. Products apply the smallest index first.
bool a_set_contains(const Composition& nu, const Composition& beta, const LayerSpec& spec);

/// Same system with all layer cells of the shape selected.
bool nw_se_condition_b(const Composition& nu, const Composition& beta,
                       const NearStaircase& shape);

/// Membership of a filling pair by its shapes.
bool in_a_set(const Ssaf& f, const Ssaf& g, const LayerSpec& spec);

/// The separated system of the NW-SE split: requires M inside [p+2..k],
/// applies one extra s_{e_{p+1}} on the recording side and asks for the
/// strict column inequality sh(G)_{e_{p+1}} < sh(G)_{e_{p+1}+1}.
bool b_set_contains(const Composition& nu, const Composition& beta, const LayerSpec& spec);
bool in_b_set(const Ssaf& f, const Ssaf& g, const LayerSpec& spec);

/// Where the support of a biword sits relative to a near staircase.
struct SupportClass {
  bool outside = false;        // some cell not in the shape
  std::vector<int> nw_used;    // NW label indices used with multiplicity >= 1
  std::vector<int> se_used;    // SE label indices likewise

  bool staircase_only() const { return !outside && nw_used.empty() && se_used.empty(); }
};

SupportClass classify_biword(const Biword& w, const NearStaircase& shape);

}  // namespace skyline
