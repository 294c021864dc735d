#pragma once

#include <optional>
#include <utility>

#include "skyline/biword.hpp"
#include "skyline/ssaf.hpp"

namespace skyline {

/// Image of a biword under the skyline analogue of RSK: two fillings whose
/// shapes are rearrangements of one another. The insertion filling carries
/// the content of the bottom row, the recording filling that of the top.
struct SsafPair {
  Ssaf insertion;
  Ssaf recording;

  auto operator<=>(const SsafPair&) const = default;
};

/// Classical RSK: row-insert the bottom row, record top letters at the
/// cells created. Both outputs are SSYTs of the same shape.
std::pair<Tableau, Tableau> rsk(const Biword& w);

/// Inverse of rsk; nullopt when (P, Q) is not a valid same-shape SSYT pair.
std::optional<Biword> rsk_inverse(const Tableau& p, const Tableau& q);

/// Reverse RSK over [n]: RSK of the reversed, complemented biword followed
/// by complementing all entries. Produces a pair of reverse SSYTs.
std::pair<Tableau, Tableau> reverse_rsk(const Biword& w, int n);

/// The bijection onto pairs of skyline fillings with shapes in one
/// S_n-orbit: reverse RSK followed by ssaf_from_rssyt on both tableaux.
SsafPair phi(const Biword& w, int n);

/// Inverse of phi via the reverse readings and inverse RSK; nullopt when
/// the pair is not in the image.
std::optional<Biword> phi_inverse(const SsafPair& pair);

}  // namespace skyline
