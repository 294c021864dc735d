#pragma once

#include <optional>
#include <vector>

#include "skyline/biword.hpp"
#include "skyline/ssaf.hpp"

namespace skyline {

/// Bracket matching of the letters r and r+1 in a word: each r+1 is
/// matched with a later r, innermost pairs first, until no adjacent pair
/// (r+1, r) remains in the subword. What survives is a block of r's
/// followed by a block of (r+1)'s.
struct BracketMatching {
  std::vector<std::pair<size_t, size_t>> pairs;  // (pos of r+1, pos of r)
  std::vector<size_t> unmatched_low;             // positions of unmatched r
  std::vector<size_t> unmatched_high;            // positions of unmatched r+1
};

BracketMatching bracket_match(int r, const Word& v);

/// Raising operator: turns the leftmost unmatched r+1 into r, or nullopt.
std::optional<Word> crystal_e(int r, const Word& v);
/// Lowering operator: turns the rightmost unmatched r into r+1, or nullopt.
std::optional<Word> crystal_f(int r, const Word& v);

/// Saturation: applies crystal_e to the bottom row as long as it is
/// defined (the number of unmatched r+1's many times).
Biword upsilon(int r, const Biword& w);
/// The f-saturation, likewise.
Biword upsilon_bar(int r, const Biword& w);
/// Saturation through the transposed biword, re-sorted lexicographically.
Biword upsilon_star(int r, const Biword& w);

/// Transport of the saturation to a skyline filling through its word.
Ssaf upsilon_ssaf(int r, const Ssaf& f);

/// Checks, for a biword supported in the Ferrers shape lambda whose cell
/// (r+1, lambda_{r+1}) is used at least once, the four corner statements:
///  (a) nu_r < nu_{r+1} implies sh(upsilon_r F) = s_r nu;
///  (b) phi(upsilon_r w) = (upsilon_r F, G) and
///      phi(upsilon_r transpose(w)) = (upsilon_r G, F);
///  (c) lambda_r = lambda_{r+1} > lambda_{r+2} implies nu_r < nu_{r+1} and
///      upsilon_r w fits lambda with that cell removed;
///  (d) the transposed statement, on mu = transpose(lambda).
/// Clauses whose hypothesis fails are left unset. Precondition failures
/// are reported, not raised.
struct CornerReport {
  bool support_in_shape = false;
  bool corner_present = false;
  std::optional<bool> clause_a, clause_b, clause_c, clause_d;

  bool preconditions_hold() const { return support_in_shape && corner_present; }
  bool applicable_clauses_hold() const {
    auto ok = [](const std::optional<bool>& c) { return !c.has_value() || *c; };
    return ok(clause_a) && ok(clause_b) && ok(clause_c) && ok(clause_d);
  }
};

CornerReport check_corner(const Composition& lambda, int r, const Biword& w, int n);

}  // namespace skyline
