#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kostka/insertion.hpp"

namespace kostka {

// Machinery around Vershik's relation for Kostka numbers.  For a
// partition rho of n-1 and a composition lambda of n it connects two
// tableau sets:
//
//   L  = union over mu covering rho of SSYT(mu, lambda)
//   R' = union over x with lambda_x >= 1 of SSYT(rho, lambda^(x)) x {x}
//
// where lambda^(x) = decrement_at(lambda, x).  Row insertion (T, x) |->
// T <- x is a bijection R' -> L, which proves the counting identity
//
//   sum_{mu >= rho} K(mu, lambda)
//     = sum_{gamma <= lambda} c(lambda, gamma) K(rho, gamma)
//
// with c(lambda, gamma) = multiplicity_c(lambda, gamma).

// Member of R': a tableau of shape rho and content lambda^(letter).
struct RPrimeElement {
  Tableau tableau;
  int letter = 0;  // x in [length(lambda)]
  friend auto operator<=>(const RPrimeElement&, const RPrimeElement&) = default;
};

// Elements of R' in canonical order: by letter, then tableau order.
// Skips letters with lambda_x = 0.  Requires weight(lambda) = weight(rho)+1.
std::vector<RPrimeElement> build_r_prime(const Partition& rho, const Composition& lambda);

// Elements of L in canonical order: mu over covers_above(rho) first,
// tableau order within each mu.  Requires weight(lambda) = weight(rho)+1.
std::vector<Tableau> build_l(const Partition& rho, const Composition& lambda);

struct BijectionPair {
  RPrimeElement source;
  Tableau image;  // source.tableau <- source.letter
};

struct BijectionTable {
  Composition lambda;
  Partition rho;
  std::vector<BijectionPair> pairs;  // in build_r_prime order
};

// The insertion bijection R' -> L, one pair per element of R'.  The
// table is self-checked before being returned: images reproduce
// build_l exactly, and reverse insertion at each image's new box
// recovers its source.
BijectionTable vershik_bijection(const Partition& rho, const Composition& lambda);

struct LhsTerm {
  Partition mu;
  std::uint64_t count = 0;  // K(mu, lambda)
};

struct RhsTerm {
  Partition gamma;
  int multiplicity = 0;     // c(lambda, gamma)
  std::uint64_t count = 0;  // K(rho, gamma)
};

struct VerificationRecord {
  Partition lambda;
  Partition rho;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  bool ok = false;
  std::vector<LhsTerm> lhs_terms;    // mu over covers_above(rho)
  std::vector<RhsTerm> rhs_terms;    // gamma over sub_partitions_below(lambda)
};

// Evaluates both sides of the identity for one pair, keeping the
// per-term breakdown.  The two sides share no intermediate results:
// the left side counts over covers_above(rho), the right side over
// sub_partitions_below(lambda) with multiplicities.
VerificationRecord verify_identity(const Partition& rho, const Partition& lambda);

// verify_identity over every pair (lambda of n, rho of n-1) for
// 1 <= n <= max_n, ordered by n, then lambda, then rho (partitions in
// lexicographically decreasing order).  jobs >= 2 evaluates pairs
// concurrently; the result order does not depend on jobs.
std::vector<VerificationRecord> sweep_identity(int max_n, int jobs = 1);

// The one-box removal map L -> R, R = union over x of SSYT(rho, lambda^(x)):
// in the row where shape(s) exceeds rho, remove the leftmost box whose
// removal leaves a valid tableau.  Removing the last box of that row is
// always valid, so the map is total.  Requires shape(s) to cover rho.
Tableau remove_one_box(const Tableau& s, const Partition& rho);

struct RemovalFiber {
  Tableau image;                  // element of R
  std::vector<Tableau> preimages; // elements of L mapping to it, sweep order
};

struct RemovalWitness {
  Tableau first;   // distinct members of L sharing an image
  Tableau second;
  Tableau image;
};

struct RemovalReport {
  Composition lambda;
  Partition rho;
  // One fiber per element of R, in canonical order (by x, then tableau
  // order; the contents lambda^(x) are pairwise distinct, so the union
  // is disjoint).  Empty preimage lists mark tableaux never produced.
  std::vector<RemovalFiber> fibers;
  bool is_bijective = false;
  // First collision found sweeping build_l in canonical order.
  std::optional<RemovalWitness> witness;
};

// Analyzes whether remove_one_box is a bijection L -> R.  It is for
// some inputs and not for others, which is why the insertion bijection
// above restricts to R' instead of relying on box removal.
RemovalReport removal_map_analysis(const Partition& rho, const Composition& lambda);

}  // namespace kostka
