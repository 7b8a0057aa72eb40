#pragma once

#include <string>
#include <utility>
#include <vector>

#include "balance/poset.hpp"
#include "balance/rational.hpp"

namespace balance {

enum class MorphismKind { automorphism, anti_automorphism };

// A bijection of the element set: element x maps to image[x-1]. An
// automorphism preserves the strict order; an anti-automorphism reverses it.
struct Morphism {
  MorphismKind kind = MorphismKind::automorphism;
  std::vector<int> image;

  bool is_identity() const;
  std::vector<int> fixed_points() const;
};

// Kinds of structural certificates that pin a balance guarantee on a pair.
enum class CertificateKind {
  twin,                     // identical strict down- and up-sets
  almost_twin,              // twin up to chain differences (possibly in dual)
  auto_2cycle,              // swapped by an automorphism
  anti_auto_fixed_pair,     // two fixed points of an anti-automorphism
  inversion_pattern_pair,   // pattern-clean inversion of a permutation
};

// A certificate that the named pair (or, for almost_twin, the whole poset)
// satisfies the stated balance bound.
struct CertificateReport {
  CertificateKind kind;
  std::pair<int, int> pair;
  Ratio bound;  // 1/2 for exact-half certificates, 1/3 for almost twins
};

const char* certificate_kind_name(CertificateKind k);

// Strict down-set and up-set of an element, as masks (L_x, U_x).
std::pair<Mask, Mask> strict_down_up(const Poset& p, int x);

// Twins: identical strict down-sets and identical strict up-sets.
bool is_twin_pair(const Poset& p, int x, int y);

// Almost twins: equal strict down-sets with both up-set differences chains,
// jointly in P or jointly in the dual of P.
bool is_almost_twin_pair(const Poset& p, int x, int y);

// All unordered twin / almost-twin pairs {x < y}, sorted. Twin pairs are
// included among almost twins.
std::vector<std::pair<int, int>> twin_pairs(const Poset& p);
std::vector<std::pair<int, int>> almost_twin_pairs(const Poset& p);

// Full lists of order automorphisms / anti-automorphisms, sorted by image
// vector. Refuses posets with more than kMaxMorphismN elements.
std::vector<Morphism> automorphisms(const Poset& p);
std::vector<Morphism> anti_automorphisms(const Poset& p);

// Unordered pairs {x < y} swapped by some automorphism, sorted.
std::vector<std::pair<int, int>> two_cycle_automorphism_pairs(const Poset& p);

// Inversions (pi_i, pi_j) of a permutation (reported as value pairs with
// pi_i > pi_j, i < j) such that no third entry forms a 312 or 231 pattern
// with the inversion. Computed by the interval characterisation: the entries
// strictly between the two positions are exactly the values strictly between
// the two values.
std::vector<std::pair<int, int>> inversion_pattern_pairs(
    const std::vector<int>& pi);

// The same set computed literally by scanning all 3-element subsequences;
// used as a cross-check of the characterisation.
std::vector<std::pair<int, int>> inversion_pattern_pairs_by_scan(
    const std::vector<int>& pi);

}  // namespace balance
