#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balance/config.hpp"

namespace balance {

// A set of elements encoded as bits 0..n-1 of a 64-bit word.
using Mask = std::uint64_t;

// A finite partial order on elements 1..n. The strict relation is stored
// transitively closed as per-element bitmasks (0-based bits); `covers` is the
// derived transitive reduction, kept sorted lexicographically with 1-based
// endpoints. `labels` are display names, defaulting to "1".."n".
struct Poset {
  int n = 0;
  std::vector<Mask> up;  // up[i] = set of elements strictly above element i+1
  std::vector<Mask> dn;  // dn[i] = set of elements strictly below element i+1
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;

  // Strict order test, 1-based: true iff x < y in the poset.
  bool less(int x, int y) const;
  bool comparable(int x, int y) const;
  const std::string& label(int x) const;
  // Finds the element carrying a label, if any (first match).
  std::optional<int> element_by_label(const std::string& name) const;
};

// Structural equality: same size and same strict relation. Labels are
// intentionally ignored.
bool operator==(const Poset& a, const Poset& b);

// Builds a poset from cover-style generator pairs (x, y) meaning x < y.
// The pairs may contain redundant (implied) relations; the stored `covers`
// are always the transitive reduction. Throws std::invalid_argument on
// out-of-range endpoints, x == y, n outside [0, kMaxElements], or a cycle
// (the message names one offending cycle). Labels default to "1".."n".
Poset from_covers(int n, const std::vector<std::pair<int, int>>& pairs,
                  std::vector<std::string> labels = {});

// Builds a poset directly from transitively closed up-masks. Throws if the
// masks are not a strict partial order (irreflexive, antisymmetric,
// transitive).
Poset from_relation(int n, const std::vector<Mask>& up,
                    std::vector<std::string> labels = {});

// Order-theoretic dual: x < y in dual(P) iff y < x in P. Keeps labels.
Poset dual(const Poset& p);

// True iff every pair of distinct elements is comparable. Empty and
// one-element posets count as chains.
bool is_chain(const Poset& p);

// Width = size of a largest antichain (computed by minimum chain cover via
// bipartite matching).
int width(const Poset& p);

// The two-dimensional poset of a permutation pi (one-line notation over
// 1..n): x < y iff x < y as integers and x appears before y in pi.
Poset from_permutation(const std::vector<int>& pi);

// Product of two chains: elements are the cells (i, j), 1 <= i <= m,
// 1 <= j <= n, numbered row-major ((i-1)*n + j) and ordered componentwise.
// Labels are "(i,j)".
Poset chain_product(int m, int n);

// An n-element antichain / chain (1 < 2 < ... < n).
Poset antichain(int n);
Poset chain(int n);

// Renames elements: element x of `p` becomes image[x-1] in the result.
// `image` must be a permutation of 1..n. Labels travel with the elements.
Poset relabel(const Poset& p, const std::vector<int>& image);

// Height of each element (longest chain strictly below it), 1-based index 0
// unused is avoided: result[i] is the height of element i+1.
std::vector<int> heights(const Poset& p);

// True iff `m` is a down-set (order ideal) of `p`.
bool is_down_set(const Poset& p, Mask m);

// All down-sets of `p`, sorted by (popcount, numeric value). Throws if the
// count would exceed `limit`.
std::vector<Mask> all_down_sets(const Poset& p,
                                std::size_t limit = (std::size_t)1 << 26);

}  // namespace balance
