#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "balance/poset.hpp"
#include "balance/rational.hpp"

namespace balance {

// Exact linear-extension census of a poset: the total count and, for every
// ordered pair (x, y), the number of extensions placing x before y.
struct ExtensionStats {
  BigInt total;
  // pair_counts[x-1][y-1] = #extensions with x before y; diagonal is 0.
  std::vector<std::vector<BigInt>> pair_counts;
};

// The balance constant of a poset together with its evidence.
struct BalanceReport {
  // delta = max over pairs of min{Pr(x before y), Pr(y before x)}; 0 for
  // chains (and for posets with < 2 elements).
  Ratio delta;
  // A pair attaining delta when delta > 0 (always incomparable). Ties are
  // broken by the lexicographically smallest ordered pair.
  std::optional<std::pair<int, int>> witness;
  // All unordered pairs {x < y} with 1/3 <= Pr(x before y) <= 2/3, sorted.
  std::vector<std::pair<int, int>> third_balanced_pairs;
};

// Number of linear extensions, via dynamic programming over down-sets.
BigInt count_extensions(const Poset& p);

// The poset P + xy: P extended by the relation x < y (and its transitive
// consequences). Throws if y < x already holds. P + xy = P when x < y holds.
Poset add_relation(const Poset& p, int x, int y);

// Streams linear extensions in lexicographic order of their one-line element
// sequences. The visitor returns false to stop early.
void for_each_extension(
    const Poset& p,
    const std::function<bool(const std::vector<int>&)>& visit);

// Materialises extensions in lexicographic order. Throws if the poset has
// more than `limit` extensions.
std::vector<std::vector<int>> enumerate_extensions(
    const Poset& p, long long limit = kEnumerationLimit);

// Full pairwise census. For incomparable pairs the count comes from a
// dedicated down-set DP on the augmented poset P + xy; comparable pairs are
// filled directly (x < y gives the total, y < x gives zero).
ExtensionStats pair_matrix(const Poset& p);

// Pr(x before y) as an exact rational. Throws if x == y or out of range.
Ratio prob_before(const Poset& p, int x, int y);

// Balance constant with witness (see BalanceReport).
BalanceReport balance_constant(const Poset& p);

// True iff alpha <= Pr(x before y) <= 1 - alpha. Requires 0 <= alpha <= 1/2
// and x != y; symmetric in x and y.
bool is_alpha_balanced(const Poset& p, int x, int y, const Ratio& alpha);

}  // namespace balance
