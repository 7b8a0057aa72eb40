#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balance/extensions.hpp"
#include "balance/poset.hpp"
#include "balance/rational.hpp"

namespace balance {

// A poset relabelled into its canonical form, plus the canonical key (a
// compact serialisation of the relabelled relation) used for isomorphism
// tests and de-duplication.
struct CanonicalPoset {
  Poset poset;
  std::string key;  // n byte followed by the relation rows, little-endian
};

// Canonical form: the relabelling whose row-major relation-matrix bit string
// is lexicographically minimal, found by branch-and-bound over placements
// with prefix pruning and twin pruning. Refuses posets larger than
// kMaxMorphismN.
CanonicalPoset canonical_form(const Poset& p);
std::string canonical_key(const Poset& p);
std::string canonical_key_hex(const Poset& p);

bool isomorphic(const Poset& a, const Poset& b);

// All isomorphism classes of n-element posets, one canonical representative
// each, in a deterministic order. Guarded: requires 1 <= n <= max_n and
// max_n <= kHardMaxSearchN.
std::vector<CanonicalPoset> enumerate_posets(int n,
                                             int max_n = kDefaultMaxSearchN);

// Per-class scan record.
struct ScanClass {
  Poset poset;      // canonical representative
  std::string key;  // canonical key (binary)
  Ratio delta;
  int width = 0;
  bool chain = false;
};

// Optional scan hooks: `skip` suppresses analysis of classes whose canonical
// hex key it accepts (they are counted as skipped); `on_class` observes each
// analysed class in stream order.
struct ScanHooks {
  std::function<bool(const std::string& hex_key)> skip;
  std::function<void(const ScanClass&)> on_class;
};

struct ScanReport {
  int n = 0;
  long long classes = 0;  // total isomorphism classes of size n
  long long chains = 0;   // among analysed classes
  long long skipped = 0;
  std::optional<Ratio> min_nonchain_delta;
  std::optional<Poset> min_witness;
  // Non-chain classes with delta < 1/3 (conjecturally none).
  std::vector<Poset> below_third;
  // Classes with delta == 1/3 exactly.
  std::vector<Poset> one_third;
  // delta == 1/3 classes that are NOT linear sums of singletons and the
  // three-element poset with a single relation; reported rather than
  // silently dropped.
  std::vector<Poset> one_third_irregular;
  // delta -> number of analysed classes attaining it.
  std::map<Ratio, long long> histogram;
};

// Exhaustive balance-constant scan over all isomorphism classes of
// n-element posets.
ScanReport conjecture_scan(int n, const ScanHooks& hooks = {},
                           int max_n = kDefaultMaxSearchN);

// Minimum balance constant over non-chain classes of exactly n elements with
// width >= min_width, with a canonical witness. Empty when no class
// qualifies.
std::optional<std::pair<Ratio, CanonicalPoset>> min_delta_by_width(
    int n, int min_width, int max_n = kDefaultMaxSearchN);

// True iff the poset is an ordinal (linear) sum of blocks, each either a
// singleton or isomorphic to the three-element poset with exactly one
// relation (a < b plus an incomparable element).
bool is_linear_sum_of_singletons_and_t(const Poset& p);

}  // namespace balance
