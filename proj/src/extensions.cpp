#include "balance/extensions.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace balance {

namespace {

// f(D) = number of linear extensions of the subposet induced on the down-set
// D, computed by deleting maximal elements. Memoised per call. Instantiated
// with std::uint64_t for posets of at most 20 elements (20! < 2^63, and
// every memo value is at most the total) and with BigInt beyond that.
template <class Int>
Int count_down_set(const Poset& p, Mask d,
                   std::unordered_map<Mask, Int>& memo) {
  if (d == 0) return 1;
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  Int total = 0;
  for (Mask m = d; m; m &= m - 1) {
    int x = std::countr_zero(m);
    // x is maximal in D iff nothing above x lies in D.
    if (p.up[x] & d) continue;
    total += count_down_set(p, d & ~(Mask(1) << x), memo);
  }
  memo.emplace(d, total);
  return total;
}

Mask full_mask(int n) { return n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1); }

constexpr int kSmallCountN = 20;

std::uint64_t count_extensions_u64(const Poset& p) {
  std::unordered_map<Mask, std::uint64_t> memo;
  return count_down_set<std::uint64_t>(p, full_mask(p.n), memo);
}

// Dense all-pairs counts for small posets: every linear extension splits
// uniquely at the position of any element x into a prefix (a down-set D with
// x maximal) and a suffix (the complementary up-set), so the number of
// extensions placing x before y is the sum of f(D \ {x}) * r(~D) over
// down-sets D containing x as a maximal element but not y. One pass over all
// element masks fills the f (down-set) and r (up-set) tables; a second pass
// accumulates the pair matrix. Counts stay below 16! so std::uint64_t is
// exact.
constexpr int kDensePairN = 16;

struct DensePairCounts {
  std::uint64_t total = 0;
  std::vector<std::vector<std::uint64_t>> before;  // [x][y], 0-based
};

DensePairCounts pair_counts_dense(const Poset& p) {
  int n = p.n;
  std::size_t size = std::size_t(1) << n;
  Mask all = full_mask(n);
  std::vector<std::uint64_t> down(size, 0), up(size, 0);
  down[0] = 1;
  up[0] = 1;
  for (std::size_t m = 1; m < size; ++m) {
    bool is_down = true, is_up = true;
    for (Mask t = (Mask)m; t && (is_down || is_up); t &= t - 1) {
      int x = std::countr_zero(t);
      if (p.dn[x] & ~(Mask)m) is_down = false;
      if (p.up[x] & ~(Mask)m) is_up = false;
    }
    if (is_down) {
      std::uint64_t total = 0;
      for (Mask t = (Mask)m; t; t &= t - 1) {
        int x = std::countr_zero(t);
        if (p.up[x] & (Mask)m) continue;  // not maximal in the down-set
        total += down[m & ~(std::size_t(1) << x)];
      }
      down[m] = total;
    }
    if (is_up) {
      std::uint64_t total = 0;
      for (Mask t = (Mask)m; t; t &= t - 1) {
        int x = std::countr_zero(t);
        if (p.dn[x] & (Mask)m) continue;  // not minimal in the up-set
        total += up[m & ~(std::size_t(1) << x)];
      }
      up[m] = total;
    }
  }
  DensePairCounts out;
  out.total = down[all];
  out.before.assign(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t m = 1; m < size; ++m) {
    if (down[m] == 0) continue;  // not a down-set
    Mask rest = all & ~(Mask)m;
    std::uint64_t suffix = up[rest];
    for (Mask t = (Mask)m; t; t &= t - 1) {
      int x = std::countr_zero(t);
      if (p.up[x] & (Mask)m) continue;  // not maximal: no split at x here
      std::uint64_t ways = down[m & ~(std::size_t(1) << x)] * suffix;
      for (Mask u = rest; u; u &= u - 1) out.before[x][std::countr_zero(u)] += ways;
    }
  }
  return out;
}

}  // namespace

BigInt count_extensions(const Poset& p) {
  if (p.n <= kSmallCountN) return BigInt(count_extensions_u64(p));
  std::unordered_map<Mask, BigInt> memo;
  return count_down_set<BigInt>(p, full_mask(p.n), memo);
}

Poset add_relation(const Poset& p, int x, int y) {
  if (x < 1 || x > p.n || y < 1 || y > p.n || x == y)
    throw std::invalid_argument("add_relation needs two distinct elements");
  if (p.less(y, x))
    throw std::invalid_argument("adding the relation would create a cycle");
  if (p.less(x, y)) return p;
  // New pairs: everything at or below x precedes everything at or above y.
  std::vector<Mask> up = p.up;
  Mask below = p.dn[x - 1] | (Mask(1) << (x - 1));
  Mask above = p.up[y - 1] | (Mask(1) << (y - 1));
  for (Mask m = below; m; m &= m - 1) up[std::countr_zero(m)] |= above;
  return from_relation(p.n, up, p.labels);
}

void for_each_extension(
    const Poset& p,
    const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> word;
  word.reserve(p.n);
  Mask placed = 0;
  // Depth-first, always trying the smallest eligible element next: this
  // yields lexicographic order of the one-line sequences.
  std::function<bool()> rec = [&]() -> bool {
    if ((int)word.size() == p.n) return visit(word);
    for (int x = 0; x < p.n; ++x) {
      Mask bit = Mask(1) << x;
      if ((placed & bit) || (p.dn[x] & ~placed)) continue;
      placed |= bit;
      word.push_back(x + 1);
      bool keep_going = rec();
      word.pop_back();
      placed &= ~bit;
      if (!keep_going) return false;
    }
    return true;
  };
  rec();
}

std::vector<std::vector<int>> enumerate_extensions(const Poset& p,
                                                   long long limit) {
  std::vector<std::vector<int>> out;
  bool overflow = false;
  for_each_extension(p, [&](const std::vector<int>& w) {
    if ((long long)out.size() >= limit) {
      overflow = true;
      return false;
    }
    out.push_back(w);
    return true;
  });
  if (overflow)
    throw std::invalid_argument(
        "poset has more than " + std::to_string(limit) +
        " linear extensions; use for_each_extension to stream them");
  return out;
}

ExtensionStats pair_matrix(const Poset& p) {
  ExtensionStats stats;
  if (p.n <= kDensePairN) {
    DensePairCounts dense = pair_counts_dense(p);
    stats.total = BigInt(dense.total);
    stats.pair_counts.assign(p.n, std::vector<BigInt>(p.n, BigInt(0)));
    for (int x = 0; x < p.n; ++x)
      for (int y = 0; y < p.n; ++y)
        if (x != y) stats.pair_counts[x][y] = BigInt(dense.before[x][y]);
    return stats;
  }
  stats.total = count_extensions(p);
  stats.pair_counts.assign(p.n, std::vector<BigInt>(p.n, BigInt(0)));
  for (int x = 1; x <= p.n; ++x)
    for (int y = 1; y <= p.n; ++y) {
      if (x == y) continue;
      if (p.less(x, y)) {
        stats.pair_counts[x - 1][y - 1] = stats.total;
      } else if (p.less(y, x)) {
        stats.pair_counts[x - 1][y - 1] = 0;
      } else if (x < y) {
        // One DP per unordered incomparable pair; the mirror entry follows
        // from the pair-sum identity e(P+xy) + e(P+yx) = e(P).
        BigInt before = count_extensions(add_relation(p, x, y));
        stats.pair_counts[x - 1][y - 1] = before;
        stats.pair_counts[y - 1][x - 1] = stats.total - before;
      }
    }
  return stats;
}

Ratio prob_before(const Poset& p, int x, int y) {
  if (x < 1 || x > p.n || y < 1 || y > p.n)
    throw std::invalid_argument("element out of range");
  if (x == y)
    throw std::invalid_argument("prob_before needs two distinct elements");
  if (p.less(x, y)) return Ratio(1);
  if (p.less(y, x)) return Ratio(0);
  BigInt total = count_extensions(p);
  BigInt before = count_extensions(add_relation(p, x, y));
  return Ratio(before, total);
}

BalanceReport balance_constant(const Poset& p) {
  BalanceReport report;
  report.delta = Ratio(0);
  ExtensionStats stats = pair_matrix(p);
  for (int x = 1; x <= p.n; ++x)
    for (int y = 1; y <= p.n; ++y) {
      if (x == y || p.comparable(x, y)) continue;
      const BigInt& before = stats.pair_counts[x - 1][y - 1];
      const BigInt& after = stats.pair_counts[y - 1][x - 1];
      Ratio value(before < after ? before : after, stats.total);
      if (value > report.delta) {
        report.delta = value;
        report.witness = {x, y};
      }
      if (x < y) {
        Ratio prob(before, stats.total);
        if (prob >= Ratio(1, 3) && prob <= Ratio(2, 3))
          report.third_balanced_pairs.emplace_back(x, y);
      }
    }
  return report;
}

bool is_alpha_balanced(const Poset& p, int x, int y, const Ratio& alpha) {
  if (alpha < 0 || alpha > Ratio(1, 2))
    throw std::invalid_argument("alpha must lie in [0, 1/2]");
  Ratio prob = prob_before(p, x, y);
  return prob >= alpha && prob <= 1 - alpha;
}

}  // namespace balance
