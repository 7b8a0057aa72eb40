#include "balance/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace balance {

namespace {

// Bit rows are compared as bit STRINGS read from bit 0: the first differing
// position decides, and the row holding a 0 there is smaller.
inline bool row_less(Mask a, Mask b) {
  Mask x = a ^ b;
  if (!x) return false;
  Mask lsb = x & (~x + 1);
  return (b & lsb) != 0;
}

bool rows_less(const std::vector<Mask>& a, const std::vector<Mask>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return row_less(a[i], b[i]);
  }
  return false;
}

// Branch-and-bound search for the element order whose row-major relation
// matrix bit string is lexicographically minimal.
struct Canonicalizer {
  const Poset& p;
  int n;
  std::vector<Mask> best_rows;
  std::vector<int> ord;        // ord[i] = 0-based element at position i
  std::vector<Mask> rows;      // partial matrix rows over placed columns
  Mask placed = 0;

  explicit Canonicalizer(const Poset& poset)
      : p(poset), n(poset.n), ord(poset.n, -1), rows(poset.n, 0) {
    // Initial incumbent: all ones off the diagonal (worse than any real
    // relation matrix), so the first leaf found becomes the incumbent.
    Mask full = n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1);
    best_rows.assign(n, 0);
    for (int i = 0; i < n; ++i) best_rows[i] = full & ~(Mask(1) << i);
  }

  bool rel(int a, int b) const { return (p.up[a] >> b) & 1; }

  // Could some completion of the current prefix beat the incumbent? Scans
  // the matrix row-major, treating undecided cells optimistically as 0.
  bool might_improve(int depth) const {
    Mask known = (depth == 64) ? ~Mask(0) : ((Mask(1) << depth) - 1);
    Mask all = (n == 64) ? ~Mask(0) : ((Mask(1) << n) - 1);
    for (int i = 0; i < n; ++i) {
      Mask inc = best_rows[i];
      if (i < depth) {
        Mask diff = (rows[i] ^ inc) & known;
        if (diff) {
          Mask lsb = diff & (~diff + 1);
          // Incumbent has the 1 at the first difference => prefix is
          // strictly smaller there; otherwise the prefix is already worse.
          return (inc & lsb) != 0;
        }
        if (inc & all & ~known) return true;  // optimistic 0 beats a 1
      } else {
        if (inc & all) return true;
      }
    }
    return false;  // every completion ties or loses
  }

  void place(int depth, int x) {
    for (int i = 0; i < depth; ++i)
      if (rel(ord[i], x)) rows[i] |= Mask(1) << depth;
    Mask row = 0;
    for (int j = 0; j < depth; ++j)
      if (rel(x, ord[j])) row |= Mask(1) << j;
    rows[depth] = row;
    ord[depth] = x;
    placed |= Mask(1) << x;
  }

  void unplace(int depth, int x) {
    for (int i = 0; i < depth; ++i) rows[i] &= ~(Mask(1) << depth);
    rows[depth] = 0;
    ord[depth] = -1;
    placed &= ~(Mask(1) << x);
  }

  void dfs(int depth) {
    if (depth == n) {
      if (rows_less(rows, best_rows)) best_rows = rows;
      return;
    }
    if (!might_improve(depth)) return;
    // Candidates: unplaced elements, skipping all but the smallest of each
    // twin family (twins are interchangeable by an automorphism).
    std::vector<int> cands;
    for (int x = 0; x < n; ++x) {
      if ((placed >> x) & 1) continue;
      bool twin_skipped = false;
      for (int y = 0; y < x && !twin_skipped; ++y)
        if (!((placed >> y) & 1) && p.dn[y] == p.dn[x] && p.up[y] == p.up[x])
          twin_skipped = true;
      if (!twin_skipped) cands.push_back(x);
    }
    // Heuristic order: greedily prefer the candidate whose newly decided
    // cells (column then row) read as the smallest bit string.
    std::vector<std::pair<std::pair<Mask, Mask>, int>> keyed;
    keyed.reserve(cands.size());
    for (int x : cands) {
      Mask colbits = 0, rowbits = 0;
      for (int i = 0; i < depth; ++i) {
        if (rel(ord[i], x)) colbits |= Mask(1) << i;
        if (rel(x, ord[i])) rowbits |= Mask(1) << i;
      }
      keyed.push_back({{colbits, rowbits}, x});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first.first != b.first.first)
        return row_less(a.first.first, b.first.first);
      if (a.first.second != b.first.second)
        return row_less(a.first.second, b.first.second);
      return a.second < b.second;
    });
    for (const auto& [key, x] : keyed) {
      place(depth, x);
      dfs(depth + 1);
      unplace(depth, x);
    }
  }
};

std::string key_from_rows(int n, const std::vector<Mask>& rows) {
  std::string key;
  key.reserve(1 + 8 * n);
  key.push_back((char)(unsigned char)n);
  for (Mask row : rows)
    for (int b = 0; b < 8; ++b) key.push_back((char)((row >> (8 * b)) & 255));
  return key;
}

std::string hex_of(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

}  // namespace

CanonicalPoset canonical_form(const Poset& p) {
  if (p.n > kMaxMorphismN)
    throw std::invalid_argument(
        "poset too large for canonicalisation (cap " +
        std::to_string(kMaxMorphismN) + " elements)");
  Canonicalizer canon(p);
  canon.dfs(0);
  CanonicalPoset out;
  out.poset = from_relation(p.n, canon.best_rows);
  out.key = key_from_rows(p.n, canon.best_rows);
  return out;
}

std::string canonical_key(const Poset& p) { return canonical_form(p).key; }

std::string canonical_key_hex(const Poset& p) {
  return hex_of(canonical_form(p).key);
}

bool isomorphic(const Poset& a, const Poset& b) {
  if (a.n != b.n) return false;
  return canonical_key(a) == canonical_key(b);
}

std::vector<CanonicalPoset> enumerate_posets(int n, int max_n) {
  if (max_n > kHardMaxSearchN)
    throw std::invalid_argument("enumeration cap may not exceed " +
                                std::to_string(kHardMaxSearchN));
  if (n < 1 || n > max_n)
    throw std::invalid_argument(
        "enumeration requires 1 <= n <= " + std::to_string(max_n) +
        " (raise the cap explicitly for larger n)");
  // Level 1: the one-element poset.
  std::vector<CanonicalPoset> level;
  level.push_back(canonical_form(antichain(1)));
  for (int t = 2; t <= n; ++t) {
    std::vector<CanonicalPoset> next;
    std::unordered_set<std::string> seen;
    for (const CanonicalPoset& rep : level) {
      const Poset& base = rep.poset;
      // Extend by a new maximal element whose strict down-set runs over all
      // down-sets of the base. Every t-element poset arises this way:
      // delete any maximal element and what remains is a (t-1)-element
      // poset in which the deleted element's down-set is a down-set.
      for (Mask d : all_down_sets(base)) {
        std::vector<Mask> up(base.up);
        up.push_back(0);
        for (Mask m = d; m; m &= m - 1)
          up[std::countr_zero(m)] |= Mask(1) << (t - 1);
        Poset grown = from_relation(t, up);
        CanonicalPoset canon = canonical_form(grown);
        if (seen.insert(canon.key).second) next.push_back(std::move(canon));
      }
    }
    level = std::move(next);
  }
  return level;
}

ScanReport conjecture_scan(int n, const ScanHooks& hooks, int max_n) {
  ScanReport report;
  report.n = n;
  const Ratio one_third(1, 3);
  for (CanonicalPoset& rep : enumerate_posets(n, max_n)) {
    ++report.classes;
    if (hooks.skip && hooks.skip(hex_of(rep.key))) {
      ++report.skipped;
      continue;
    }
    ScanClass entry;
    entry.poset = rep.poset;
    entry.key = rep.key;
    entry.chain = is_chain(rep.poset);
    entry.width = width(rep.poset);
    entry.delta = balance_constant(rep.poset).delta;
    ++report.histogram[entry.delta];
    if (entry.chain) {
      ++report.chains;
    } else {
      if (!report.min_nonchain_delta || entry.delta < *report.min_nonchain_delta) {
        report.min_nonchain_delta = entry.delta;
        report.min_witness = rep.poset;
      }
      if (entry.delta < one_third) report.below_third.push_back(rep.poset);
      if (entry.delta == one_third) {
        report.one_third.push_back(rep.poset);
        if (!is_linear_sum_of_singletons_and_t(rep.poset))
          report.one_third_irregular.push_back(rep.poset);
      }
    }
    if (hooks.on_class) hooks.on_class(entry);
  }
  return report;
}

std::optional<std::pair<Ratio, CanonicalPoset>> min_delta_by_width(
    int n, int min_width, int max_n) {
  std::optional<std::pair<Ratio, CanonicalPoset>> best;
  for (CanonicalPoset& rep : enumerate_posets(n, max_n)) {
    if (is_chain(rep.poset)) continue;
    if (width(rep.poset) < min_width) continue;
    Ratio delta = balance_constant(rep.poset).delta;
    if (!best || delta < best->first) best = {delta, rep};
  }
  return best;
}

bool is_linear_sum_of_singletons_and_t(const Poset& p) {
  if (p.n == 0) return true;
  Mask all = p.n == 64 ? ~Mask(0) : ((Mask(1) << p.n) - 1);
  // Connected components of the incomparability graph.
  std::vector<int> comp_of(p.n, -1);
  std::vector<Mask> comps;
  for (int start = 0; start < p.n; ++start) {
    if (comp_of[start] >= 0) continue;
    Mask comp = 0, frontier = Mask(1) << start;
    while (frontier) {
      comp |= frontier;
      Mask grow = 0;
      for (Mask m = frontier; m; m &= m - 1) {
        int x = std::countr_zero(m);
        comp_of[x] = (int)comps.size();
        grow |= all & ~(p.up[x] | p.dn[x] | (Mask(1) << x));
      }
      frontier = grow & ~comp;
    }
    comps.push_back(comp);
  }
  // Cross-component pairs are automatically comparable; the orientation must
  // be uniform for the sum to be ordinal.
  int k = (int)comps.size();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      int dir = 0;  // +1: every a-element below every b-element; -1: reverse
      for (Mask ma = comps[a]; ma; ma &= ma - 1) {
        int x = std::countr_zero(ma);
        for (Mask mb = comps[b]; mb; mb &= mb - 1) {
          int y = std::countr_zero(mb);
          int d = ((p.up[x] >> y) & 1) ? 1 : -1;
          if (dir == 0)
            dir = d;
          else if (dir != d)
            return false;
        }
      }
    }
  // Each block must be a singleton or the three-element poset with exactly
  // one strict relation.
  for (Mask comp : comps) {
    int size = std::popcount(comp);
    if (size == 1) continue;
    if (size != 3) return false;
    int relations = 0;
    for (Mask m = comp; m; m &= m - 1) {
      int x = std::countr_zero(m);
      relations += std::popcount(p.up[x] & comp);
    }
    if (relations != 1) return false;
  }
  return true;
}

}  // namespace balance
