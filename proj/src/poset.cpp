#include "balance/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

namespace balance {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

void check_element_range(const Poset& p, int x, const char* what) {
  if (x < 1 || x > p.n)
    throw std::invalid_argument(std::string(what) + " out of range: " +
                                std::to_string(x));
}

// Derives the transitive reduction (cover pairs, 1-based, sorted) from
// closed up-masks.
std::vector<std::pair<int, int>> derive_covers(int n,
                                               const std::vector<Mask>& up) {
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < n; ++x) {
    Mask above = up[x];
    for (Mask m = above; m; m &= m - 1) {
      int y = std::countr_zero(m);
      // y covers x iff no z sits strictly between them (z above x, y above z).
      bool has_mid = false;
      for (Mask t = above & ~(Mask(1) << y); t; t &= t - 1) {
        int z = std::countr_zero(t);
        if (up[z] & (Mask(1) << y)) {
          has_mid = true;
          break;
        }
      }
      if (!has_mid) covers.emplace_back(x + 1, y + 1);
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

std::vector<Mask> down_masks_from_up(int n, const std::vector<Mask>& up) {
  std::vector<Mask> dn(n, 0);
  for (int x = 0; x < n; ++x)
    for (Mask m = up[x]; m; m &= m - 1)
      dn[std::countr_zero(m)] |= Mask(1) << x;
  return dn;
}

Poset build_from_closed_up(int n, std::vector<Mask> up,
                           std::vector<std::string> labels) {
  Poset p;
  p.n = n;
  p.dn = down_masks_from_up(n, up);
  p.up = std::move(up);
  p.covers = derive_covers(n, p.up);
  p.labels = labels.empty() ? default_labels(n) : std::move(labels);
  if ((int)p.labels.size() != n)
    throw std::invalid_argument("labels must have exactly n entries");
  return p;
}

}  // namespace

bool Poset::less(int x, int y) const {
  check_element_range(*this, x, "element");
  check_element_range(*this, y, "element");
  return (up[x - 1] >> (y - 1)) & 1;
}

bool Poset::comparable(int x, int y) const {
  return less(x, y) || less(y, x);
}

const std::string& Poset::label(int x) const {
  check_element_range(*this, x, "element");
  return labels[x - 1];
}

std::optional<int> Poset::element_by_label(const std::string& name) const {
  for (int i = 0; i < n; ++i)
    if (labels[i] == name) return i + 1;
  return std::nullopt;
}

bool operator==(const Poset& a, const Poset& b) {
  return a.n == b.n && a.up == b.up;
}

Poset from_covers(int n, const std::vector<std::pair<int, int>>& pairs,
                  std::vector<std::string> labels) {
  if (n < 0 || n > kMaxElements)
    throw std::invalid_argument("element count must be between 0 and " +
                                std::to_string(kMaxElements));
  std::vector<Mask> direct(n, 0);
  for (auto [x, y] : pairs) {
    if (x < 1 || x > n || y < 1 || y > n)
      throw std::invalid_argument("cover endpoint out of range: (" +
                                  std::to_string(x) + "," + std::to_string(y) +
                                  ")");
    if (x == y)
      throw std::invalid_argument("cover relates an element to itself: " +
                                  std::to_string(x));
    direct[x - 1] |= Mask(1) << (y - 1);
  }
  // Cycle detection by DFS; reports one offending cycle.
  std::vector<int> state(n, 0);  // 0 = new, 1 = on stack, 2 = done
  std::vector<int> stack, parent_pos(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root]) continue;
    std::vector<std::pair<int, Mask>> dfs{{root, direct[root]}};
    state[root] = 1;
    stack = {root};
    while (!dfs.empty()) {
      auto& [v, rest] = dfs.back();
      if (!rest) {
        state[v] = 2;
        stack.pop_back();
        dfs.pop_back();
        continue;
      }
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      if (state[w] == 1) {
        std::string msg = "covers contain a cycle: ";
        auto it = std::find(stack.begin(), stack.end(), w);
        for (; it != stack.end(); ++it)
          msg += std::to_string(*it + 1) + " -> ";
        msg += std::to_string(w + 1);
        throw std::invalid_argument(msg);
      }
      if (state[w] == 0) {
        state[w] = 1;
        stack.push_back(w);
        dfs.emplace_back(w, direct[w]);
      }
    }
  }
  // Transitive closure in reverse topological order.
  std::vector<int> order;  // topological: all successors appear later
  {
    std::vector<int> indeg(n, 0);
    for (int x = 0; x < n; ++x)
      for (Mask m = direct[x]; m; m &= m - 1) ++indeg[std::countr_zero(m)];
    std::vector<int> queue;
    for (int x = 0; x < n; ++x)
      if (!indeg[x]) queue.push_back(x);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      order.push_back(v);
      for (Mask m = direct[v]; m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (--indeg[w] == 0) queue.push_back(w);
      }
    }
  }
  std::vector<Mask> up(direct);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (Mask m = direct[v]; m; m &= m - 1) up[v] |= up[std::countr_zero(m)];
  }
  return build_from_closed_up(n, std::move(up), std::move(labels));
}

Poset from_relation(int n, const std::vector<Mask>& up,
                    std::vector<std::string> labels) {
  if (n < 0 || n > kMaxElements)
    throw std::invalid_argument("element count must be between 0 and " +
                                std::to_string(kMaxElements));
  if ((int)up.size() != n)
    throw std::invalid_argument("relation must have exactly n rows");
  Mask all = n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1);
  for (int x = 0; x < n; ++x) {
    if (up[x] & ~all)
      throw std::invalid_argument("relation row mentions elements beyond n");
    if ((up[x] >> x) & 1)
      throw std::invalid_argument("relation is not irreflexive at element " +
                                  std::to_string(x + 1));
    for (Mask m = up[x]; m; m &= m - 1) {
      int y = std::countr_zero(m);
      if ((up[y] >> x) & 1)
        throw std::invalid_argument("relation is not antisymmetric on (" +
                                    std::to_string(x + 1) + "," +
                                    std::to_string(y + 1) + ")");
      if (up[y] & ~up[x])
        throw std::invalid_argument("relation is not transitively closed at " +
                                    std::to_string(x + 1));
    }
  }
  return build_from_closed_up(n, up, std::move(labels));
}

Poset dual(const Poset& p) {
  Poset d;
  d.n = p.n;
  d.up = p.dn;
  d.dn = p.up;
  d.covers = derive_covers(p.n, d.up);
  d.labels = p.labels;
  return d;
}

bool is_chain(const Poset& p) {
  for (int x = 0; x < p.n; ++x)
    if ((int)std::popcount(p.up[x] | p.dn[x]) != p.n - 1) return false;
  return true;
}

namespace {

// Kuhn's augmenting-path matching on the comparability DAG: left vertex x is
// connected to right vertex y when x < y. Width = n - maximum matching.
bool try_kuhn(const Poset& p, int x, std::vector<int>& match_right,
              std::vector<char>& used) {
  for (Mask m = p.up[x]; m; m &= m - 1) {
    int y = std::countr_zero(m);
    if (used[y]) continue;
    used[y] = 1;
    if (match_right[y] < 0 || try_kuhn(p, match_right[y], match_right, used)) {
      match_right[y] = x;
      return true;
    }
  }
  return false;
}

}  // namespace

int width(const Poset& p) {
  std::vector<int> match_right(p.n, -1);
  int matched = 0;
  for (int x = 0; x < p.n; ++x) {
    std::vector<char> used(p.n, 0);
    if (try_kuhn(p, x, match_right, used)) ++matched;
  }
  return p.n - matched;
}

Poset from_permutation(const std::vector<int>& pi) {
  int n = (int)pi.size();
  if (n > kMaxElements)
    throw std::invalid_argument("permutation too long");
  std::vector<int> pos(n + 1, 0);
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = pi[i];
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument(
          "input is not a permutation of 1..n in one-line notation");
    seen[v] = 1;
    pos[v] = i;
  }
  std::vector<Mask> up(n, 0);
  for (int x = 1; x <= n; ++x)
    for (int y = x + 1; y <= n; ++y)
      if (pos[x] < pos[y]) up[x - 1] |= Mask(1) << (y - 1);
  return from_relation(n, up);
}

Poset chain_product(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("chain lengths must be >= 1");
  if (m > kMaxElements || n > kMaxElements || m * n > kMaxElements)
    throw std::invalid_argument("product has more than " +
                                std::to_string(kMaxElements) + " elements");
  int total = m * n;
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  std::vector<Mask> up(total, 0);
  std::vector<std::string> labels(total);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      labels[idx(i, j)] =
          "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      for (int a = i; a <= m; ++a)
        for (int b = j; b <= n; ++b)
          if (a != i || b != j) up[idx(i, j)] |= Mask(1) << idx(a, b);
    }
  return from_relation(total, up, std::move(labels));
}

Poset antichain(int n) { return from_covers(n, {}); }

Poset chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

Poset relabel(const Poset& p, const std::vector<int>& image) {
  if ((int)image.size() != p.n)
    throw std::invalid_argument("relabelling must cover all elements");
  std::vector<char> seen(p.n + 1, 0);
  for (int v : image) {
    if (v < 1 || v > p.n || seen[v])
      throw std::invalid_argument("relabelling is not a permutation of 1..n");
    seen[v] = 1;
  }
  std::vector<Mask> up(p.n, 0);
  std::vector<std::string> labels(p.n);
  for (int x = 0; x < p.n; ++x) {
    labels[image[x] - 1] = p.labels[x];
    for (Mask m = p.up[x]; m; m &= m - 1)
      up[image[x] - 1] |= Mask(1) << (image[std::countr_zero(m)] - 1);
  }
  return from_relation(p.n, up, std::move(labels));
}

std::vector<int> heights(const Poset& p) {
  std::vector<int> h(p.n, 0);
  // Elements sorted by down-set size give a valid processing order.
  std::vector<int> order(p.n);
  for (int i = 0; i < p.n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::popcount(p.dn[a]) < std::popcount(p.dn[b]);
  });
  for (int x : order)
    for (Mask m = p.dn[x]; m; m &= m - 1)
      h[x] = std::max(h[x], h[std::countr_zero(m)] + 1);
  return h;
}

bool is_down_set(const Poset& p, Mask m) {
  for (Mask t = m; t; t &= t - 1)
    if (p.dn[std::countr_zero(t)] & ~m) return false;
  return true;
}

std::vector<Mask> all_down_sets(const Poset& p, std::size_t limit) {
  std::set<Mask> seen;
  std::vector<Mask> frontier{0};
  seen.insert(0);
  // Grow each down-set by one eligible element at a time.
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask d : frontier) {
      for (int x = 0; x < p.n; ++x) {
        Mask bit = Mask(1) << x;
        if ((d & bit) || (p.dn[x] & ~d)) continue;
        Mask grown = d | bit;
        if (seen.insert(grown).second) {
          if (seen.size() > limit)
            throw std::invalid_argument("too many down-sets (limit " +
                                        std::to_string(limit) + ")");
          next.push_back(grown);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

}  // namespace balance
