#include "balance/structure.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace balance {

bool Morphism::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != (int)i + 1) return false;
  return true;
}

std::vector<int> Morphism::fixed_points() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] == (int)i + 1) out.push_back((int)i + 1);
  return out;
}

std::pair<Mask, Mask> strict_down_up(const Poset& p, int x) {
  if (x < 1 || x > p.n) throw std::invalid_argument("element out of range");
  return {p.dn[x - 1], p.up[x - 1]};
}

bool is_twin_pair(const Poset& p, int x, int y) {
  if (x < 1 || x > p.n || y < 1 || y > p.n || x == y) return false;
  return p.dn[x - 1] == p.dn[y - 1] && p.up[x - 1] == p.up[y - 1];
}

namespace {

// True iff the elements of `m` are pairwise comparable in p.
bool mask_is_chain(const Poset& p, Mask m) {
  for (Mask t = m; t; t &= t - 1) {
    int x = std::countr_zero(t);
    if (m & ~(p.up[x] | p.dn[x] | (Mask(1) << x))) return false;
  }
  return true;
}

/// The one-sided almost-twin condition: equal strict down-sets and both
// up-set differences chains.
bool almost_twin_primal(const Poset& p, int x, int y) {
  if (p.dn[x - 1] != p.dn[y - 1]) return false;
  Mask ux = p.up[x - 1], uy = p.up[y - 1];
  return mask_is_chain(p, ux & ~uy) && mask_is_chain(p, uy & ~ux);
}

}  // namespace

bool is_almost_twin_pair(const Poset& p, int x, int y) {
  if (x < 1 || x > p.n || y < 1 || y > p.n || x == y) return false;
  if (almost_twin_primal(p, x, y)) return true;
  Poset d = dual(p);
  return almost_twin_primal(d, x, y);
}

std::vector<std::pair<int, int>> twin_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= p.n; ++x)
    for (int y = x + 1; y <= p.n; ++y)
      if (is_twin_pair(p, x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<std::pair<int, int>> almost_twin_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  Poset d = dual(p);
  for (int x = 1; x <= p.n; ++x)
    for (int y = x + 1; y <= p.n; ++y)
      if (almost_twin_primal(p, x, y) || almost_twin_primal(d, x, y))
        out.emplace_back(x, y);
  return out;
}

namespace {

// Backtracking bijection search. `reversing` selects anti-automorphisms.
std::vector<Morphism> find_morphisms(const Poset& p, bool reversing) {
  if (p.n > kMaxMorphismN)
    throw std::invalid_argument("poset too large for morphism search (cap " +
                                std::to_string(kMaxMorphismN) + " elements)");
  std::vector<Morphism> found;
  int n = p.n;
  if (n == 0) {
    found.push_back({reversing ? MorphismKind::anti_automorphism
                               : MorphismKind::automorphism,
                     {}});
    return found;
  }
  std::vector<int> h = heights(p);
  std::vector<int> hd = heights(dual(p));
  // Invariant signature every image must preserve (or swap, if reversing).
  auto compatible = [&](int x, int fx) {
    int a = std::popcount(p.dn[x]), b = std::popcount(p.up[x]);
    int c = std::popcount(p.dn[fx]), d = std::popcount(p.up[fx]);
    if (!reversing) return a == c && b == d && h[x] == h[fx];
    return a == d && b == c && h[x] == hd[fx];
  };
  std::vector<int> image(n, -1);  // 0-based images
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int x) {
    if (x == n) {
      Morphism m;
      m.kind = reversing ? MorphismKind::anti_automorphism
                         : MorphismKind::automorphism;
      m.image.resize(n);
      for (int i = 0; i < n; ++i) m.image[i] = image[i] + 1;
      found.push_back(std::move(m));
      return;
    }
    for (int fx = 0; fx < n; ++fx) {
      if (used[fx] || !compatible(x, fx)) continue;
      bool ok = true;
      for (int b = 0; b < x && ok; ++b) {
        bool b_lt_x = (p.up[b] >> x) & 1;
        bool x_lt_b = (p.up[x] >> b) & 1;
        bool fb_lt_fx = (p.up[image[b]] >> fx) & 1;
        bool fx_lt_fb = (p.up[fx] >> image[b]) & 1;
        if (!reversing)
          ok = (b_lt_x == fb_lt_fx) && (x_lt_b == fx_lt_fb);
        else
          ok = (b_lt_x == fx_lt_fb) && (x_lt_b == fb_lt_fx);
      }
      if (!ok) continue;
      used[fx] = 1;
      image[x] = fx;
      rec(x + 1);
      image[x] = -1;
      used[fx] = 0;
    }
  };
  rec(0);
  std::sort(found.begin(), found.end(),
            [](const Morphism& a, const Morphism& b) {
              return a.image < b.image;
            });
  return found;
}

}  // namespace

std::vector<Morphism> automorphisms(const Poset& p) {
  return find_morphisms(p, false);
}

std::vector<Morphism> anti_automorphisms(const Poset& p) {
  return find_morphisms(p, true);
}

std::vector<std::pair<int, int>> two_cycle_automorphism_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  for (const Morphism& m : automorphisms(p))
    for (int x = 1; x <= p.n; ++x) {
      int y = m.image[x - 1];
      if (y > x && m.image[y - 1] == x) out.emplace_back(x, y);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::vector<int> positions_of(const std::vector<int>& pi) {
  int n = (int)pi.size();
  std::vector<int> pos(n + 1, -1);
  std::vector<char> seen(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    int v = pi[i];
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument(
          "input is not a permutation of 1..n in one-line notation");
    seen[v] = 1;
    pos[v] = i;
  }
  return pos;
}

}  // namespace

std::vector<std::pair<int, int>> inversion_pattern_pairs(
    const std::vector<int>& pi) {
  int n = (int)pi.size();
  std::vector<int> pos = positions_of(pi);
  std::vector<std::pair<int, int>> out;
  // Inversion (u, v): u > v as values, u appearing first. It is pattern-clean
  // iff the entries strictly between the two positions are exactly the
  // values strictly between v and u.
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v < u; ++v) {
      if (pos[u] > pos[v]) continue;  // not an inversion
      bool clean = true;
      for (int w = 1; w <= n && clean; ++w) {
        if (w == u || w == v) continue;
        bool between_pos = pos[w] > pos[u] && pos[w] < pos[v];
        bool between_val = w > v && w < u;
        if (between_pos != between_val) clean = false;
      }
      if (clean) out.emplace_back(u, v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> inversion_pattern_pairs_by_scan(
    const std::vector<int>& pi) {
  int n = (int)pi.size();
  std::vector<int> pos = positions_of(pi);
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v < u; ++v) {
      if (pos[u] > pos[v]) continue;
      bool contained = false;
      // Does some third entry w make the triple {u, v, w} an occurrence of
      // the pattern 312 or 231? (Those are exactly the patterns a
      // disqualified inversion sits inside.)
      for (int w = 1; w <= n && !contained; ++w) {
        if (w == u || w == v) continue;
        int p3[3] = {pos[u], pos[v], pos[w]};
        std::sort(p3, p3 + 3);
        int a = pi[p3[0]], b = pi[p3[1]], c = pi[p3[2]];
        int ra = (a > b) + (a > c) + 1;
        int rb = (b > a) + (b > c) + 1;
        int rc = (c > a) + (c > b) + 1;
        bool is312 = ra == 3 && rb == 1 && rc == 2;
        bool is231 = ra == 2 && rb == 3 && rc == 1;
        if (is312 || is231) contained = true;
      }
      if (!contained) out.emplace_back(u, v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace balance
