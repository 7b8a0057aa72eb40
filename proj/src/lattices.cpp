#include "balance/lattices.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace balance {

namespace {

std::string set_label(Mask m) {
  std::string out = "{";
  bool first = true;
  for (Mask t = m; t; t &= t - 1) {
    if (!first) out += ",";
    out += std::to_string(std::countr_zero(t) + 1);
    first = false;
  }
  out += "}";
  return out;
}

Poset poset_of_containment(const std::vector<Mask>& sets,
                           std::vector<std::string> labels) {
  int n = (int)sets.size();
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && (sets[a] & ~sets[b]) == 0 && sets[a] != sets[b])
        up[a] |= Mask(1) << b;
  return from_relation(n, up, std::move(labels));
}

}  // namespace

Poset boolean_lattice(int k) {
  if (k < 1) throw std::invalid_argument("ground set must have k >= 1");
  if (k > 6)
    throw std::invalid_argument(
        "boolean lattice would exceed the element cap");
  std::vector<Mask> subsets;
  for (Mask m = 0; m < (Mask(1) << k); ++m) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (Mask m : subsets) labels.push_back(set_label(m));
  return poset_of_containment(subsets, std::move(labels));
}

namespace {

// A set partition as blocks of 0-based elements, each block sorted, blocks
// sorted by minimum.
using Partition = std::vector<std::vector<int>>;

void enumerate_partitions(int k, std::vector<Partition>& out) {
  // Restricted growth strings: element i joins block rgs[i] <= 1 + max so far.
  std::vector<int> rgs(k, 0);
  std::function<void(int, int)> rec = [&](int i, int maxb) {
    if (i == k) {
      Partition part(maxb);
      for (int e = 0; e < k; ++e) part[rgs[e]].push_back(e);
      out.push_back(std::move(part));
      return;
    }
    for (int b = 0; b <= maxb && b < k; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxb, b + 1));
    }
  };
  rec(0, 0);
}

std::string partition_label(const Partition& part) {
  std::string out;
  for (std::size_t b = 0; b < part.size(); ++b) {
    if (b) out += "/";
    for (int e : part[b]) out += std::to_string(e + 1);
  }
  return out;
}

bool refines(const Partition& fine, const std::vector<int>& coarse_block_of) {
  for (const auto& block : fine) {
    int target = coarse_block_of[block[0]];
    for (int e : block)
      if (coarse_block_of[e] != target) return false;
  }
  return true;
}

}  // namespace

Poset partition_lattice(int k) {
  if (k < 1) throw std::invalid_argument("ground set must have k >= 1");
  std::vector<Partition> parts;
  enumerate_partitions(k, parts);
  if ((int)parts.size() > kMaxElements)
    throw std::invalid_argument(
        "partition lattice would exceed the element cap");
  // Bottom (all singletons, most blocks) first.
  std::vector<int> order((int)parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::vector<std::string> raw_labels(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    raw_labels[i] = partition_label(parts[i]);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (parts[a].size() != parts[b].size())
      return parts[a].size() > parts[b].size();
    return raw_labels[a] < raw_labels[b];
  });
  int n = (int)parts.size();
  std::vector<std::string> labels(n);
  std::vector<std::vector<int>> block_of(n, std::vector<int>(k));
  std::vector<const Partition*> sorted(n);
  for (int i = 0; i < n; ++i) {
    sorted[i] = &parts[order[i]];
    labels[i] = raw_labels[order[i]];
    for (std::size_t b = 0; b < sorted[i]->size(); ++b)
      for (int e : (*sorted[i])[b]) block_of[i][e] = (int)b;
  }
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && sorted[a]->size() > sorted[b]->size() &&
          refines(*sorted[a], block_of[b]))
        up[a] |= Mask(1) << b;
  return from_relation(n, up, std::move(labels));
}

namespace {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

using Vec = std::vector<int>;    // one vector over F_q
using Basis = std::vector<Vec>;  // reduced-echelon rows

// Reduces v against echelon rows (leading ones at their pivots); returns the
// residue.
Vec reduce(Vec v, const Basis& rows, const std::vector<int>& pivots, int q) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    int c = v[pivots[r]] % q;
    if (!c) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = ((v[j] - c * rows[r][j]) % q + q) % q;
  }
  return v;
}

bool contains_subspace(const Basis& small, const Basis& big,
                       const std::vector<int>& big_pivots, int q) {
  for (const Vec& row : small) {
    Vec res = reduce(row, big, big_pivots, q);
    for (int x : res)
      if (x % q) return false;
  }
  return true;
}

void enumerate_rref(int dim, int q, int rank, int next_col, Basis& rows,
                    std::vector<int>& pivots,
                    std::vector<std::pair<Basis, std::vector<int>>>& out) {
  if ((int)rows.size() == rank) {
    out.emplace_back(rows, pivots);
    return;
  }
  int placed = (int)rows.size();
  // Choose the next pivot column, leaving room for the remaining pivots.
  for (int c = next_col; c <= dim - (rank - placed); ++c) {
    Vec row(dim, 0);
    row[c] = 1;
    rows.push_back(row);
    pivots.push_back(c);
    // Free entries of this row: non-pivot columns to the right of c. They
    // are filled later, after all pivots are known, so recurse first on the
    // skeleton and expand free entries at the end.
    enumerate_rref(dim, q, rank, c + 1, rows, pivots, out);
    rows.pop_back();
    pivots.pop_back();
  }
}

// Expands the free entries of a pivot skeleton: every cell (r, j) with j not
// a pivot column and j > pivot[r] ranges over F_q; pivot columns of other
// rows stay zero.
void expand_free_entries(const Basis& skeleton, const std::vector<int>& pivots,
                         int q, std::vector<Basis>& out) {
  int dim = skeleton.empty() ? 0 : (int)skeleton[0].size();
  std::vector<std::pair<int, int>> free_cells;
  std::vector<char> is_pivot(dim, 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (std::size_t r = 0; r < skeleton.size(); ++r)
    for (int j = pivots[r] + 1; j < dim; ++j)
      if (!is_pivot[j]) free_cells.emplace_back((int)r, j);
  Basis work = skeleton;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free_cells.size()) {
      out.push_back(work);
      return;
    }
    auto [r, j] = free_cells[i];
    for (int v = 0; v < q; ++v) {
      work[r][j] = v;
      rec(i + 1);
    }
    work[r][j] = 0;
  };
  rec(0);
}

std::string basis_label(const Basis& rows) {
  std::string out = "<";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += ",";
    for (int x : rows[r]) out += std::to_string(x);
  }
  out += ">";
  return out;
}

}  // namespace

Poset subspace_lattice(int dim, int q) {
  if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
  if (!is_prime(q))
    throw std::invalid_argument("field size must be prime, got " +
                                std::to_string(q));
  // Every subspace has a unique reduced-echelon basis; enumerate them all.
  std::vector<Basis> spaces;
  std::vector<std::vector<int>> space_pivots;
  for (int rank = 0; rank <= dim; ++rank) {
    std::vector<std::pair<Basis, std::vector<int>>> skeletons;
    Basis rows;
    std::vector<int> pivots;
    enumerate_rref(dim, q, rank, 0, rows, pivots, skeletons);
    for (auto& [skeleton, piv] : skeletons) {
      std::vector<Basis> expanded;
      expand_free_entries(skeleton, piv, q, expanded);
      for (auto& basis : expanded) {
        spaces.push_back(std::move(basis));
        space_pivots.push_back(piv);
      }
    }
    if ((int)spaces.size() > kMaxElements)
      throw std::invalid_argument(
          "subspace lattice would exceed the element cap");
  }
  int n = (int)spaces.size();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<std::string> raw_labels(n);
  for (int i = 0; i < n; ++i) raw_labels[i] = basis_label(spaces[i]);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (spaces[a].size() != spaces[b].size())
      return spaces[a].size() < spaces[b].size();
    return raw_labels[a] < raw_labels[b];
  });
  std::vector<std::string> labels(n);
  std::vector<Basis> sorted(n);
  std::vector<std::vector<int>> sorted_pivots(n);
  for (int i = 0; i < n; ++i) {
    sorted[i] = spaces[order[i]];
    sorted_pivots[i] = space_pivots[order[i]];
    labels[i] = raw_labels[order[i]];
  }
  std::vector<Mask> up(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && sorted[a].size() < sorted[b].size() &&
          contains_subspace(sorted[a], sorted[b], sorted_pivots[b], q))
        up[a] |= Mask(1) << b;
  return from_relation(n, up, std::move(labels));
}

Poset ideal_lattice(const Poset& p) {
  std::vector<Mask> ideals = all_down_sets(p, (std::size_t)kMaxElements);
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (Mask m : ideals) labels.push_back(set_label(m));
  return poset_of_containment(ideals, std::move(labels));
}

}  // namespace balance
