#pragma once

#include "balance/poset.hpp"

namespace balance {

// Boolean lattice of all subsets of {1..k} ordered by inclusion. Elements are
// sorted by (cardinality, numeric value of the subset mask) and labelled in
// set notation: "{}", "{1}", "{1,3}", ... Requires k >= 1 and 2^k <=
// kMaxElements.
Poset boolean_lattice(int k);

// Lattice of set partitions of {1..k} ordered by refinement (finer below
// coarser). Elements are sorted by (number of blocks descending, label
// ascending) and labelled like "13/2/4" (blocks sorted by minimum, elements
// concatenated). Requires k >= 1 and Bell(k) <= kMaxElements.
Poset partition_lattice(int k);

// Lattice of subspaces of F_q^dim ordered by inclusion, q prime. Elements
// are sorted by (dimension, label) and labelled by reduced-echelon basis
// rows, e.g. "<>", "<100>", "<100,010>". Requires dim >= 1, q prime, and a
// total subspace count <= kMaxElements.
Poset subspace_lattice(int dim, int q);

// Distributive lattice J(P) of down-sets of `p` ordered by inclusion.
// Elements are sorted by (cardinality, numeric mask value) and labelled in
// set notation listing their members. Requires at most kMaxElements
// down-sets.
Poset ideal_lattice(const Poset& p);

}  // namespace balance
