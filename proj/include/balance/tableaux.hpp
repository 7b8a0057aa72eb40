#pragma once

#include <string>
#include <utility>
#include <vector>

#include "balance/poset.hpp"
#include "balance/rational.hpp"

namespace balance {

// A cell of a Young diagram, 1-based (row, column) in absolute coordinates.
struct Cell {
  int row = 0;
  int col = 0;
};
bool operator==(const Cell& a, const Cell& b);
bool operator<(const Cell& a, const Cell& b);

// A (possibly skew, possibly shifted) Young diagram. `outer` is weakly
// decreasing (strictly when shifted); `inner` fits inside `outer` and may be
// empty. Trailing zero parts are stripped on construction. Row i (1-based)
// occupies the absolute columns:
//   unshifted: inner_i + 1 .. outer_i
//   shifted:   i + inner_i .. i - 1 + outer_i
struct Shape {
  std::vector<int> outer;
  std::vector<int> inner;
  bool shifted = false;

  int rows() const { return (int)outer.size(); }
  int inner_part(int r) const;  // 1-based row, 0 beyond inner's length
  int row_begin(int r) const;   // first absolute column of row r
  int row_end(int r) const;     // last absolute column (begin > end: empty)
  int cell_count() const;
};

// Validates and normalises a shape description. Throws std::invalid_argument
// when the parts are not a valid diagram of the requested kind.
Shape make_shape(std::vector<int> outer, std::vector<int> inner = {},
                 bool shifted = false);

// Parses "4,4,2" or "9,7,7,5/6,5,3" (outer, optional "/inner").
Shape parse_shape(const std::string& text, bool shifted = false);
std::string shape_to_string(const Shape& s);

// ASCII picture: one line per row, cells drawn as "[]" with leading spaces
// for indentation.
std::string ascii_diagram(const Shape& s);

// Cells in row-major order (the numbering used by shape_to_poset).
std::vector<Cell> shape_cells(const Shape& s);

// The cell poset: cells ordered componentwise ((r,c) < (r',c') iff r <= r',
// c <= c', not equal). Elements are numbered row-major; labels are "(r,c)".
Poset shape_to_poset(const Shape& s);

// Hook lengths of a straight (non-skew, non-shifted) partition, as a ragged
// grid matching the diagram.
std::vector<std::vector<int>> hook_lengths(const std::vector<int>& lambda);

// Number of standard fillings of a straight partition via the hook-length
// product formula. The division is checked to be exact.
BigInt syt_count(const std::vector<int>& lambda);

// The exact ratio (n-1)(m+1) / (2(mn-1)), defined for m >= 1 and n >= 3.
Ratio lemma_ratio(int m, int n);

// The canonical balanced pair of an m x n rectangle (m, n >= 2): cells
// a = (1,2) and b = (2,1) of chain_product(m, n), with Pr(a before b).
struct RectanglePair {
  Cell a;
  Cell b;
  Ratio prob;
};
RectanglePair rectangle_balance_pair(int m, int n);

// Which rule of the decision procedure produced an almost-twin pair.
enum class TwinRule {
  straight,             // straight shape: (1,2) and (2,1)
  shifted_straight,     // shifted straight shape: (1,3) and (2,2)
  chain_components,     // all components chains: top cells of two components
  case_i,               // inner staircase step of depth 1
  case_ii,              // inner plateau behind a step of depth >= 2
  case_iii,             // single row below the inner shape
  case_iv,              // two or more rows below, inner part >= 2
  case_v,               // inner shape is a staircase with repeated parts
  shifted_small_inner,  // shifted skew, last inner part 2 or 3 (or lone tail)
  shifted_tail,         // shifted skew, last inner part > 3, deep tail
  fallback_search,      // exhaustive search (no structural rule applied)
};
const char* twin_rule_name(TwinRule r);

// An almost-twin pair of cells in the diagram, with the rule that found it.
struct AlmostTwinCells {
  Cell x;
  Cell y;
  TwinRule rule = TwinRule::fallback_search;
};

// Finds an almost-twin pair of cells in a non-chain diagram by structural
// case analysis (recursing into components when disconnected), verifying the
// candidate on the cell poset, and falling back to exhaustive search if no
// structural rule applied. Throws std::invalid_argument if the cell poset is
// a chain.
AlmostTwinCells find_almost_twin_in_shape(const Shape& s);

// The test corpus of diagrams with at most `max_cells` cells, one canonical
// description each, covering all four kinds. Skew descriptions are
// normalised (last row unindented, every row non-empty — a description with
// an empty row splits into two order-disjoint pieces that the corpus already
// carries separately) and bounded to a box: at most max_cells rows, outer
// parts at most max_cells (unshifted) or 2 * max_cells - 1 (shifted, whose
// diagonal pushes canonical diagrams right). Every connected diagram with at
// most max_cells cells appears up to translation.
std::vector<Shape> all_shapes(int max_cells);

}  // namespace balance
