#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "balance/extensions.hpp"
#include "balance/poset.hpp"
#include "balance/repro.hpp"
#include "balance/structure.hpp"
#include "balance/tableaux.hpp"
#include "oracles.hpp"

using namespace balance;

namespace {

bool same_shape(const Shape& a, const Shape& b) {
  return a.outer == b.outer && a.inner == b.inner && a.shifted == b.shifted;
}

// 1-based row-major element number of a cell in shape_to_poset's numbering.
int cell_element(const Shape& s, const Cell& c) {
  std::vector<Cell> cells = shape_cells(s);
  auto it = std::find(cells.begin(), cells.end(), c);
  REQUIRE(it != cells.end());
  return (int)(it - cells.begin()) + 1;
}

}  // namespace

TEST_CASE("shape construction and validation") {
  Shape s = make_shape({4, 4, 2});
  CHECK(s.rows() == 3);
  CHECK(s.cell_count() == 10);
  CHECK_FALSE(s.shifted);
  CHECK(s.inner.empty());
  CHECK(s.row_begin(1) == 1);
  CHECK(s.row_end(1) == 4);
  CHECK(s.row_end(3) == 2);

  // Trailing zero parts are stripped.
  CHECK(same_shape(make_shape({3, 2, 0, 0}), make_shape({3, 2})));

  Shape skew = make_shape({3, 2}, {1});
  CHECK(skew.cell_count() == 4);
  CHECK(skew.inner_part(1) == 1);
  CHECK(skew.inner_part(2) == 0);
  CHECK(skew.row_begin(1) == 2);
  CHECK(skew.row_end(1) == 3);

  Shape sh = make_shape({3, 1}, {}, true);
  CHECK(sh.shifted);
  CHECK(sh.row_begin(1) == 1);
  CHECK(sh.row_begin(2) == 2);
  CHECK(sh.row_end(2) == 2);
  CHECK(sh.cell_count() == 4);

  // Outer must be a partition (strict when shifted); inner must fit.
  CHECK_THROWS_AS(make_shape({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_shape({3, -1}), std::invalid_argument);
  CHECK_THROWS_AS(make_shape({4, 4, 2}, {}, true), std::invalid_argument);
  CHECK_THROWS_AS(make_shape({3, 2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(make_shape({3, 2}, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(make_shape({3}, {4}), std::invalid_argument);
}

TEST_CASE("shape parsing and printing") {
  Shape s = parse_shape("9,7/6,5");
  CHECK(s.outer == std::vector<int>{9, 7});
  CHECK(s.inner == std::vector<int>{6, 5});
  CHECK(shape_to_string(s) == "9,7/6,5");
  CHECK(shape_to_string(parse_shape("4,4,2")) == "4,4,2");

  Shape sh = parse_shape("8,6,5,3,2/6,3", true);
  CHECK(sh.shifted);
  CHECK(sh.cell_count() == 15);

  CHECK_THROWS_AS(parse_shape("4,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_shape("3,2/"), std::invalid_argument);
}

TEST_CASE("ascii diagrams") {
  CHECK(ascii_diagram(parse_shape("3,1")) == "[][][]\n[]\n");
  CHECK(ascii_diagram(parse_shape("3,2/1")) == "  [][]\n[][]\n");
  CHECK(ascii_diagram(parse_shape("3,1", true)) == "[][][]\n  []\n");
}

TEST_CASE("cells are enumerated row-major") {
  Shape skew = parse_shape("3,2/1");
  CHECK(shape_cells(skew) ==
        std::vector<Cell>{{1, 2}, {1, 3}, {2, 1}, {2, 2}});
  Shape sh = parse_shape("3,1", true);
  CHECK(shape_cells(sh) ==
        std::vector<Cell>{{1, 1}, {1, 2}, {1, 3}, {2, 2}});
  CHECK((int)shape_cells(sh).size() == sh.cell_count());
}

TEST_CASE("cell posets") {
  CHECK(shape_to_poset(make_shape({4})) == chain(4));
  CHECK(shape_to_poset(make_shape({1, 1, 1})) == chain(3));
  CHECK(shape_to_poset(make_shape({2, 1}, {1})) == antichain(2));
  CHECK(shape_to_poset(make_shape({4, 4, 4})) == chain_product(3, 4));
  CHECK(shape_to_poset(make_shape({2, 1}, {}, true)) == chain(3));
  // Labels carry the absolute coordinates.
  Poset p = shape_to_poset(parse_shape("3,2/1"));
  CHECK(p.labels[0] == "(1,2)");
  CHECK(p.labels[2] == "(2,1)");
}

TEST_CASE("hook lengths") {
  CHECK(hook_lengths({4, 4, 2}) ==
        std::vector<std::vector<int>>{{6, 5, 3, 2}, {5, 4, 2, 1}, {2, 1}});
  CHECK(hook_lengths({5}) == std::vector<std::vector<int>>{{5, 4, 3, 2, 1}});
  CHECK(hook_lengths({1, 1, 1}) ==
        std::vector<std::vector<int>>{{3}, {2}, {1}});
  CHECK_THROWS_AS(hook_lengths({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(hook_lengths({3, -1}), std::invalid_argument);
}

TEST_CASE("standard filling counts") {
  CHECK(syt_count({4, 4, 2}) == 252);
  CHECK(syt_count({4, 4, 4}) == 462);
  CHECK(syt_count({7}) == 1);
  CHECK(syt_count({2, 1}) == 2);
  CHECK(syt_count({1}) == 1);
}

TEST_CASE("hook formula agrees with brute-force filling counts") {
  for (int k = 1; k <= 10; ++k) {
    for (const std::vector<int>& lambda : oracles::all_partitions_of(k)) {
      Poset p = shape_to_poset(make_shape(lambda));
      CHECK(syt_count(lambda) == count_extensions(p));
    }
  }
}

TEST_CASE("two-column ratio formula") {
  CHECK(lemma_ratio(3, 4) == Ratio(6, 11));
  CHECK(lemma_ratio(3, 5) == Ratio(4, 7));
  CHECK(lemma_ratio(4, 4) == Ratio(1, 2));
  CHECK(lemma_ratio(4, 5) == Ratio(10, 19));
  CHECK(lemma_ratio(1, 3) == Ratio(1));
  CHECK_THROWS_AS(lemma_ratio(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(lemma_ratio(3, 2), std::invalid_argument);

  // The closed form equals the quotient of standard filling counts
  // f^{(n^(m-1), n-2)} / f^{(n^m)}.
  for (int m = 1; m <= 4; ++m) {
    for (int n = 3; n <= 6; ++n) {
      std::vector<int> numerator_shape(m, n);
      numerator_shape[m - 1] = n - 2;
      std::vector<int> denominator_shape(m, n);
      Ratio quotient(syt_count(numerator_shape),
                     syt_count(denominator_shape));
      CHECK(lemma_ratio(m, n) == quotient);
    }
  }
}

TEST_CASE("rectangle pair") {
  RectanglePair r22 = rectangle_balance_pair(2, 2);
  CHECK(r22.a == Cell{1, 2});
  CHECK(r22.b == Cell{2, 1});
  CHECK(r22.prob == Ratio(1, 2));
  CHECK(rectangle_balance_pair(3, 4).prob == Ratio(6, 11));
  CHECK_THROWS_AS(rectangle_balance_pair(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(rectangle_balance_pair(3, 1), std::invalid_argument);

  for (int m = 3; m <= 4; ++m) {
    for (int n = 4; n <= 5; ++n) {
      RectanglePair r = rectangle_balance_pair(m, n);
      CHECK(r.prob == lemma_ratio(m, n));
      CHECK(Ratio(1, 3) <= r.prob);
      CHECK(r.prob <= Ratio(2, 3));
    }
  }
}

TEST_CASE("almost-twin cells in fixed diagrams") {
  struct Example {
    const char* text;
    bool shifted;
    Cell x, y;
    TwinRule rule;
  };
  const Example examples[] = {
      {"9,7,7,5,5,5,5/6,5,3,3,3,2", false, {1, 7}, {2, 6}, TwinRule::case_i},
      {"5,5,5,4,4,4,3/4,4,3,3,2,2", false, {1, 5}, {3, 4}, TwinRule::case_v},
      {"8,6,5,3,2/6,3", true, {2, 5}, {3, 3}, TwinRule::shifted_small_inner},
      {"4,4,4", false, {1, 2}, {2, 1}, TwinRule::straight},
  };
  for (const Example& ex : examples) {
    Shape s = parse_shape(ex.text, ex.shifted);
    AlmostTwinCells found = find_almost_twin_in_shape(s);
    CHECK(found.x == ex.x);
    CHECK(found.y == ex.y);
    CHECK(found.rule == ex.rule);
    // The pair it names really is an almost-twin pair of the cell poset.
    Poset p = shape_to_poset(s);
    CHECK(is_almost_twin_pair(p, cell_element(s, found.x),
                              cell_element(s, found.y)));
  }
}

TEST_CASE("almost-twin search refuses chains") {
  CHECK_THROWS_AS(find_almost_twin_in_shape(make_shape({5})),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_almost_twin_in_shape(make_shape({1, 1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(find_almost_twin_in_shape(make_shape({2, 1}, {}, true)),
                  std::invalid_argument);
}

TEST_CASE("almost-twin cells in disconnected diagrams") {
  // Two chain components: the top cells of two components are twins.
  Shape chains = parse_shape("3,1/1");
  AlmostTwinCells found = find_almost_twin_in_shape(chains);
  CHECK(found.rule == TwinRule::chain_components);
  Poset p = shape_to_poset(chains);
  CHECK(is_almost_twin_pair(p, cell_element(chains, found.x),
                            cell_element(chains, found.y)));

  // A chain component plus a 2x2 block: recursion lands in the block and
  // reports absolute coordinates.
  Shape mixed = parse_shape("3,3,2,2/2,2");
  AlmostTwinCells inner = find_almost_twin_in_shape(mixed);
  CHECK(inner.rule == TwinRule::straight);
  CHECK(inner.x == Cell{3, 2});
  CHECK(inner.y == Cell{4, 1});
  Poset q = shape_to_poset(mixed);
  CHECK(is_almost_twin_pair(q, cell_element(mixed, inner.x),
                            cell_element(mixed, inner.y)));
}

TEST_CASE("diagram corpus census") {
  std::vector<Shape> six = all_shapes(6);
  CHECK(six.size() == 4634);
  std::vector<Shape> seven = all_shapes(7);
  CHECK(seven.size() == 24845);

  // Every listed shape is valid and within the cell bound; descriptions are
  // pairwise distinct.
  std::set<std::string> seen;
  for (const Shape& s : seven) {
    CHECK(s.cell_count() <= 7);
    CHECK(same_shape(make_shape(s.outer, s.inner, s.shifted), s));
    seen.insert(shape_to_string(s) + (s.shifted ? "#s" : ""));
  }
  CHECK(seen.size() == seven.size());
}

TEST_CASE("sweep over all diagrams with at most seven cells") {
  ShapeSweepResult r = shape_sweep(7);
  CHECK(r.shapes == 24845);
  CHECK(r.chains == 27);
  CHECK(r.checked == 24818);
  CHECK(r.failures == 0);
  CHECK(r.fallbacks == 0);
  CHECK(r.first_failure.empty());
}

TEST_CASE("rule names are stable") {
  CHECK(std::string(twin_rule_name(TwinRule::straight)) == "straight");
  CHECK(std::string(twin_rule_name(TwinRule::shifted_straight)) ==
        "shifted_straight");
  CHECK(std::string(twin_rule_name(TwinRule::chain_components)) ==
        "chain_components");
  CHECK(std::string(twin_rule_name(TwinRule::case_i)) == "case_i");
  CHECK(std::string(twin_rule_name(TwinRule::case_v)) == "case_v");
  CHECK(std::string(twin_rule_name(TwinRule::shifted_small_inner)) ==
        "shifted_small_inner");
  CHECK(std::string(twin_rule_name(TwinRule::fallback_search)) ==
        "fallback_search");
}
