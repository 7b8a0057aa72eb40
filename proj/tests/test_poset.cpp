#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "balance/lattices.hpp"
#include "balance/poset.hpp"
#include "balance/repro.hpp"
#include "oracles.hpp"

using namespace balance;

namespace {

const Poset& fig1() { return reference_poset("fig1"); }

}  // namespace

TEST_CASE("from_covers closes transitively and reduces covers") {
  const Poset& p = fig1();
  CHECK(p.n == 6);
  // Generators are already irredundant here and come back sorted.
  CHECK(p.covers == std::vector<std::pair<int, int>>{
                        {1, 3}, {1, 4}, {2, 3}, {2, 5}, {3, 6}, {4, 5}});
  // Transitive consequences of the generators.
  CHECK(p.less(1, 5));
  CHECK(p.less(2, 6));
  CHECK(p.less(1, 6));
  CHECK_FALSE(p.less(5, 1));
  CHECK_FALSE(p.less(1, 2));
  CHECK_FALSE(p.comparable(1, 2));
  CHECK(p.comparable(1, 5));

  // Redundant generator pairs are dropped from the stored reduction.
  Poset q = from_covers(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(q.covers == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(q.less(1, 3));
}

TEST_CASE("from_covers rejects bad input") {
  CHECK_THROWS_AS(from_covers(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers(3, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers(-1, {}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers(65, {}), std::invalid_argument);
  CHECK_THROWS_AS(from_covers(3, {{1, 2}, {2, 3}, {3, 1}}),
                  std::invalid_argument);
  // The cycle error names an offending cycle.
  try {
    from_covers(2, {{1, 2}, {2, 1}});
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("cycle") != std::string::npos);
  }
  // Label count must match n when labels are given.
  CHECK_THROWS_AS(from_covers(2, {}, {"only-one"}), std::invalid_argument);
}

TEST_CASE("from_relation validates the closure") {
  // Valid: the closed relation of 1 < 2 < 3.
  Poset p = from_relation(3, {0b110, 0b100, 0});
  CHECK(p == chain(3));
  // Not transitively closed.
  CHECK_THROWS_AS(from_relation(3, {0b010, 0b100, 0}), std::invalid_argument);
  // Not irreflexive.
  CHECK_THROWS_AS(from_relation(1, {0b1}), std::invalid_argument);
  // Not antisymmetric.
  CHECK_THROWS_AS(from_relation(2, {0b10, 0b01}), std::invalid_argument);
  // Row mentions elements beyond n.
  CHECK_THROWS_AS(from_relation(2, {0b100, 0}), std::invalid_argument);
}

TEST_CASE("structural equality ignores labels") {
  Poset a = from_covers(3, {{1, 2}});
  Poset b = from_covers(3, {{1, 2}}, {"x", "y", "z"});
  CHECK(a == b);
  CHECK_FALSE(a == from_covers(3, {{1, 3}}));
  CHECK_FALSE(a == from_covers(4, {{1, 2}}));
}

TEST_CASE("labels and lookup") {
  const Poset& p = fig1();
  CHECK(p.label(1) == "1");
  CHECK(p.label(6) == "6");
  Poset q = from_covers(2, {{1, 2}}, {"bottom", "top"});
  CHECK(q.label(2) == "top");
  CHECK(q.element_by_label("bottom") == 1);
  CHECK(q.element_by_label("top") == 2);
  CHECK_FALSE(q.element_by_label("missing").has_value());
}

TEST_CASE("dual transposes and is an involution") {
  Poset c = chain(3);
  Poset d = dual(c);
  CHECK(d.less(2, 1));
  CHECK(d.less(3, 1));
  CHECK(d.less(3, 2));
  CHECK_FALSE(d.less(1, 2));
  CHECK(dual(d) == c);

  CHECK(dual(antichain(3)) == antichain(3));

  const Poset& t = reference_poset("T");
  Poset dt = dual(t);
  CHECK(dt.less(2, 1));
  CHECK_FALSE(dt.comparable(1, 3));
  CHECK(dual(dt) == t);

  // Covers flip orientation; labels stay attached to their elements.
  Poset q = from_covers(2, {{1, 2}}, {"low", "high"});
  Poset dq = dual(q);
  CHECK(dq.covers == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(dq.label(1) == "low");
}

TEST_CASE("is_chain") {
  CHECK(is_chain(chain(4)));
  CHECK(is_chain(chain(1)));
  CHECK(is_chain(chain(0)));
  CHECK_FALSE(is_chain(fig1()));
  CHECK_FALSE(is_chain(antichain(2)));
}

TEST_CASE("width on known posets") {
  CHECK(width(chain(5)) == 1);
  CHECK(width(reference_poset("T")) == 2);
  CHECK(width(reference_poset("fig8-right")) == 3);
  CHECK(width(antichain(6)) == 6);
  CHECK(width(boolean_lattice(3)) == 3);
  CHECK(width(boolean_lattice(4)) == 6);
  CHECK(width(chain_product(3, 4)) == 3);
}

TEST_CASE("width agrees with the brute-force oracle") {
  for (const std::string& name : reference_poset_names()) {
    const Poset& p = reference_poset(name);
    CHECK(width(p) == oracles::brute_force_width(p));
  }
  std::vector<Poset> extra = {
      chain_product(4, 5),  // 20 elements
      boolean_lattice(4),  partition_lattice(4), subspace_lattice(3, 2),
      chain(7),            antichain(7),         from_permutation({4, 1, 3, 2, 5}),
  };
  for (const Poset& p : extra)
    CHECK(width(p) == oracles::brute_force_width(p));
  // Width is invariant under dualising.
  for (const std::string& name : reference_poset_names()) {
    const Poset& p = reference_poset(name);
    CHECK(width(dual(p)) == width(p));
  }
}

TEST_CASE("from_permutation intersects the two linear orders") {
  Poset p = from_permutation({4, 1, 3, 2, 5});
  CHECK(p.covers == std::vector<std::pair<int, int>>{
                        {1, 2}, {1, 3}, {2, 5}, {3, 5}, {4, 5}});
  // x < y exactly when both the integer order and the appearance order agree.
  std::vector<int> pos = {0, 1, 3, 2, 0, 4};  // pos[value]: index in 41325
  for (int x = 1; x <= 5; ++x)
    for (int y = 1; y <= 5; ++y)
      if (x != y) CHECK(p.less(x, y) == (x < y && pos[x] < pos[y]));

  CHECK(from_permutation({1, 2, 3, 4}) == chain(4));
  CHECK(from_permutation({4, 3, 2, 1}) == antichain(4));
  CHECK_THROWS_AS(from_permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(from_permutation({2, 3}), std::invalid_argument);
}

TEST_CASE("chain_product is the componentwise grid order") {
  Poset p = chain_product(3, 4);
  CHECK(p.n == 12);
  CHECK(p.label(1) == "(1,1)");
  CHECK(p.label(12) == "(3,4)");
  // (i,j) sits at (i-1)*n + j; covers step one coordinate.
  auto at = [&](int i, int j) { return (i - 1) * 4 + j; };
  CHECK(p.less(at(1, 1), at(2, 2)));
  CHECK(p.less(at(1, 3), at(3, 3)));
  CHECK_FALSE(p.comparable(at(1, 2), at(2, 1)));
  CHECK_FALSE(p.less(at(2, 2), at(1, 4)));

  CHECK(chain_product(1, 5) == chain(5));
  CHECK(chain_product(5, 1) == chain(5));
  Poset diamond = chain_product(2, 2);
  CHECK(diamond.covers == std::vector<std::pair<int, int>>{
                              {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK(width(diamond) == 2);
  CHECK_THROWS_AS(chain_product(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(chain_product(8, 9), std::invalid_argument);  // 72 > cap
}

TEST_CASE("relabel carries relations and labels") {
  const Poset& p = fig1();
  std::vector<int> image = {3, 1, 5, 2, 6, 4};
  Poset q = relabel(p, image);
  for (int x = 1; x <= p.n; ++x)
    for (int y = 1; y <= p.n; ++y)
      if (x != y)
        CHECK(p.less(x, y) == q.less(image[x - 1], image[y - 1]));
  CHECK(q.label(image[0]) == "1");
  CHECK(relabel(p, {1, 2, 3, 4, 5, 6}) == p);
  CHECK_THROWS_AS(relabel(p, {1, 1, 3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("heights count the longest chain below") {
  std::vector<int> h = heights(chain(4));
  CHECK(h == std::vector<int>{0, 1, 2, 3});
  h = heights(fig1());
  CHECK(h == std::vector<int>{0, 0, 1, 1, 2, 2});
  h = heights(antichain(3));
  CHECK(h == std::vector<int>{0, 0, 0});
}

TEST_CASE("down-sets: membership test and full enumeration") {
  const Poset& base = reference_poset("fig6-base");  // 2 < 3 < 4, 1 isolated
  CHECK(is_down_set(base, 0b0000));
  CHECK(is_down_set(base, 0b0001));   // {1}
  CHECK(is_down_set(base, 0b0010));   // {2}
  CHECK_FALSE(is_down_set(base, 0b0100));  // {3} misses 2 below it
  CHECK(is_down_set(base, 0b0110));   // {2,3}
  CHECK_FALSE(is_down_set(base, 0b1010));  // {2,4} misses 3
  CHECK(is_down_set(base, 0b1111));

  std::vector<Mask> all = all_down_sets(base);
  CHECK(all == std::vector<Mask>{0b0000, 0b0001, 0b0010, 0b0011, 0b0110,
                                 0b0111, 0b1110, 0b1111});
  // Sorted by (popcount, value); every member passes the membership test.
  for (Mask m : all) CHECK(is_down_set(base, m));

  CHECK(all_down_sets(antichain(3)).size() == 8);
  CHECK(all_down_sets(chain(5)).size() == 6);
  CHECK_THROWS_AS(all_down_sets(antichain(5), 10), std::invalid_argument);
}

TEST_CASE("antichain and chain constructors") {
  Poset a = antichain(3);
  CHECK(a.n == 3);
  CHECK(a.covers.empty());
  for (int x = 1; x <= 3; ++x)
    for (int y = 1; y <= 3; ++y)
      CHECK_FALSE(a.less(x, y));
  Poset c = chain(3);
  CHECK(c.covers == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(width(c) == 1);
}
