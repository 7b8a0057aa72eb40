#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"

#include "balance/extensions.hpp"
#include "balance/lattices.hpp"
#include "balance/poset.hpp"
#include "balance/repro.hpp"
#include "balance/structure.hpp"

using namespace balance;

namespace {

std::vector<Poset> morphism_corpus() {
  std::vector<Poset> out;
  for (const std::string& name : reference_poset_names())
    out.push_back(reference_poset(name));
  out.push_back(boolean_lattice(3));
  out.push_back(partition_lattice(3));
  out.push_back(subspace_lattice(2, 2));
  out.push_back(chain(4));
  out.push_back(antichain(4));
  return out;
}

// Morphism images as a set, for closure checks.
std::set<std::vector<int>> image_set(const std::vector<Morphism>& ms) {
  std::set<std::vector<int>> out;
  for (const Morphism& m : ms) out.insert(m.image);
  return out;
}

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i] - 1];
  return out;
}

std::vector<int> invert(const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[f[i] - 1] = (int)i + 1;
  return out;
}

}  // namespace

TEST_CASE("strict_down_up") {
  const Poset& p = reference_poset("fig4-P");
  auto [down, up] = strict_down_up(p, 1);
  CHECK(down == 0);
  CHECK(up == (Mask(0b11100)));  // {3,4,5}

  Poset c = chain(4);
  auto [cd, cu] = strict_down_up(c, 4);
  CHECK(cd == 0b0111);
  CHECK(cu == 0);

  auto [ad, au] = strict_down_up(antichain(3), 2);
  CHECK(ad == 0);
  CHECK(au == 0);

  CHECK_THROWS_AS(strict_down_up(c, 0), std::invalid_argument);
  CHECK_THROWS_AS(strict_down_up(c, 5), std::invalid_argument);
}

TEST_CASE("twin pairs") {
  CHECK(twin_pairs(reference_poset("fig4-P")) ==
        std::vector<std::pair<int, int>>{{1, 2}, {4, 5}});
  CHECK(twin_pairs(chain(4)).empty());
  CHECK(twin_pairs(antichain(3)) ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(is_twin_pair(reference_poset("fig4-P"), 4, 5));
  CHECK_FALSE(is_twin_pair(reference_poset("fig4-P"), 1, 4));
}

TEST_CASE("almost twin pairs") {
  // In the three-element poset 1 < 2 with 3 isolated, both non-chain pairs
  // qualify: (1,3) directly, (2,3) through the dual.
  const Poset& t = reference_poset("T");
  CHECK(almost_twin_pairs(t) ==
        std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
  CHECK(is_almost_twin_pair(t, 2, 3));
  CHECK(is_almost_twin_pair(t, 3, 2));  // unordered

  // The (1,2)/(2,1) cells of a grid: equal lower sets, chain differences.
  Poset grid = chain_product(3, 4);
  CHECK(is_almost_twin_pair(grid, 2, 5));
  Poset square = chain_product(2, 2);
  CHECK(is_almost_twin_pair(square, 2, 3));

  CHECK(almost_twin_pairs(chain(4)).empty());

  // Comparable elements never qualify.
  CHECK_FALSE(is_almost_twin_pair(t, 1, 2));

  // Twins are almost twins with empty differences.
  for (const Poset& p : morphism_corpus()) {
    std::vector<std::pair<int, int>> twins = twin_pairs(p);
    std::vector<std::pair<int, int>> almost = almost_twin_pairs(p);
    for (const auto& pr : twins)
      CHECK(std::find(almost.begin(), almost.end(), pr) != almost.end());
    for (const auto& pr : almost) CHECK_FALSE(p.comparable(pr.first, pr.second));
  }
}

TEST_CASE("automorphisms of the five-element twin poset") {
  // Two independent twin pairs give a group of order four.
  const Poset& p = reference_poset("fig4-P");
  std::vector<Morphism> autos = automorphisms(p);
  CHECK(autos.size() == 4);
  std::set<std::vector<int>> images = image_set(autos);
  CHECK(images.count({1, 2, 3, 4, 5}));  // identity
  CHECK(images.count({2, 1, 3, 4, 5}));
  CHECK(images.count({1, 2, 3, 5, 4}));
  CHECK(images.count({2, 1, 3, 5, 4}));
  int identities = 0;
  for (const Morphism& m : autos) identities += m.is_identity();
  CHECK(identities == 1);
}

TEST_CASE("rigid posets have only the identity automorphism") {
  std::vector<Morphism> autos = automorphisms(reference_poset("fig4-Q"));
  REQUIRE(autos.size() == 1);
  CHECK(autos[0].is_identity());
  CHECK(autos[0].fixed_points() == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("automorphism lists form a group") {
  for (const Poset& p : morphism_corpus()) {
    std::vector<Morphism> autos = automorphisms(p);
    std::set<std::vector<int>> images = image_set(autos);
    CHECK(!autos.empty());
    for (const Morphism& m : autos) {
      CHECK(images.count(invert(m.image)));
      // Every automorphism actually preserves the order.
      for (int x = 1; x <= p.n; ++x)
        for (int y = 1; y <= p.n; ++y)
          if (x != y)
            CHECK(p.less(x, y) == p.less(m.image[x - 1], m.image[y - 1]));
    }
    for (const Morphism& a : autos)
      for (const Morphism& b : autos)
        CHECK(images.count(compose(a.image, b.image)));
  }
  CHECK(automorphisms(antichain(3)).size() == 6);
}

TEST_CASE("anti-automorphisms reverse the order") {
  // Chains: exactly the reversal, with one fixed point iff the length is odd.
  std::vector<Morphism> c3 = anti_automorphisms(chain(3));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].image == std::vector<int>{3, 2, 1});
  CHECK(c3[0].fixed_points() == std::vector<int>{2});
  std::vector<Morphism> c4 = anti_automorphisms(chain(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].fixed_points().empty());

  // The nine-element reference poset: three anti-automorphisms, each with
  // exactly one fixed point, including the documented one.
  std::vector<Morphism> f5 = anti_automorphisms(reference_poset("fig5"));
  CHECK(f5.size() == 3);
  bool found_documented = false;
  for (const Morphism& m : f5) {
    CHECK(m.kind == MorphismKind::anti_automorphism);
    CHECK(m.fixed_points().size() == 1);
    if (m.image == std::vector<int>{7, 9, 8, 4, 6, 5, 1, 3, 2}) {
      found_documented = true;
      CHECK(m.fixed_points() == std::vector<int>{4});
    }
  }
  CHECK(found_documented);

  for (const Poset& p : morphism_corpus()) {
    std::vector<Morphism> antis = anti_automorphisms(p);
    std::set<std::vector<int>> autos = image_set(automorphisms(p));
    for (const Morphism& m : antis) {
      for (int x = 1; x <= p.n; ++x)
        for (int y = 1; y <= p.n; ++y)
          if (x != y)
            CHECK(p.less(x, y) == p.less(m.image[y - 1], m.image[x - 1]));
      // anti composed with anti preserves the order.
      for (const Morphism& m2 : antis)
        CHECK(autos.count(compose(m.image, m2.image)));
    }
  }
}

TEST_CASE("two-cycle automorphism pairs are half-balanced") {
  CHECK(two_cycle_automorphism_pairs(reference_poset("fig4-P")) ==
        std::vector<std::pair<int, int>>{{1, 2}, {4, 5}});
  CHECK(two_cycle_automorphism_pairs(chain(5)).empty());

  Poset b2 = boolean_lattice(2);
  std::vector<std::pair<int, int>> b2_pairs =
      two_cycle_automorphism_pairs(b2);
  int s1 = *b2.element_by_label("{1}");
  int s2 = *b2.element_by_label("{2}");
  CHECK(std::find(b2_pairs.begin(), b2_pairs.end(),
                  std::pair<int, int>{std::min(s1, s2), std::max(s1, s2)}) !=
        b2_pairs.end());

  Poset p3 = partition_lattice(3);
  int a = *p3.element_by_label("13/2");
  int b = *p3.element_by_label("1/23");
  std::vector<std::pair<int, int>> p3_pairs =
      two_cycle_automorphism_pairs(p3);
  CHECK(std::find(p3_pairs.begin(), p3_pairs.end(),
                  std::pair<int, int>{std::min(a, b), std::max(a, b)}) !=
        p3_pairs.end());

  for (const Poset& p : morphism_corpus())
    for (auto [x, y] : two_cycle_automorphism_pairs(p))
      CHECK(prob_before(p, x, y) == Ratio(1, 2));
}

TEST_CASE("anti-automorphism fixed points pair up at exactly one half") {
  for (const Poset& p : morphism_corpus()) {
    for (const Morphism& m : anti_automorphisms(p)) {
      std::vector<int> fixed = m.fixed_points();
      for (std::size_t i = 0; i < fixed.size(); ++i)
        for (std::size_t j = i + 1; j < fixed.size(); ++j) {
          CHECK_FALSE(p.comparable(fixed[i], fixed[j]));
          CHECK(prob_before(p, fixed[i], fixed[j]) == Ratio(1, 2));
        }
    }
  }
}

TEST_CASE("morphism search refuses oversized posets") {
  CHECK_THROWS_AS(automorphisms(antichain(25)), std::invalid_argument);
  CHECK_THROWS_AS(anti_automorphisms(antichain(25)), std::invalid_argument);
}

TEST_CASE("pattern-clean inversions") {
  CHECK(inversion_pattern_pairs({4, 1, 3, 2, 5}) ==
        std::vector<std::pair<int, int>>{{3, 2}});
  CHECK(inversion_pattern_pairs({2, 1}) ==
        std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(inversion_pattern_pairs({3, 1, 2}).empty());
  CHECK(inversion_pattern_pairs({1, 2, 3}).empty());
}

TEST_CASE("inversion characterisation matches the literal pattern scan") {
  // All permutations of length up to 7; every certified pair is a twin pair
  // of the two-dimensional poset and is exactly half-balanced.
  long long certified = 0;
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i + 1;
    do {
      std::vector<std::pair<int, int>> fast = inversion_pattern_pairs(pi);
      CHECK(fast == inversion_pattern_pairs_by_scan(pi));
      Poset p = from_permutation(pi);
      for (auto [x, y] : fast) {
        CHECK(is_twin_pair(p, x, y));
        CHECK(prob_before(p, x, y) == Ratio(1, 2));
        ++certified;
      }
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  CHECK(certified == 6374);
}

TEST_CASE("certificate kinds have stable names") {
  CHECK(std::string(certificate_kind_name(CertificateKind::twin)) == "twin");
  CHECK(std::string(certificate_kind_name(CertificateKind::almost_twin)) ==
        "almost_twin");
  CHECK(std::string(certificate_kind_name(CertificateKind::auto_2cycle)) ==
        "auto_2cycle");
  CHECK(std::string(certificate_kind_name(
            CertificateKind::anti_auto_fixed_pair)) == "anti_auto_fixed_pair");
  CHECK(std::string(certificate_kind_name(
            CertificateKind::inversion_pattern_pair)) ==
        "inversion_pattern_pair");
}
