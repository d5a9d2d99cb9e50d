#include "doctest.h"
#include "infalg/embedding.hpp"
#include "infalg/examples.hpp"

using namespace infalg;

TEST_CASE("string algebra combination and truncation") {
  auto s = make_string_algebra(2, 2);
  CHECK(s.size() == 1 + 2 + 4 + 1);
  const auto a = s.index_of("a"), ab = s.index_of("ab"), ba = s.index_of("ba");
  CHECK(s.combine(a, ab) == ab);
  CHECK(s.combine(ab, a) == ab);
  CHECK(s.combine(ab, ba) == s.null());
  CHECK(s.combine(s.unit(), ba) == ba);
  CHECK(s.name(s.unit()) == "1");
  CHECK(s.name(s.null()) == "0");
  CHECK(s.extract(1, ab) == a);
  CHECK(s.extract(0, ab) == s.unit());
  CHECK(s.extract(2, ab) == ab);
  CHECK(s.extract(1, s.null()) == s.null());
  CHECK(s.domains().leq(0, 2));
}

TEST_CASE("string algebra bounds") {
  CHECK_THROWS_AS(make_string_algebra(0, 2), InvalidArgument);
  CHECK_THROWS_AS(make_string_algebra(2, 0), InvalidArgument);
  CHECK_THROWS_AS(make_string_algebra(3, 4), BoundExceeded);
  CHECK_NOTHROW(make_string_algebra(3, 4, 200));
}

TEST_CASE("string algebras with two or more letters are atomistic on the longest strings") {
  for (std::size_t k = 2; k <= 3; ++k)
    for (std::size_t L = 1; L <= 3; ++L) {
      auto s = make_string_algebra(k, L, 64);
      CHECK(verify_axioms(s).passed());
      CHECK(support_lemma_check(s).passed());
      auto at = compute_atoms(s);
      CHECK(at.classification >= AtomClass::atomistic);
      for (auto i : members_of(at.atoms)) CHECK(s.name(i).size() == L);
    }
  // One letter: the carrier is a chain, atomic but not atomistic.
  CHECK(compute_atoms(make_string_algebra(1, 2)).classification == AtomClass::atomic);
}

TEST_CASE("multivariate algebra") {
  auto mv = make_multivariate({2, 3});
  CHECK(mv.size() == 64);
  CHECK(mv.domain_count() == 4);
  CHECK(mv.domain_name(3) == "{1,2}");
  CHECK(verify_axioms(mv).passed());
  const auto x = mv.index_of("{00,01,12}"), y = mv.index_of("{01,12}");
  CHECK(mv.combine(x, mv.index_of("{01,10,12}")) == y);
  // Nothing extracted to the empty variable set except emptiness itself.
  CHECK(mv.extract(0, x) == mv.unit());
  CHECK(mv.extract(0, mv.null()) == mv.null());
  CHECK(mv.extract(1, y) == mv.unit());
  CHECK(mv.extract(1, mv.index_of("{00}")) == mv.index_of("{00,01,02}"));
  CHECK(mv.extract(2, mv.index_of("{00}")) == mv.index_of("{00,10}"));
  auto c = is_commutative(mv);
  REQUIRE(c.commutative);
  for (std::size_t s = 0; s < 4; ++s)
    for (std::size_t t = 0; t < 4; ++t) CHECK(c.meet[s][t] == (s & t));
  CHECK(compute_atoms(mv).classification == AtomClass::completely_atomistic);
  CHECK_THROWS_AS(make_multivariate({3, 3}), BoundExceeded);
  CHECK_THROWS_AS(make_multivariate({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(make_multivariate({}), InvalidArgument);
}

TEST_CASE("lattice-valued algebra") {
  auto lv = lattice_valued_fixture();
  CHECK(verify_axioms(lv).passed());
  CHECK(lv.name(lv.unit()) == "(2,2)");
  CHECK(lv.name(lv.null()) == "(0,0)");
  // Constant maps plus all maps on singleton blocks: 3^2.
  CHECK(lv.size() == 9);
  // Extraction to the one-block partition takes the join over both points.
  CHECK(lv.extract(0, lv.index_of("(0,1)")) == lv.index_of("(1,1)"));
  std::string reason;
  CHECK(distributive_preconditions(lv, reason).passed());
  CHECK_THROWS_AS(make_lattice_valued(2, {Partition::coarsest(2)}, n5_lattice()), InvalidArgument);
  CHECK_THROWS_AS(make_lattice_valued(3,
                                      {Partition::from_blocks(3, {{0, 1}, {2}}),
                                       Partition::from_blocks(3, {{0}, {1, 2}})},
                                      chain_lattice(2)),
                  InvalidArgument);
}

TEST_CASE("two-valued maps are the saturated-set algebra") {
  std::vector<Partition> fam{Partition::coarsest(3), Partition::from_blocks(3, {{0, 1}, {2}}), Partition::finest(3)};
  auto lv = make_lattice_valued(3, fam, chain_lattice(2));
  auto sa = make_set_algebra(3, fam);
  REQUIRE(lv.size() == sa.size());
  // A map u -> {0,1} corresponds to the set where it is the top value.
  std::vector<std::size_t> h(lv.size());
  for (std::size_t i = 0; i < lv.size(); ++i) {
    std::string set = "{";
    const auto& n = lv.name(i);
    bool first = true;
    for (std::size_t u = 0; u < 3; ++u)
      if (n[1 + 2 * u] == '1') {
        set += (first ? "" : ",") + std::to_string(u);
        first = false;
      }
    h[i] = sa.index_of(set + "}");
  }
  CHECK(check_homomorphism(lv, sa, h, {0, 1, 2}).passed());
}

TEST_CASE("set algebras") {
  auto single = make_set_algebra(4, {Partition::from_blocks(4, {{0, 1}, {2}, {3}})});
  CHECK(single.size() == 8);
  CHECK(is_boolean(single.order()));
  auto both = make_set_algebra(3, {Partition::coarsest(3), Partition::finest(3)});
  CHECK(both.size() == 8);
  CHECK(verify_axioms(both).passed());

  auto fam = std::vector<Partition>{Partition::coarsest(3), Partition::finest(3)};
  std::vector<Subset> missing{full_subset(3), Subset(3), make_subset(3, {0, 1}), make_subset(3, {1, 2})};
  try {
    make_set_algebra(3, fam, missing);
    FAIL("expected an error");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()) == "elements not closed under intersection: {0,1} and {1,2}");
  }
  std::vector<Subset> no_empty{full_subset(3)};
  CHECK_THROWS_AS(make_set_algebra(3, fam, no_empty), InvalidArgument);
  CHECK_THROWS_AS(make_set_algebra(3, {Partition::from_blocks(3, {{0, 1}, {2}}), Partition::from_blocks(3, {{0}, {1, 2}})}),
                  InvalidArgument);
  CHECK_THROWS_AS(make_set_algebra(3, {Partition::finest(3), Partition::finest(3)}), InvalidArgument);
}

TEST_CASE("explicit elements must be closed under saturation") {
  auto fam = std::vector<Partition>{Partition::from_blocks(3, {{0, 1}, {2}}), Partition::finest(3)};
  std::vector<Subset> elems{full_subset(3), Subset(3), make_subset(3, {0})};
  CHECK_THROWS_AS(make_set_algebra(3, fam, elems), InvalidArgument);
  elems.push_back(make_subset(3, {0, 1}));
  auto a = make_set_algebra(3, fam, elems);
  CHECK(a.size() == 4);
  CHECK(verify_axioms(a).passed());
}

TEST_CASE("random instances are deterministic and valid") {
  CHECK(random_instance(7).combine_table() == random_instance(7).combine_table());
  CHECK(random_instance(7).extract_table() == random_instance(7).extract_table());
  bool noncommutative = false;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto a = random_instance(seed);
    CAPTURE(seed);
    REQUIRE(verify_axioms(a).passed());
    REQUIRE(support_lemma_check(a).passed());
    noncommutative |= !is_commutative(a).commutative;
  }
  CHECK(noncommutative);
  CHECK_THROWS_AS(random_instance(1, 0), InvalidArgument);
}

TEST_CASE("bundled fixtures") {
  auto all = bundled_fixtures();
  REQUIRE(all.size() == 6);
  CHECK(all[0].name == "multivariate");
  CHECK(all[5].name == "footnote");
  auto fn = footnote_fixture();
  CHECK(is_distributive(fn.order()));
  CHECK(verify_axioms(fn).passed());
  CHECK(is_commutative(noncommutative_fixture()).commutative == false);
  CHECK(chain_carrier_fixture().size() == 4);
}
