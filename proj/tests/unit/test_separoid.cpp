#include "doctest.h"
#include "infalg/separoid.hpp"
#include "oracles.hpp"

using namespace infalg;

namespace {

bool all_pass(const Report& r, std::initializer_list<const char*> names) {
  for (auto n : names)
    if (r.at(n).verdict != Verdict::pass) return false;
  return true;
}

}  // namespace

TEST_CASE("relation storage") {
  CIRelation r(chain_lattice(3));
  CHECK(r.count() == 0);
  r.insert(2, 0, 1);
  r.insert(0, 1, 2);
  CHECK(r.contains(2, 0, 1));
  CHECK(r.triples() == std::vector<Triple>{{0, 1, 2}, {2, 0, 1}});
  r.erase(2, 0, 1);
  CHECK(r.count() == 1);
  CHECK(r.is_subset_of(CIRelation::full(chain_lattice(3))));
  CHECK(CIRelation::full(chain_lattice(3)).count() == 27);
}

TEST_CASE("lattice relation on the corpus") {
  for (const auto& l : {m3_lattice(), chain_lattice(1), chain_lattice(4), powerset_lattice(2), powerset_lattice(3)}) {
    auto r = check_all_axioms(lattice_relation(l));
    CHECK(all_pass(r, {"C1", "C2", "C3", "C4", "C5", "C6"}));
    CHECK(check_basic(lattice_relation(l)).passed());
  }
  auto n5 = check_all_axioms(lattice_relation(n5_lattice()));
  CHECK(all_pass(n5, {"C1", "C2", "C3", "C4"}));
  CHECK((n5.at("C5").verdict == Verdict::fail || n5.at("C6").verdict == Verdict::fail));
  CHECK(n5.at("C5").witness == std::vector<std::size_t>{2, 3, 0, 1});
  for (const auto& l : {chain_lattice(4), powerset_lattice(3)})
    CHECK(check_strong_separoid(lattice_relation(l)).at("C7").verdict == Verdict::pass);
}

TEST_CASE("random closure lattices are distributive and give strong separoids") {
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto l = random_closure_lattice(s);
    auto r = lattice_relation(l);
    CHECK(check_all_axioms(r).passed());
    CHECK(r == dawid_relation(l));
  }
}

TEST_CASE("Dawid relation is a separoid only on distributive lattices") {
  CHECK(check_all_axioms(dawid_relation(powerset_lattice(3))).passed());
  CHECK_FALSE(check_all_axioms(dawid_relation(m3_lattice())).passed());
  CHECK_FALSE(check_all_axioms(dawid_relation(n5_lattice())).passed());
}

TEST_CASE("meet-based relations need a lattice") {
  CHECK_THROWS_AS(lattice_relation(antichain_with_top(2)), InvalidArgument);
  CHECK_THROWS_AS(dawid_relation(antichain_with_top(2)), InvalidArgument);
  auto r = CIRelation::full(antichain_with_top(2));
  CHECK(check_strong_separoid(r).at("C7").verdict == Verdict::not_applicable);
}

TEST_CASE("the full relation violates basicness") {
  auto r = CIRelation::full(chain_lattice(3));
  CHECK(check_qseparoid(r).passed());
  auto b = check_basic(r);
  CHECK(b.at("basic").verdict == Verdict::fail);
  CHECK(b.at("basic").witness == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("an empty relation fails C1 at the first pair") {
  auto r = check_qseparoid(CIRelation(chain_lattice(2)));
  CHECK(r.at("C1").verdict == Verdict::fail);
  CHECK(r.at("C1").witness == std::vector<std::size_t>{0, 0});
}

TEST_CASE("partition independence is a basic q-separoid") {
  auto parts = all_partitions(4);
  auto lat = partition_lattice(parts);
  auto r = relation_from_partitions(lat, parts);
  for (std::size_t x = 0; x < parts.size(); ++x)
    for (std::size_t y = 0; y < parts.size(); ++y)
      for (std::size_t z = 0; z < parts.size(); ++z)
        REQUIRE(r.contains(x, y, z) == oracle::cond_independent(parts[x], parts[y], parts[z]));
  CHECK(check_qseparoid(r).passed());
  CHECK(check_basic(r).passed());
  // It implies the lattice relation everywhere.
  CHECK(r.is_subset_of(lattice_relation(lat)));
  CHECK_FALSE(lattice_relation(lat).is_subset_of(r));
}

TEST_CASE("pullback along a join-homomorphism") {
  auto p = powerset_lattice(2);
  std::vector<std::size_t> id{0, 1, 2, 3};
  CHECK(pullback_relation(p, id, lattice_relation(p)) == lattice_relation(p));
  // Constant map to the top is join-preserving; everything is independent given the top.
  std::vector<std::size_t> top{3, 3, 3, 3};
  CHECK(pullback_relation(p, top, lattice_relation(p)).count() == 64);
  std::vector<std::size_t> bad{0, 1, 2, 2};
  CHECK_THROWS_AS(pullback_relation(p, bad, lattice_relation(p)), InvalidArgument);
}
