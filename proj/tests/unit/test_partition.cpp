#include <unordered_set>

#include "doctest.h"
#include "infalg/partition.hpp"
#include "oracles.hpp"

using namespace infalg;

TEST_CASE("blocks are canonicalized by first occurrence") {
  auto p = Partition::from_blocks(4, {{3, 1}, {0, 2}});
  CHECK(p.labels() == std::vector<std::size_t>{0, 1, 0, 1});
  CHECK(p == Partition::from_labels(std::vector<std::size_t>{7, 2, 7, 2}));
  CHECK(p.to_string() == "{{0,2},{1,3}}");
  CHECK(p.block_count() == 2);
}

TEST_CASE("malformed block lists are rejected") {
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {}}), InvalidArgument);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{0, 5}}), InvalidArgument);
}

TEST_CASE("partition counts follow the Bell numbers") {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto all = all_partitions(n);
    CHECK(all.size() == oracle::bell(n));
    std::unordered_set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
  }
  CHECK(oracle::bell(4) == 15);
  CHECK_THROWS_AS(all_partitions(9), BoundExceeded);
  CHECK_THROWS_AS(all_partitions(0), InvalidArgument);
}

TEST_CASE("join and meet agree with the union-find oracle") {
  for (std::size_t n : {3, 4, 5}) {
    auto all = all_partitions(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        REQUIRE(partition_meet(a, b) == oracle::meet(a, b));
        REQUIRE(partition_join(a, b) == oracle::join(a, b));
      }
  }
}

TEST_CASE("join and meet are the lattice operations of refinement") {
  auto all = all_partitions(4);
  for (const auto& a : all)
    for (const auto& b : all) {
      auto j = partition_join(a, b), m = partition_meet(a, b);
      CHECK(refines(a, j));
      CHECK(refines(m, a));
      for (const auto& c : all) {
        if (refines(a, c) && refines(b, c)) REQUIRE(refines(j, c));
        if (refines(c, a) && refines(c, b)) REQUIRE(refines(c, m));
      }
    }
}

TEST_CASE("refinement agrees with the pairwise oracle") {
  auto all = all_partitions(4);
  for (const auto& a : all)
    for (const auto& b : all) REQUIRE(refines(a, b) == oracle::leq(a, b));
  CHECK(refines(Partition::coarsest(4), Partition::finest(4)));
  CHECK_FALSE(refines(Partition::finest(4), Partition::coarsest(4)));
}

TEST_CASE("saturation agrees with the pointwise oracle") {
  for (const auto& p : all_partitions(4))
    for_each_subset(4, [&](const Subset& s) {
      REQUIRE(saturate(p, s) == oracle::saturate(p, s));
      REQUIRE(is_saturated(p, saturate(p, s)));
    });
}

TEST_CASE("the saturation lemma holds") {
  for (const auto& p : all_partitions(4))
    for_each_subset(4, [&](const Subset& x) {
      CHECK(saturate(p, Subset(4)).none());
      CHECK(x.is_subset_of(saturate(p, x)));
      for_each_subset(4, [&](const Subset& y) {
        if (x.is_subset_of(y)) REQUIRE(saturate(p, x).is_subset_of(saturate(p, y)));
        REQUIRE(saturate(p, saturate(p, x) & y) == (saturate(p, x) & saturate(p, y)));
      });
    });
}

TEST_CASE("commuting agrees with composing saturations on every subset") {
  std::size_t commuting = 0, total = 0;
  for (std::size_t n : {3, 4}) {
    auto all = all_partitions(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        REQUIRE(commute(a, b) == oracle::commute(a, b));
        commuting += commute(a, b);
        ++total;
      }
  }
  CHECK(commuting < total);
  CHECK(commute(Partition::from_blocks(3, {{0, 1}, {2}}), Partition::from_blocks(3, {{0}, {1, 2}})) == false);
}

TEST_CASE("conditional independence agrees with the pointwise oracle") {
  auto all = all_partitions(4);
  std::size_t holds = 0;
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        REQUIRE(cond_independent(a, b, c) == oracle::cond_independent(a, b, c));
        holds += cond_independent(a, b, c);
      }
  CHECK(holds > 0);
  CHECK(holds < all.size() * all.size() * all.size());
}

TEST_CASE("independence of coordinate partitions") {
  // Points of {0,1}^2 in the order 00,01,10,11.
  auto first = Partition::from_blocks(4, {{0, 1}, {2, 3}});
  auto second = Partition::from_blocks(4, {{0, 2}, {1, 3}});
  const Partition pair[] = {first, second};
  CHECK(independent(pair));
  const Partition same[] = {first, first};
  CHECK_FALSE(independent(same));
  CHECK(cond_independent(first, first, first));
  CHECK_THROWS_AS(independent(std::span<const Partition>(pair, 1)), InvalidArgument);
}

TEST_CASE("pairwise independence does not give joint independence") {
  // Even-parity points 000,011,101,110 with one partition per coordinate.
  auto coord = [](std::size_t bit) {
    const std::size_t pts[] = {0b000, 0b011, 0b101, 0b110};
    std::vector<std::size_t> labels;
    for (auto p : pts) labels.push_back(p >> bit & 1);
    return Partition::from_labels(labels);
  };
  const Partition three[] = {coord(0), coord(1), coord(2)};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const Partition two[] = {three[i], three[j]};
      CHECK(independent(two));
    }
  CHECK_FALSE(independent(three));
}

TEST_CASE("subset enumeration is bounded") {
  std::size_t count = 0;
  for_each_subset(5, [&](const Subset&) { ++count; });
  CHECK(count == 32);
  CHECK_THROWS_AS(for_each_subset(17, [](const Subset&) {}), BoundExceeded);
}
