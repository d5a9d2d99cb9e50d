#include <filesystem>

#include "doctest.h"
#include "infalg/io.hpp"

using namespace infalg;

namespace {

std::string fixture_path(const std::string& name) { return std::string(INFALG_FIXTURE_DIR) + "/" + name; }

bool same_tables(const InfoAlgebra& a, const InfoAlgebra& b) {
  return a.names() == b.names() && a.combine_table() == b.combine_table() && a.extract_table() == b.extract_table() &&
         a.unit() == b.unit() && a.null() == b.null() && a.domains().poset().names() == b.domains().poset().names();
}

}  // namespace

TEST_CASE("abstract round trip preserves tables and digest") {
  for (const auto& f : bundled_fixtures()) {
    auto j = instance_to_json(f.algebra);
    auto back = instance_from_json(parse_json(j.dump()));
    CHECK(same_tables(f.algebra, back));
    CHECK(instance_digest(back) == instance_digest(f.algebra));
  }
  CHECK(instance_digest(multivariate_fixture()) != instance_digest(string_fixture()));
  CHECK(instance_digest(multivariate_fixture()).size() == 16);
}

TEST_CASE("syntax errors report a byte offset") {
  try {
    parse_json("{\"kind\": \"string\",, }");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("byte 19") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file("/nonexistent/instance.json"), InputError);
}

TEST_CASE("instance kinds dispatch to the constructors") {
  auto s = instance_from_json(parse_json(R"({"kind":"string","alphabet_size":2,"max_len":3})"));
  CHECK(same_tables(s, string_fixture()));
  auto mv = instance_from_json(parse_json(R"({"kind":"multivariate","frames":[2,2]})"));
  CHECK(same_tables(mv, multivariate_fixture()));
  auto lv = instance_from_json(
      parse_json(R"({"kind":"lattice_valued","universe":2,"partitions":[[[0,1]],[[0],[1]]],"values":"chain:3"})"));
  CHECK(same_tables(lv, lattice_valued_fixture()));
  auto nc = instance_from_json(
      parse_json(R"({"kind":"set_algebra","universe":3,"partitions":[[[0,1],[2]],[[0],[1,2]],[[0],[1],[2]]]})"));
  CHECK(same_tables(nc, noncommutative_fixture()));
  auto fx = instance_from_json(parse_json(R"({"kind":"fixture","name":"footnote"})"));
  CHECK(same_tables(fx, footnote_fixture()));
}

TEST_CASE("bad instances are input errors") {
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"frames":[2]})")), InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"kind":"torus"})")), InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"kind":"string","alphabet_size":-1,"max_len":2})")), InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"kind":"set_algebra","universe":2,"partitions":[[[0],[0,1]]]})")),
                  InputError);
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"kind":"string","alphabet_size":2,"max_len":6})")), BoundExceeded);
  LoadOptions big;
  big.max_carrier = 128;
  CHECK_NOTHROW(instance_from_json(parse_json(R"({"kind":"string","alphabet_size":2,"max_len":6})"), big));
  auto j = instance_to_json(footnote_fixture());
  j["extract"].erase("y");
  CHECK_THROWS_AS(instance_from_json(j), InputError);
  j = instance_to_json(footnote_fixture());
  j["combine"][0][0] = "nope";
  CHECK_THROWS_AS(instance_from_json(j), InputError);
}

TEST_CASE("explicit set-algebra elements") {
  auto a = instance_from_json(parse_json(
      R"({"kind":"set_algebra","universe":3,"partitions":[[[0,1],[2]],[[0],[1],[2]]],
          "domain_names":["coarse","fine"],"elements":[[0,1,2],[],[0],[0,1]]})"));
  CHECK(a.size() == 4);
  CHECK(a.domain_name(0) == "coarse");
  CHECK_THROWS_AS(instance_from_json(parse_json(
                      R"({"kind":"set_algebra","universe":3,"partitions":[[[0],[1],[2]]],"elements":[[0,1,2],[0,1],[1,2]]})")),
                  InvalidArgument);
}

TEST_CASE("partitions and lattices") {
  auto p = partition_from_json(parse_json("[[3,1],[0,2]]"), 4);
  CHECK(partition_to_json(p).dump() == "[[0,2],[1,3]]");
  CHECK_THROWS_AS(partition_from_json(parse_json("[[0,1],[1]]"), 2), InputError);
  auto l = lattice_from_json(parse_json(R"({"elements":["b","t","x"],"leq":[["b","x"],[2,1]]})"));
  CHECK(l.top() == 1);
  CHECK(l.bottom() == 0);
  auto back = lattice_from_json(lattice_to_json(n5_lattice()));
  CHECK(back.poset().names() == n5_lattice().poset().names());
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(back.leq(i, j) == n5_lattice().leq(i, j));
}

TEST_CASE("relations by index or by name") {
  auto l = n5_lattice();
  auto r = relation_from_json(parse_json(R"({"triples":[["a","b","0"],[1,1,1]]})"), l);
  CHECK(r.count() == 2);
  CHECK(r.contains(1, 2, 0));
  CHECK(relation_to_json(r).dump() == R"({"triples":[[1,1,1],[1,2,0]]})");
  CHECK_THROWS_AS(relation_from_json(parse_json(R"({"triples":[["q","a","a"]]})"), l), InputError);
}

TEST_CASE("reports serialize verdicts as booleans") {
  Report r;
  r.pass("a");
  r.fail("b", {1, 2}, "why");
  r.not_applicable("c", "skipped");
  auto j = report_to_json(r, false);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][0]["passed"] == true);
  CHECK(j["checks"][1]["witness"] == json::array({1, 2}));
  CHECK(j["checks"][2]["passed"].is_null());
  CHECK_FALSE(j["checks"][0].contains("millis"));
  CHECK(report_to_json(r, true)["checks"][0].contains("millis"));
}

TEST_CASE("embedding reports serialize maps as arrays") {
  auto mv = multivariate_fixture();
  auto e = build_embedding(mv, make_generating_set(mv, GeneratingKind::atoms));
  auto j = embedding_to_json(e, false);
  CHECK(j["embedding"] == true);
  CHECK(j["f"][mv.unit()] == json::array({0, 1, 2, 3}));
  CHECK(j["g"][0] == json::parse("[[0,1,2,3]]"));
}

TEST_CASE("bundled fixture files load") {
  for (const auto* name : {"multivariate.json", "string.json", "lattice_valued.json", "footnote.json",
                           "noncommutative.json", "chain_carrier.json", "multivariate_tampered.json"}) {
    CAPTURE(name);
    CHECK_NOTHROW(load_instance(fixture_path(name)));
  }
  CHECK_THROWS_AS(load_instance(fixture_path("malformed.json")), InputError);
  CHECK_FALSE(verify_axioms(load_instance(fixture_path("multivariate_tampered.json"))).passed());
}
