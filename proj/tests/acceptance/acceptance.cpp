// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infalg/embedding.hpp"
#include "infalg/examples.hpp"
#include "infalg/separoid.hpp"
#include "oracles.hpp"

using namespace infalg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

std::string witness_text(const std::vector<std::size_t>& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (c.verdict == Verdict::fail) s += (s.empty() ? "" : ", ") + c.name + witness_text(c.witness);
  return s;
}

int failed = 0;

void run(const std::string& id, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s >= limit_s) out.require(false, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s));
  if (!out.ok) ++failed;
  std::printf("%s %s %.3fs %s\n", id.c_str(), out.ok ? "PASS" : "FAIL", s, out.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::size_t> saturated_masks(const Partition& p) {
  std::vector<std::size_t> out;
  for_each_subset(p.universe(), [&](const Subset& s) {
    if (is_saturated(p, s)) out.push_back(s.to_ulong());
  });
  return out;
}

Subset mask(std::size_t n, std::size_t m) { return Subset(n, m); }

// Closure of a family under partition join and meet.
std::vector<Partition> sublattice(std::vector<Partition> fam) {
  for (bool grew = true; grew;) {
    grew = false;
    const auto cur = fam;
    for (const auto& p : cur)
      for (const auto& q : cur)
        for (const auto& r : {partition_join(p, q), partition_meet(p, q)})
          if (std::find(fam.begin(), fam.end(), r) == fam.end()) {
            fam.push_back(r);
            grew = true;
          }
  }
  return fam;
}

bool lattice_condition(const Partition& p1, const Partition& p2, const Partition& p) {
  return partition_meet(partition_join(p1, p), partition_join(p2, p)) == p;
}

std::vector<NamedInstance> distributive_fixtures() {
  return {{"lattice_valued", lattice_valued_fixture()}, {"multivariate", multivariate_fixture()}};
}

}  // namespace

int main() {
  const auto parts = all_partitions(4);

  run("AC1", 5.0, [&] {
    Outcome o;
    auto lat = partition_lattice(parts);
    auto rel = relation_from_partitions(lat, parts);
    std::size_t disagreements = 0;
    for (std::size_t x = 0; x < parts.size(); ++x)
      for (std::size_t y = 0; y < parts.size(); ++y)
        for (std::size_t z = 0; z < parts.size(); ++z)
          disagreements += rel.contains(x, y, z) != oracle::cond_independent(parts[x], parts[y], parts[z]);
    o.require(parts.size() == 15, "expected 15 partitions");
    o.require(disagreements == 0, std::to_string(disagreements) + " triples disagree with the pointwise oracle");
    auto q = check_qseparoid(rel);
    o.require(q.passed(), "violations: " + failures(q));
    if (o.ok) o.detail = "C1-C4 hold over 3375 triples, " + std::to_string(rel.count()) + " independent";
    return o;
  });

  run("AC2", 30.0, [&] {
    Outcome o;
    std::size_t checked = 0, violations = 0;
    std::optional<std::vector<std::size_t>> first;
    for (std::size_t i1 = 0; i1 < parts.size(); ++i1)
      for (std::size_t i2 = 0; i2 < parts.size(); ++i2)
        for (std::size_t i = 0; i < parts.size(); ++i) {
          const auto &p1 = parts[i1], &p2 = parts[i2], &p = parts[i];
          if (!cond_independent(p1, p2, p)) continue;
          for (auto xm : saturated_masks(p1))
            for (auto ym : saturated_masks(p2)) {
              const auto x = mask(4, xm), y = mask(4, ym);
              ++checked;
              const bool comb = saturate(p, x & y) == (saturate(p, x) & saturate(p, y));
              const bool extr = saturate(p2, x) == saturate(p2, saturate(p, x));
              if (!comb || !extr) {
                ++violations;
                if (!first) first = std::vector<std::size_t>{i1, i2, i, xm, ym};
              }
            }
        }
    o.require(violations == 0, std::to_string(violations) + " violations, first " + witness_text(first.value_or(std::vector<std::size_t>{})));
    if (o.ok) o.detail = std::to_string(checked) + " (triple, X, Y) cases";
    return o;
  });

  run("AC3", 0, [&] {
    Outcome o;
    // The 2x2 grid: rows and columns commute, and so does everything they generate.
    auto grid = sublattice({Partition::from_blocks(4, {{0, 1}, {2, 3}}), Partition::from_blocks(4, {{0, 2}, {1, 3}})});
    for (const auto& p : grid)
      for (const auto& q : grid) o.require(commute(p, q) && oracle::commute(p, q), "grid sublattice not commuting");
    std::size_t mismatches = 0;
    for (const auto& p1 : grid)
      for (const auto& p2 : grid)
        for (const auto& p : grid) mismatches += cond_independent(p1, p2, p) != lattice_condition(p1, p2, p);
    o.require(mismatches == 0, std::to_string(mismatches) + " equivalence failures on the grid sublattice");

    std::size_t forward = 0;
    for (const auto& p1 : parts)
      for (const auto& p2 : parts)
        for (const auto& p : parts) forward += cond_independent(p1, p2, p) && !lattice_condition(p1, p2, p);
    o.require(forward == 0, std::to_string(forward) + " triples independent without the lattice condition");

    // First non-commuting pair (in partition order) admitting a conditioning
    // partition where the lattice condition holds but independence fails.
    std::optional<std::vector<std::size_t>> w;
    for (std::size_t i1 = 0; i1 < parts.size() && !w; ++i1)
      for (std::size_t i2 = 0; i2 < parts.size() && !w; ++i2) {
        if (commute(parts[i1], parts[i2])) continue;
        for (std::size_t i = 0; i < parts.size() && !w; ++i)
          if (lattice_condition(parts[i1], parts[i2], parts[i]) && !cond_independent(parts[i1], parts[i2], parts[i]))
            w = std::vector<std::size_t>{i1, i2, i};
      }
    o.require(w.has_value(), "no non-commuting witness for the reverse direction");
    if (o.ok)
      o.detail = std::to_string(grid.size()) + "-element grid sublattice equivalent; reverse fails at " +
                 parts[(*w)[0]].to_string() + ", " + parts[(*w)[1]].to_string() + " | " + parts[(*w)[2]].to_string();
    return o;
  });

  run("AC4", 60.0, [&] {
    Outcome o;
    std::size_t n = 0;
    auto one = [&](const std::string& label, const InfoAlgebra& a) {
      ++n;
      auto ax = verify_axioms(a);
      auto sl = support_lemma_check(a);
      o.require(ax.passed(), label + " axioms: " + failures(ax));
      o.require(sl.passed(), label + " support lemma: " + failures(sl));
    };
    for (std::uint64_t seed = 0; seed < 1000; ++seed) one("seed " + std::to_string(seed), random_instance(seed));
    for (const auto& f : bundled_fixtures()) one(f.name, f.algebra);
    if (o.ok) o.detail = std::to_string(n) + " instances";
    return o;
  });

  run("AC5", 0, [&] {
    Outcome o;
    for (const auto& [name, a] : std::vector<NamedInstance>{
             {"string", string_fixture()}, {"multivariate", multivariate_fixture()},
             {"lattice_valued", lattice_valued_fixture()}}) {
      auto e = build_embedding(a, make_generating_set(a, GeneratingKind::full));
      o.require(e.is_embedding(), name + ": " + (e.reason.empty() ? failures(e.checks) : e.reason));
    }
    if (o.ok) o.detail = "all three fixtures embed";
    return o;
  });

  run("AC6", 0, [&] {
    Outcome o;
    auto mv = multivariate_fixture();
    auto b = finite_boolean_representation(mv);
    o.require(b.is_embedding(), "representation: " + (b.reason.empty() ? failures(b.checks) : b.reason));
    for (const char* c : {"bijective", "f_combination", "meet_to_union", "complement", "f_null", "f_unit", "extraction"})
      o.require(b.checks.has(c) && b.checks.at(c).verdict == Verdict::pass, std::string(c) + " not verified");
    auto bc = boolean_checks(mv);
    o.require(bc.passed(), "Boolean facts: " + failures(bc));
    const auto atoms = compute_atoms(mv).atoms.count();
    const auto maximal = oracle::maximal_ideal_count(mv.order());
    std::size_t lib_maximal = 0;
    for (const auto& i : enumerate_ideals(mv.order())) lib_maximal += i.maximal;
    o.require(maximal == atoms && lib_maximal == atoms,
              "atoms " + std::to_string(atoms) + ", maximal ideals " + std::to_string(maximal));
    if (o.ok) o.detail = std::to_string(atoms) + " atoms = " + std::to_string(maximal) + " maximal ideals";
    return o;
  });

  run("AC7", 0, [&] {
    Outcome o;
    auto lv = lattice_valued_fixture();
    auto m = make_generating_set(lv, GeneratingKind::meet_irreducibles);
    auto sog = is_strongly_order_generating(lv, m.members);
    o.require(sog.verdict == Verdict::pass, "meet-irreducibles not strongly order-generating " + witness_text(sog.witness));
    auto d = finite_distributive_representation(lv);
    o.require(d.is_embedding(), "upset embedding: " + (d.reason.empty() ? failures(d.checks) : d.reason));
    for (const char* c : {"aux_lemma_1", "aux_lemma_2"})
      o.require(d.checks.has(c) && d.checks.at(c).verdict == Verdict::pass, std::string(c) + " not witnessed");
    auto fn = finite_distributive_representation(footnote_fixture());
    o.require(!fn.is_embedding() && fn.reason == "quantifier does not distribute over meet",
              "footnote fixture not rejected correctly: '" + fn.reason + "'");
    if (o.ok) o.detail = std::to_string(m.members.count()) + " meet-irreducibles; footnote rejected";
    return o;
  });

  run("AC8", 0, [&] {
    Outcome o;
    for (const auto& f : distributive_fixtures()) {
      auto r = finite_prime_ideal_check(f.algebra);
      o.require(r.passed(), f.name + ": " + failures(r));
      for (const char* c : {"extraction_identity", "cignoli_1", "cignoli_2"})
        o.require(r.has(c) && r.at(c).verdict == Verdict::pass, f.name + ": " + c + " not verified");
    }
    if (o.ok) o.detail = "lattice_valued, multivariate";
    return o;
  });

  run("AC9", 0, [&] {
    Outcome o;
    std::size_t compared = 0;
    for (const auto& f : bundled_fixtures()) {
      std::vector<CIRelation> rels;
      for (auto k : {GeneratingKind::full, GeneratingKind::atoms, GeneratingKind::meet_irreducibles}) {
        auto e = build_embedding(f.algebra, make_generating_set(f.algebra, k));
        if (e.reason.empty()) rels.push_back(partition_relation(f.algebra, e));
      }
      if (rels.size() < 2) continue;
      ++compared;
      for (std::size_t i = 1; i < rels.size(); ++i)
        o.require(rels[i] == rels[0], f.name + ": relation " + std::to_string(i) + " differs");
    }
    if (o.ok) o.detail = std::to_string(compared) + " fixtures with several generating sets agree";
    return o;
  });

  run("AC10", 0, [&] {
    Outcome o;
    std::vector<std::pair<std::string, Semilattice>> corpus{{"M3", m3_lattice()},         {"N5", n5_lattice()},
                                                            {"chain:1", chain_lattice(1)}, {"chain:2", chain_lattice(2)},
                                                            {"chain:3", chain_lattice(3)}, {"chain:4", chain_lattice(4)},
                                                            {"powerset:1", powerset_lattice(1)},
                                                            {"powerset:2", powerset_lattice(2)},
                                                            {"powerset:3", powerset_lattice(3)},
                                                            {"partitions:3", partition_lattice(3)}};
    for (const auto& [name, l] : corpus) {
      auto rel = lattice_relation(l);
      auto q = check_qseparoid(rel);
      o.require(q.passed(), name + " C1-C4: " + failures(q));
      auto s = check_separoid(rel);
      o.require(s.passed() == is_modular(l), name + " C5-C6 " + (s.passed() ? "pass" : "fail") + " but modular is " +
                                                 (is_modular(l) ? "true" : "false"));
      if (name == "N5") o.require(!s.passed(), "N5 gave no C5/C6 witness");
      if (is_distributive(l)) {
        auto c7 = check_strong_separoid(rel);
        o.require(c7.passed(), name + " C7: " + failures(c7));
      }
      auto b = check_basic(rel);
      o.require(b.passed(), name + " basic: " + failures(b));
    }
    auto rel = relation_from_partitions(partition_lattice(parts), parts);
    auto b = check_basic(rel);
    o.require(b.passed(), "partition CI basic: " + failures(b));
    if (o.ok) {
      auto n5 = check_separoid(lattice_relation(n5_lattice()));
      for (const auto& c : n5.checks())
        if (c.verdict == Verdict::fail) {
          o.detail = std::to_string(corpus.size()) + " lattices; N5 " + c.name + " witness " + witness_text(c.witness);
          break;
        }
    }
    return o;
  });

  run("AC11", 0, [&] {
    Outcome o;
    std::size_t runs = 0;
    for (const auto& f : bundled_fixtures()) {
      for (auto k : {GeneratingKind::full, GeneratingKind::atoms, GeneratingKind::meet_irreducibles}) {
        auto gs = make_generating_set(f.algebra, k);
        auto e = build_embedding(f.algebra, gs);
        if (!e.reason.empty()) continue;
        ++runs;
        auto r = element_level_ci_check(f.algebra, gs.members, partition_relation(f.algebra, e));
        o.require(r.passed(), f.name + "/" + std::string(to_string(k)) + ": " + failures(r));
      }
    }
    for (const auto& [name, a] :
         std::vector<NamedInstance>{{"multivariate", multivariate_fixture()}, {"string", string_fixture()}}) {
      auto gs = make_generating_set(a, GeneratingKind::full);
      auto e = build_embedding(a, gs);
      auto r = element_level_ci_check(a, gs.members, partition_relation(a, e));
      o.require(r.has("commutative_gluing") && r.at("commutative_gluing").verdict == Verdict::pass,
                name + ": commutative form not verified");
    }
    if (o.ok) o.detail = std::to_string(runs) + " (fixture, generating set) pairs";
    return o;
  });

  run("AC12", 0, [&] {
    Outcome o;
    auto mv = multivariate_fixture();
    auto t = build_tuple_system(mv, relative_atom_sets(mv));
    for (const char* c : {"projection_label", "projection_composition", "identity_projection", "extension", "conditional_extension"})
      o.require(t.report.checks.has(c) && t.report.checks.at(c).verdict == Verdict::pass,
                std::string("tuple property ") + c + " not verified");
    o.require(t.report.is_embedding(), "tuple embedding: " + failures(t.report.checks));
    if (o.ok) o.detail = std::to_string(t.system.maps.size()) + " consistent maps";
    return o;
  });

  return failed == 0 ? 0 : 1;
}
