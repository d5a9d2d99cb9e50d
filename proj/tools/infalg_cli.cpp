// infalg: verify, classify and embed finite information algebras.
// JSON report on stdout, short summary on stderr.
// Exit codes: 0 all checks pass, 1 some check fails, 2 input or usage error.

#include <cctype>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "infalg/embedding.hpp"
#include "infalg/info_algebra.hpp"
#include "infalg/io.hpp"
#include "infalg/separoid.hpp"

using namespace infalg;

namespace {

struct Output {
  json doc = json::object();
  Report checks;
  bool timing = true;

  // Runs one stage and stamps its checks with the stage's wall time.
  template <class F>
  Report stage(const std::string& prefix, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    Report stamped;
    for (auto c : r.checks()) {
      c.millis = ms;
      stamped.add(std::move(c));
    }
    checks.merge(prefix, stamped);
    return r;
  }

  int finish() {
    doc["checks"] = report_to_json(checks, timing)["checks"];
    doc["passed"] = checks.passed();
    std::cout << doc.dump(2) << "\n";
    for (const auto& c : checks.checks())
      if (!c.passed()) {
        std::cerr << "FAIL " << c.name;
        if (!c.witness.empty()) {
          std::cerr << " witness (";
          for (std::size_t i = 0; i < c.witness.size(); ++i) std::cerr << (i ? "," : "") << c.witness[i];
          std::cerr << ")";
        }
        if (!c.detail.empty()) std::cerr << " " << c.detail;
        std::cerr << "\n";
      }
    std::cerr << (checks.passed() ? "PASS" : "FAIL") << " (" << checks.checks().size() << " checks)\n";
    return checks.passed() ? 0 : 1;
  }
};

std::size_t env_bound(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw InputError(std::string("environment variable ") + name + " is not a number");
  }
}

std::optional<GeneratingKind> kind_from_name(const std::string& s) {
  if (s == "full") return GeneratingKind::full;
  if (s == "atoms") return GeneratingKind::atoms;
  if (s == "meet-irreducible") return GeneratingKind::meet_irreducibles;
  return std::nullopt;
}

std::size_t domain_arg(const InfoAlgebra& a, const std::string& s) {
  auto x = a.domain_index(s);
  if (x == npos && (s == "∅" || s == "{}" || s.empty())) x = a.domain_index("{}");
  if (x != npos) return x;
  throw InputError("unknown domain '" + s + "'");
}

// First kind whose generating set yields a verified embedding.
std::optional<EmbeddingReport> some_embedding(const InfoAlgebra& a) {
  for (auto k : {GeneratingKind::full, GeneratingKind::atoms, GeneratingKind::meet_irreducibles}) {
    auto e = build_embedding(a, make_generating_set(a, k));
    if (e.is_embedding()) return e;
  }
  return std::nullopt;
}

int cmd_verify(Output& out, const InfoAlgebra& a, bool strict_e4) {
  auto axioms = out.stage("axioms", [&] { return verify_axioms(a, {strict_e4}); });
  if (axioms.passed())
    out.stage("support", [&] { return support_lemma_check(a); });
  return out.finish();
}

int cmd_classify(Output& out, const InfoAlgebra& a) {
  auto axioms = out.stage("axioms", [&] { return verify_axioms(a); });
  if (!axioms.passed()) return out.finish();
  json flags, reasons = json::object();
  out.stage("classify", [&] {
    Report r;
    const auto at = compute_atoms(a);
    flags["atomic"] = at.classification >= AtomClass::atomic;
    flags["atomistic"] = at.classification >= AtomClass::atomistic;
    flags["completely_atomistic"] = at.classification == AtomClass::completely_atomistic;
    flags["atoms"] = members_of(at.atoms);
    const auto local = classify_locally_atomic(a);
    flags["locally_atomic"] = local.locally_atomic;
    flags["locally_atomistic"] = local.locally_atomistic;
    flags["locally_completely_atomistic"] = local.locally_completely_atomistic;
    flags["boolean"] = a.has_lattice_order() && is_boolean(a.order());
    std::string reason;
    distributive_preconditions(a, reason);
    flags["distributive_lattice_algebra"] = reason.empty();
    if (!reason.empty()) reasons["distributive_lattice_algebra"] = reason;
    const auto comm = is_commutative(a);
    flags["commutative"] = comm.commutative;
    if (!comm.commutative) reasons["commutative"] = comm.reason;
    r.pass("classified");
    return r;
  });
  out.doc["classification"] = flags;
  out.doc["reasons"] = reasons;
  return out.finish();
}

int cmd_embed(Output& out, const InfoAlgebra& a, const std::string& generating, bool uniqueness) {
  auto axioms = out.stage("axioms", [&] { return verify_axioms(a); });
  if (!axioms.passed()) return out.finish();
  if (generating == "tuple") {
    out.stage("embedding", [&] {
      auto t = build_tuple_system(a, relative_atom_sets(a));
      out.doc["embedding"] = embedding_to_json(t.report, out.timing);
      Report r = t.report.checks;
      if (!t.report.reason.empty()) r.fail("applicable", {}, t.report.reason);
      return r;
    });
  } else {
    const auto kind = *kind_from_name(generating);
    if (kind == GeneratingKind::atoms && compute_atoms(a).classification < AtomClass::atomistic) {
      out.checks.fail("applicable", {}, "algebra is not atomistic (" +
                                            std::string(to_string(compute_atoms(a).classification)) + ")");
      return out.finish();
    }
    out.stage("embedding", [&] {
      auto e = build_embedding(a, make_generating_set(a, kind));
      out.doc["embedding"] = embedding_to_json(e, out.timing);
      Report r = e.checks;
      if (!e.reason.empty()) r.fail("applicable", {}, e.reason);
      return r;
    });
  }
  if (uniqueness)
    out.stage("uniqueness", [&] {
      std::vector<CIRelation> rels;
      json kinds = json::array();
      for (auto k : {GeneratingKind::full, GeneratingKind::atoms, GeneratingKind::meet_irreducibles}) {
        auto e = build_embedding(a, make_generating_set(a, k));
        if (!e.reason.empty()) continue;
        rels.push_back(partition_relation(a, e));
        kinds.push_back(std::string(to_string(k)));
      }
      auto t = build_tuple_system(a, relative_atom_sets(a));
      if (t.report.is_embedding()) {
        rels.push_back(induced_ci(a, t.report));
        kinds.push_back("tuple");
      }
      out.doc["uniqueness_kinds"] = kinds;
      return ci_uniqueness_check(a, rels);
    });
  return out.finish();
}

int cmd_ci(Output& out, const InfoAlgebra& a, const std::string& xs, const std::string& ys, const std::string& zs,
           const std::string& relation, bool properties) {
  const auto x = domain_arg(a, xs), y = domain_arg(a, ys), z = domain_arg(a, zs);
  std::optional<CIRelation> rel;
  if (relation == "induced") {
    auto e = some_embedding(a);
    if (!e) {
      out.checks.fail("applicable", {}, "no generating kind yields a verified embedding");
      return out.finish();
    }
    out.doc["generating"] = e->kind;
    rel = induced_ci(a, *e);
  } else {
    if (!a.domains().is_lattice()) throw InputError("relation '" + relation + "' needs a domain lattice");
    rel = relation == "lattice" ? lattice_relation(a.domains()) : dawid_relation(a.domains());
  }
  const bool holds = rel->contains(x, y, z);
  out.doc["triple"] = {a.domain_name(x), a.domain_name(y), a.domain_name(z)};
  out.doc["independent"] = holds;
  out.checks.verdict("independent", holds, holds ? std::vector<std::size_t>{} : std::vector<std::size_t>{x, y, z},
                     "(x, y, z)");
  if (properties)
    out.stage("properties", [&] {
      CIRelation single(a.domains());
      single.insert(x, y, z);
      return verify_comb_extr_properties(a, single);
    });
  return out.finish();
}

std::set<std::string> parse_axioms(const std::string& spec) {
  std::set<std::string> out;
  std::string s;
  for (char c : spec) s += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    auto num = [&](const std::string& t) {
      if (t.size() != 2 || t[0] != 'C' || t[1] < '1' || t[1] > '7') throw InputError("unknown axiom '" + t + "'");
      return t[1] - '0';
    };
    if (dash == std::string::npos) {
      out.insert("C" + std::to_string(num(item)));
    } else {
      for (int i = num(item.substr(0, dash)); i <= num(item.substr(dash + 1)); ++i) out.insert("C" + std::to_string(i));
    }
  }
  return out;
}

int cmd_separoid(Output& out, const std::string& source, const std::string& axioms, const std::string& relation,
                 const std::string& relation_file, const LoadOptions& opts) {
  std::optional<Semilattice> lat;
  try {
    lat = builtin_lattice(source);
  } catch (const InvalidArgument&) {
    const auto j = read_json_file(source);
    if (j.contains("kind"))
      lat = instance_from_json(j, opts).domains();
    else
      lat = lattice_from_json(j);
  }
  out.doc["lattice"] = lattice_to_json(*lat);
  std::optional<CIRelation> rel;
  if (relation == "from-file") {
    if (relation_file.empty()) throw InputError("--relation from-file needs --relation-file");
    rel = relation_from_json(read_json_file(relation_file), *lat);
  } else {
    if (!lat->is_lattice()) throw InputError("relation '" + relation + "' needs a lattice");
    rel = relation == "lattice" ? lattice_relation(*lat) : dawid_relation(*lat);
  }
  out.doc["relation_size"] = rel->count();
  const auto wanted = parse_axioms(axioms);
  const auto all = check_all_axioms(*rel);
  Report r;
  for (const auto& c : all.checks())
    if (wanted.count(c.name)) r.add(c);
  out.stage("", [&] { return r; });
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite information algebras: axioms, embeddings and conditional independence"};
  app.require_subcommand(1);
  bool no_timing = false;
  std::size_t max_carrier = 0;
  app.add_flag("--no-timing", no_timing, "Omit timing fields from the report");
  app.add_option("--max-carrier", max_carrier, "Largest generated carrier (default from INFALG_MAX_CARRIER or 64)");

  std::string file, generating = "full", relation, relation_file, xs, ys, zs, axioms = "c1-c7";
  bool strict_e4 = true, uniqueness = false, properties = false;

  auto* verify = app.add_subcommand("verify", "Check the axioms and the support lemma");
  verify->add_option("file", file, "Instance JSON")->required();
  verify->add_flag("--strict-e4,!--no-strict-e4", strict_e4, "Require a support for every element (default on)");

  auto* classify = app.add_subcommand("classify", "Atomicity, Boolean, distributive and commutative flags");
  classify->add_option("file", file, "Instance JSON")->required();

  auto* embed = app.add_subcommand("embed", "Build and verify a set-algebra embedding");
  embed->add_option("file", file, "Instance JSON")->required();
  embed->add_option("--generating", generating, "Generating set")
      ->check(CLI::IsMember({"full", "atoms", "meet-irreducible", "tuple"}));
  embed->add_flag("--check-uniqueness", uniqueness, "Compare induced relations across generating kinds");

  auto* ci = app.add_subcommand("ci", "Conditional independence of three domains");
  ci->add_option("file", file, "Instance JSON")->required();
  ci->add_option("--x", xs, "Domain name")->required();
  ci->add_option("--y", ys, "Domain name")->required();
  ci->add_option("--z", zs, "Domain name")->required();
  relation = "induced";
  ci->add_option("--relation", relation, "induced, lattice or dawid")
      ->check(CLI::IsMember({"induced", "lattice", "dawid"}));
  ci->add_flag("--properties", properties, "Also check the combination and extraction properties");

  std::string source, sep_relation = "lattice";
  auto* separoid = app.add_subcommand("separoid", "Separoid axioms of a relation on a lattice");
  separoid->add_option("source", source, "Builtin lattice (N5, M3, chain:n, powerset:k, ...) or JSON file")
      ->required();
  separoid->add_option("--axioms", axioms, "Axioms to report, e.g. c1-c4 or c5,c7");
  separoid->add_option("--relation", sep_relation, "lattice, dawid or from-file")
      ->check(CLI::IsMember({"lattice", "dawid", "from-file"}));
  separoid->add_option("--relation-file", relation_file, "JSON {\"triples\": [...]} for --relation from-file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Output out;
  out.timing = !no_timing;
  json echo = json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
  out.doc["command"] = echo;
  try {
    LoadOptions opts;
    opts.max_carrier = max_carrier ? max_carrier : env_bound("INFALG_MAX_CARRIER", default_max_carrier);
    if (separoid->parsed()) return cmd_separoid(out, source, axioms, sep_relation, relation_file, opts);
    const auto a = load_instance(file, opts);
    out.doc["instance"] = instance_digest(a);
    out.doc["size"] = a.size();
    out.doc["domains"] = a.domain_count();
    if (verify->parsed()) return cmd_verify(out, a, strict_e4);
    if (classify->parsed()) return cmd_classify(out, a);
    if (embed->parsed()) return cmd_embed(out, a, generating, uniqueness);
    return cmd_ci(out, a, xs, ys, zs, relation, properties);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const InvalidArgument& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
  }
  return 2;
}
