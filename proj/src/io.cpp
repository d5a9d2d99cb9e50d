#include "infalg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace infalg {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw InputError(std::string(what) + " must be a non-negative integer, got " + j.dump());
  return j.get<std::size_t>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

// Index given either as an integer or as a name.
std::size_t resolve(const json& j, const std::vector<std::string>& names, const char* what) {
  if (j.is_string()) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == j.get<std::string>()) return i;
    throw InputError(std::string("unknown ") + what + " '" + j.get<std::string>() + "'");
  }
  auto i = as_index(j, what);
  if (i >= names.size()) throw InputError(std::string(what) + " index " + std::to_string(i) + " out of range");
  return i;
}

std::vector<Partition> partition_family(const json& j, std::size_t n) {
  if (!j.is_array() || j.empty()) throw InputError("'partitions' must be a nonempty array");
  std::vector<Partition> out;
  for (const auto& p : j) out.push_back(partition_from_json(p, n));
  return out;
}

InfoAlgebra abstract_from_json(const json& j) {
  auto names = string_list(field(j, "elements"), "elements");
  const std::size_t m = names.size();
  const auto& cj = field(j, "combine");
  if (!cj.is_array() || cj.size() != m) throw InputError("'combine' must have one row per element");
  Table comb;
  for (const auto& row : cj) {
    if (!row.is_array() || row.size() != m) throw InputError("'combine' rows must have one entry per element");
    std::vector<std::size_t> r;
    for (const auto& e : row) r.push_back(resolve(e, names, "element"));
    comb.push_back(std::move(r));
  }
  auto domains = lattice_from_json(field(j, "domains"));
  const auto& ej = field(j, "extract");
  Table ext(domains.size());
  std::vector<bool> seen(domains.size());
  if (!ej.is_object()) throw InputError("'extract' must map domain names to arrays");
  for (const auto& [key, row] : ej.items()) {
    const auto x = domains.poset().index_of(key);
    if (x == npos) throw InputError("'extract' names unknown domain '" + key + "'");
    if (!row.is_array() || row.size() != m) throw InputError("'extract' row for '" + key + "' has the wrong length");
    for (const auto& e : row) ext[x].push_back(resolve(e, names, "element"));
    seen[x] = true;
  }
  for (std::size_t x = 0; x < seen.size(); ++x)
    if (!seen[x]) throw InputError("'extract' lacks domain '" + domains.name(x) + "'");
  const auto unit = resolve(field(j, "unit"), names, "element");
  const auto null = resolve(field(j, "null"), names, "element");
  return InfoAlgebra(std::move(names), std::move(comb), unit, null, std::move(domains), std::move(ext));
}

InfoAlgebra fixture_by_name(const std::string& name) {
  for (auto& f : bundled_fixtures())
    if (f.name == name) return std::move(f.algebra);
  throw InputError("unknown fixture '" + name + "'");
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Partition partition_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) throw InputError("partition must be an array of blocks");
  std::vector<std::vector<std::size_t>> blocks;
  for (const auto& b : j) {
    if (!b.is_array()) throw InputError("partition block must be an array of points");
    std::vector<std::size_t> block;
    for (const auto& u : b) block.push_back(as_index(u, "point"));
    blocks.push_back(std::move(block));
  }
  try {
    return Partition::from_blocks(n, blocks);
  } catch (const InvalidArgument& e) {
    throw InputError(std::string("bad partition ") + j.dump() + ": " + e.what());
  }
}

json partition_to_json(const Partition& p) { return p.block_lists(); }

Semilattice lattice_from_json(const json& j) {
  if (j.is_string()) return builtin_lattice(j.get<std::string>());
  auto names = string_list(field(j, "elements"), "elements");
  const auto& lj = field(j, "leq");
  if (!lj.is_array()) throw InputError("'leq' must be an array of pairs");
  std::vector<Pair> pairs;
  for (const auto& p : lj) {
    if (!p.is_array() || p.size() != 2) throw InputError("'leq' entries must be pairs, got " + p.dump());
    pairs.push_back({resolve(p[0], names, "element"), resolve(p[1], names, "element")});
  }
  const auto m = names.size();
  return Semilattice(Poset::from_relation(m, pairs, std::move(names)));
}

json lattice_to_json(const Semilattice& l) {
  json leq = json::array();
  for (const auto& c : l.poset().covers()) leq.push_back({c[0], c[1]});
  return {{"elements", l.poset().names()}, {"leq", leq}};
}

CIRelation relation_from_json(const json& j, const Semilattice& domains) {
  const auto& tj = field(j, "triples");
  if (!tj.is_array()) throw InputError("'triples' must be an array");
  CIRelation r(domains);
  for (const auto& t : tj) {
    if (!t.is_array() || t.size() != 3) throw InputError("triple must have three entries, got " + t.dump());
    const auto& names = domains.poset().names();
    r.insert(resolve(t[0], names, "domain"), resolve(t[1], names, "domain"), resolve(t[2], names, "domain"));
  }
  return r;
}

json relation_to_json(const CIRelation& r) {
  json t = json::array();
  for (const auto& x : r.triples()) t.push_back({x[0], x[1], x[2]});
  return {{"triples", t}};
}

InfoAlgebra instance_from_json(const json& j, const LoadOptions& opts) {
  const auto& kj = field(j, "kind");
  if (!kj.is_string()) throw InputError("'kind' must be a string");
  const auto kind = kj.get<std::string>();
  if (kind == "abstract") return abstract_from_json(j);
  if (kind == "fixture") return fixture_by_name(field(j, "name").get<std::string>());
  if (kind == "string")
    return make_string_algebra(as_index(field(j, "alphabet_size"), "alphabet_size"),
                               as_index(field(j, "max_len"), "max_len"), opts.max_carrier);
  if (kind == "multivariate") {
    std::vector<std::size_t> frames;
    const auto& fj = field(j, "frames");
    if (!fj.is_array()) throw InputError("'frames' must be an array");
    for (const auto& f : fj) frames.push_back(as_index(f, "frame size"));
    return make_multivariate(frames, opts.max_carrier);
  }
  const auto n = as_index(field(j, "universe"), "universe");
  auto family = partition_family(field(j, "partitions"), n);
  if (kind == "lattice_valued")
    return make_lattice_valued(n, family, lattice_from_json(field(j, "values")), opts.max_carrier);
  if (kind == "set_algebra") {
    std::optional<std::vector<Subset>> elements;
    if (j.contains("elements") && !(j["elements"].is_string() && j["elements"] == "all_saturated")) {
      const auto& ej = j["elements"];
      if (!ej.is_array()) throw InputError("'elements' must be \"all_saturated\" or an array of subsets");
      elements.emplace();
      for (const auto& s : ej) {
        if (!s.is_array()) throw InputError("element must be an array of points");
        std::vector<std::size_t> pts;
        for (const auto& u : s) {
          pts.push_back(as_index(u, "point"));
          if (pts.back() >= n) throw InputError("point " + std::to_string(pts.back()) + " outside universe");
        }
        elements->push_back(make_subset(n, pts));
      }
    }
    std::vector<std::string> dnames, pnames;
    if (j.contains("domain_names")) dnames = string_list(j["domain_names"], "domain_names");
    if (j.contains("point_names")) pnames = string_list(j["point_names"], "point_names");
    if (!dnames.empty() && dnames.size() != family.size()) throw InputError("one domain name per partition required");
    auto a = make_set_algebra(n, family, elements, std::move(dnames), std::move(pnames));
    if (a.size() > opts.max_carrier)
      throw BoundExceeded("carrier of " + std::to_string(a.size()) + " elements exceeds bound " +
                          std::to_string(opts.max_carrier));
    return a;
  }
  throw InputError("unknown instance kind '" + kind + "'");
}

InfoAlgebra load_instance(const std::string& path, const LoadOptions& opts) {
  return instance_from_json(read_json_file(path), opts);
}

json instance_to_json(const InfoAlgebra& a) {
  json ext = json::object();
  for (std::size_t x = 0; x < a.domain_count(); ++x) ext[a.domain_name(x)] = a.extract_table()[x];
  return {{"kind", "abstract"},
          {"elements", a.names()},
          {"combine", a.combine_table()},
          {"unit", a.unit()},
          {"null", a.null()},
          {"domains", lattice_to_json(a.domains())},
          {"extract", ext}};
}

json check_to_json(const Check& c, bool timing) {
  json j = {{"name", c.name}, {"status", std::string(to_string(c.verdict))}};
  if (c.verdict == Verdict::not_applicable)
    j["passed"] = nullptr;
  else
    j["passed"] = c.verdict == Verdict::pass;
  if (!c.witness.empty()) j["witness"] = c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (timing) j["millis"] = c.millis;
  return j;
}

json report_to_json(const Report& r, bool timing) {
  json checks = json::array();
  for (const auto& c : r.checks()) checks.push_back(check_to_json(c, timing));
  return {{"passed", r.passed()}, {"checks", checks}};
}

json embedding_to_json(const EmbeddingReport& e, bool timing) {
  json f = json::array();
  for (const auto& s : e.f) f.push_back(members_of(s));
  json g = json::array();
  for (const auto& p : e.g) g.push_back(partition_to_json(p));
  json j = {{"kind", e.kind},
            {"universe", e.universe_labels},
            {"f", f},
            {"g", g},
            {"embedding", e.is_embedding()},
            {"report", report_to_json(e.checks, timing)}};
  if (!e.reason.empty()) j["reason"] = e.reason;
  return j;
}

std::string instance_digest(const InfoAlgebra& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : instance_to_json(a).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace infalg
