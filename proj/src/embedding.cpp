#include "infalg/embedding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace infalg {

std::string_view to_string(GeneratingKind k) {
  switch (k) {
    case GeneratingKind::full: return "full";
    case GeneratingKind::atoms: return "atoms";
    case GeneratingKind::meet_irreducibles: return "meet-irreducible";
    case GeneratingKind::custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(AtomClass c) {
  switch (c) {
    case AtomClass::not_atomic: return "not_atomic";
    case AtomClass::atomic: return "atomic";
    case AtomClass::atomistic: return "atomistic";
    case AtomClass::completely_atomistic: return "completely_atomistic";
  }
  return "not_atomic";
}

namespace {

using Witness = std::vector<std::size_t>;

std::string count_detail(std::size_t n, const char* what) { return std::to_string(n) + " " + what + " checked"; }

// Number of distinct values, capped so 2^k comparisons stay meaningful.
bool covers_powerset(const std::vector<Subset>& images, std::size_t k) {
  if (k >= 40) return false;
  std::set<Subset> distinct(images.begin(), images.end());
  return distinct.size() == (std::size_t{1} << k);
}

std::vector<Subset> images_over(const InfoAlgebra& a, const std::vector<std::size_t>& universe) {
  std::vector<Subset> f(a.size(), Subset(universe.size()));
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (a.leq(p, universe[i])) f[p].set(i);
  return f;
}

std::vector<Partition> fibres_over(const InfoAlgebra& a, const std::vector<std::size_t>& universe) {
  std::vector<Partition> g;
  for (std::size_t x = 0; x < a.domain_count(); ++x) {
    std::vector<std::size_t> labels(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) labels[i] = a.extract(x, universe[i]);
    g.push_back(Partition::from_labels(labels));
  }
  return g;
}

std::vector<std::string> labels_of(const InfoAlgebra& a, const std::vector<std::size_t>& universe) {
  std::vector<std::string> out;
  for (auto u : universe) out.push_back(a.name(u));
  return out;
}

bool is_upset(const InfoAlgebra& a, const std::vector<std::size_t>& universe, const Subset& s) {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    for (std::size_t j = 0; j < universe.size(); ++j)
      if (a.leq(universe[i], universe[j]) && !s.test(j)) return false;
  return true;
}

}  // namespace

GeneratingSet make_generating_set(const InfoAlgebra& a, GeneratingKind kind) {
  GeneratingSet g;
  g.kind = kind;
  switch (kind) {
    case GeneratingKind::full:
      g.members = full_subset(a.size());
      g.members.reset(a.null());
      break;
    case GeneratingKind::atoms:
      g.members = compute_atoms(a).atoms;
      break;
    case GeneratingKind::meet_irreducibles:
      g.members = meet_irreducibles(a.order());
      g.members.reset(a.null());
      break;
    case GeneratingKind::custom:
      throw InvalidArgument("custom generating sets are supplied by the caller");
  }
  return g;
}

Check is_order_generating(const InfoAlgebra& a, const Subset& x) {
  if (x.test(a.null())) throw InvalidArgument("generating set contains the null element");
  const auto& ord = a.order();
  Witness inf_w;
  for (std::size_t p = 0; p < a.size() && inf_w.empty(); ++p)
    if (p != a.null() && ord.meet_all(a.up_set(p) & x) != p) inf_w = {p};
  Witness sep_w;
  for (std::size_t phi = 0; phi < a.size() && sep_w.empty(); ++phi)
    for (std::size_t psi = 0; psi < a.size() && sep_w.empty(); ++psi) {
      if (a.leq(phi, psi)) continue;
      bool found = false;
      for (auto c = x.find_first(); c != Subset::npos && !found; c = x.find_next(c))
        found = a.leq(psi, c) && !a.leq(phi, c);
      if (!found) sep_w = {phi, psi};
    }
  Check c{"order_generating", Verdict::pass, {}, {}};
  if (inf_w.empty() != sep_w.empty()) {
    c.verdict = Verdict::fail;
    c.witness = inf_w.empty() ? sep_w : inf_w;
    c.detail = "infimum and separation criteria disagree";
  } else if (!inf_w.empty()) {
    c.verdict = Verdict::fail;
    c.witness = inf_w;
    c.detail = "(psi) is not the infimum of the generators above it; separation fails at (phi, psi) = (" +
               a.name(sep_w[0]) + ", " + a.name(sep_w[1]) + ")";
  }
  return c;
}

Check is_strongly_order_generating(const InfoAlgebra& a, const Subset& x) {
  auto og = is_order_generating(a, x);
  Check c{"strongly_order_generating", Verdict::pass, {}, {}};
  if (!og.passed()) {
    c.verdict = Verdict::fail;
    c.witness = og.witness;
    c.detail = "not order-generating: " + og.detail;
    return c;
  }
  const auto xs = members_of(x);
  for (auto alpha : xs)
    for (std::size_t psi = 0; psi < a.size(); ++psi)
      for (std::size_t d = 0; d < a.domain_count(); ++d) {
        auto ea = a.extract(d, alpha);
        if (!a.leq(a.extract(d, psi), ea)) continue;
        bool found = false;
        for (auto gamma : xs)
          if (a.extract(d, gamma) == ea && a.leq(psi, gamma)) {
            found = true;
            break;
          }
        if (!found) {
          c.verdict = Verdict::fail;
          c.witness = {alpha, psi, d};
          c.detail = "(alpha, psi, x) without a lift";
          return c;
        }
      }
  return c;
}

Check is_locally_order_generating(const InfoAlgebra& a, std::size_t x, const Subset& xs) {
  const auto& ord = a.order();
  Check c{"locally_order_generating", Verdict::pass, {}, {}};
  for (std::size_t p = 0; p < a.size(); ++p) {
    auto e = a.extract(x, p);
    if (ord.meet_all(a.up_set(e) & xs) != e) {
      c.verdict = Verdict::fail;
      c.witness = {x, p};
      c.detail = "(x, psi) with eps_x(psi) not the infimum of the generators above it";
      return c;
    }
  }
  return c;
}

Report verify_embedding_laws(const InfoAlgebra& a, const std::vector<Subset>& f, const std::vector<Partition>& g) {
  Report r;
  const std::size_t m = a.size();
  const std::size_t nd = a.domain_count();
  const std::size_t n = f.empty() ? 0 : f[0].size();
  const auto& dom = a.domains();
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = p + 1; q < m && w.empty(); ++q)
        if (f[p] == f[q]) w = {p, q};
    r.verdict("f_injective", w.empty(), w, "(phi, psi) with equal images");
  }
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if (f[a.combine(p, q)] != (f[p] & f[q])) w = {p, q};
    r.verdict("f_combination", w.empty(), w, "(phi, psi) with f(phi·psi) != f(phi) ∩ f(psi)");
  }
  r.verdict("f_unit", f[a.unit()] == full_subset(n), {}, "f(1) = U");
  r.verdict("f_null", f[a.null()].none(), {}, "f(0) = empty");
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = x + 1; y < nd && w.empty(); ++y)
        if (g[x] == g[y]) w = {x, y};
    r.verdict("g_injective", w.empty(), w, "(x, y) with equal partitions");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = 0; y < nd && w.empty(); ++y)
        if (g[dom.join(x, y)] != partition_join(g[x], g[y])) w = {x, y};
    r.verdict("g_join", w.empty(), w, "(x, y) with g(x ∨ y) != g(x) ∨ g(y)");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = 0; y < nd && w.empty(); ++y)
        if (dom.leq(x, y) != refines(g[x], g[y])) w = {x, y};
    r.verdict("g_order", w.empty(), w, "(x, y) where the order is not reflected");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        if (f[a.extract(x, p)] != saturate(g[x], f[p])) w = {x, p};
    r.verdict("extraction", w.empty(), w, "(x, psi) with f(eps_x(psi)) != sigma(f(psi))");
  }
  return r;
}

EmbeddingReport build_embedding(const InfoAlgebra& a, const GeneratingSet& x) {
  EmbeddingReport rep;
  rep.kind = std::string(to_string(x.kind));
  auto sog = is_strongly_order_generating(a, x.members);
  rep.checks.add(sog);
  const Check distinct = verify_axioms(a).at("distinct_domains");
  rep.checks.add(distinct);
  if (!sog.passed()) rep.reason = "generating set is not strongly order-generating";
  if (!distinct.passed()) rep.reason = "two domains have the same extraction image";
  if (!rep.reason.empty()) return rep;

  const auto universe = members_of(x.members);
  rep.universe_labels = labels_of(a, universe);
  rep.f = images_over(a, universe);
  rep.g = fibres_over(a, universe);
  rep.checks.merge("", verify_embedding_laws(a, rep.f, rep.g));
  return rep;
}

AtomSet compute_atoms(const InfoAlgebra& a) {
  AtomSet at;
  const std::size_t m = a.size();
  auto maximal_in = [&](const Subset& pool) {
    Subset out(m);
    for (auto p = pool.find_first(); p != Subset::npos; p = pool.find_next(p)) {
      if (p == a.null()) continue;
      bool maximal = true;
      for (auto q = pool.find_first(); q != Subset::npos && maximal; q = pool.find_next(q))
        if (q != p && q != a.null() && a.leq(p, q)) maximal = false;
      if (maximal) out.set(p);
    }
    return out;
  };
  at.atoms = maximal_in(full_subset(m));
  for (std::size_t x = 0; x < a.domain_count(); ++x) at.relative.push_back(maximal_in(a.image(x)));

  const auto& ord = a.order();
  for (std::size_t p = 0; p < m; ++p)
    if (p != a.null() && atoms_above(a, at, p).none()) {
      at.witness = {p};
      return at;
    }
  at.classification = AtomClass::atomic;
  std::vector<Subset> images;
  for (std::size_t p = 0; p < m; ++p) {
    images.push_back(atoms_above(a, at, p));
    if (ord.meet_all(images.back()) != p) {
      at.witness = {p};
      return at;
    }
  }
  at.classification = AtomClass::atomistic;
  if (covers_powerset(images, at.atoms.count())) at.classification = AtomClass::completely_atomistic;
  return at;
}

Subset atoms_above(const InfoAlgebra& a, const AtomSet& at, std::size_t psi) { return a.up_set(psi) & at.atoms; }

Subset relative_atoms_above(const InfoAlgebra& a, const AtomSet& at, std::size_t x, std::size_t psi) {
  return a.up_set(a.extract(x, psi)) & at.relative[x];
}

Report relative_atom_lemma_check(const InfoAlgebra& a) {
  Report r;
  const auto at = compute_atoms(a);
  if (at.classification == AtomClass::not_atomic) {
    r.fail("precondition", at.witness, "algebra is not atomic");
    return r;
  }
  const std::size_t m = a.size();
  const std::size_t nd = a.domain_count();
  const auto& dom = a.domains();
  const auto atoms = members_of(at.atoms);
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (auto alpha : atoms)
        if (!at.relative[x].test(a.extract(x, alpha))) {
          w = {x, alpha};
          break;
        }
    r.verdict("projection", w.empty(), w, "(x, atom) whose extraction is not a relative atom");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (auto alpha : atoms)
        if (a.extract(x, alpha) == alpha && !at.relative[x].test(alpha)) {
          w = {x, alpha};
          break;
        }
    r.verdict("support_atom", w.empty(), w, "(x, atom) supported by x but not a relative atom");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (auto beta : members_of(at.relative[x])) {
        bool found = std::any_of(atoms.begin(), atoms.end(), [&](auto al) { return a.extract(x, al) == beta; });
        if (!found) {
          w = {x, beta};
          break;
        }
      }
    r.verdict("lifting", w.empty(), w, "(x, relative atom) not the extraction of an atom");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = 0; y < nd && w.empty(); ++y) {
        if (!dom.leq(x, y)) continue;
        const auto ys = members_of(at.relative[y]);
        for (auto alpha : members_of(at.relative[x])) {
          bool found = std::any_of(ys.begin(), ys.end(), [&](auto b) { return a.extract(x, b) == alpha; });
          if (!found) {
            w = {x, y, alpha};
            break;
          }
        }
      }
    r.verdict("extension", w.empty(), w, "(x, y, relative atom at x) without an extension to y");
  }
  {
    Witness w;
    std::size_t applicable = 0;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = 0; y < nd && w.empty(); ++y) {
        if (!dom.leq(x, y)) continue;
        const auto ys = members_of(at.relative[y]);
        for (auto alpha : members_of(at.relative[x])) {
          for (std::size_t psi = 0; psi < m && w.empty(); ++psi) {
            if (a.extract(y, psi) != psi || !a.leq(a.extract(x, psi), alpha)) continue;
            ++applicable;
            bool found = std::any_of(ys.begin(), ys.end(),
                                     [&](auto b) { return a.leq(psi, b) && a.extract(x, b) == alpha; });
            if (!found) w = {x, y, alpha, psi};
          }
          if (!w.empty()) break;
        }
      }
    r.verdict("conditional_extension", w.empty(), w,
              w.empty() ? count_detail(applicable, "cases") : "(x, y, relative atom, psi) without a lift");
  }
  return r;
}

LocalClassification classify_locally_atomic(const InfoAlgebra& a) {
  LocalClassification lc;
  const auto at = compute_atoms(a);
  const auto& ord = a.order();
  for (std::size_t x = 0; x < a.domain_count(); ++x)
    for (std::size_t p = 0; p < a.size(); ++p)
      if (p != a.null() && relative_atoms_above(a, at, x, p).none()) {
        lc.witness = {x, p};
        return lc;
      }
  lc.locally_atomic = true;
  for (std::size_t x = 0; x < a.domain_count(); ++x)
    for (std::size_t p = 0; p < a.size(); ++p)
      if (ord.meet_all(relative_atoms_above(a, at, x, p)) != a.extract(x, p)) {
        lc.witness = {x, p};
        return lc;
      }
  lc.locally_atomistic = true;
  for (std::size_t x = 0; x < a.domain_count(); ++x) {
    std::vector<Subset> images;
    for (std::size_t p = 0; p < a.size(); ++p) images.push_back(relative_atoms_above(a, at, x, p));
    if (!covers_powerset(images, at.relative[x].count())) {
      lc.witness = {x};
      return lc;
    }
  }
  lc.locally_completely_atomistic = true;
  return lc;
}

std::vector<Subset> relative_atom_sets(const InfoAlgebra& a) { return compute_atoms(a).relative; }

std::vector<Subset> projected_sets(const InfoAlgebra& a, const Subset& x) {
  std::vector<Subset> out;
  for (std::size_t d = 0; d < a.domain_count(); ++d) {
    Subset s(a.size());
    for (auto p = x.find_first(); p != Subset::npos; p = x.find_next(p)) s.set(a.extract(d, p));
    out.push_back(s);
  }
  return out;
}

TupleEmbedding build_tuple_system(const InfoAlgebra& a, const std::vector<Subset>& sets, std::size_t max_maps) {
  TupleEmbedding te;
  te.system.sets = sets;
  auto& rep = te.report;
  rep.kind = "tuple";
  const std::size_t nd = a.domain_count();
  const std::size_t m = a.size();
  const auto& dom = a.domains();
  if (sets.size() != nd) throw InvalidArgument("one set per domain required");
  for (const auto& s : sets)
    if (s.size() != m) throw InvalidArgument("tuple-system set over the wrong carrier");

  std::vector<std::vector<std::size_t>> xs(nd);
  for (std::size_t x = 0; x < nd; ++x) xs[x] = members_of(sets[x]);
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x) {
      Subset outside = sets[x] - a.image(x);
      if (sets[x].test(a.null())) outside.set(a.null());
      if (outside.any()) w = {x, outside.find_first()};
    }
    rep.checks.verdict("subset_of_image", w.empty(), w, "(x, t) with t outside eps_x(Psi) or t = 0");
  }
  {
    Check lc{"locally_order_generating", Verdict::pass, {}, {}};
    for (std::size_t x = 0; x < nd && lc.passed(); ++x) lc = is_locally_order_generating(a, x, sets[x]);
    rep.checks.add(lc);
  }
  {
    Witness w;
    for (std::size_t d = 0; d < nd && w.empty(); ++d)
      for (auto t : xs[d])
        for (std::size_t x = 0; x < nd && w.empty(); ++x)
          if (dom.leq(x, d) && !sets[x].test(a.extract(x, t))) w = {d, t, x};
    rep.checks.verdict("projection_label", w.empty(), w, "(d(t), t, x) with pi_x(t) outside X_x");
  }
  {
    Witness w;
    for (std::size_t d = 0; d < nd && w.empty(); ++d)
      for (auto t : xs[d])
        for (std::size_t y = 0; y < nd && w.empty(); ++y)
          for (std::size_t x = 0; x < nd && w.empty(); ++x)
            if (dom.leq(x, y) && dom.leq(y, d) && a.extract(x, a.extract(y, t)) != a.extract(x, t)) w = {d, t, y, x};
    rep.checks.verdict("projection_composition", w.empty(), w, "(d(t), t, y, x)");
  }
  {
    Witness w;
    for (std::size_t d = 0; d < nd && w.empty(); ++d)
      for (auto t : xs[d])
        if (a.extract(d, t) != t) {
          w = {d, t};
          break;
        }
    rep.checks.verdict("identity_projection", w.empty(), w, "(d(t), t)");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (auto t : xs[x])
        for (std::size_t y = 0; y < nd && w.empty(); ++y) {
          if (!dom.leq(x, y)) continue;
          bool found = std::any_of(xs[y].begin(), xs[y].end(), [&](auto s) { return a.extract(x, s) == t; });
          if (!found) w = {x, t, y};
        }
    rep.checks.verdict("extension", w.empty(), w, "(x, t, y) without s in X_y projecting to t");
  }
  {
    Witness w;
    std::size_t applicable = 0;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (auto t : xs[x])
        for (std::size_t y = 0; y < nd && w.empty(); ++y) {
          if (!dom.leq(x, y)) continue;
          for (std::size_t psi = 0; psi < m && w.empty(); ++psi) {
            if (a.extract(y, psi) != psi || !a.leq(a.extract(x, psi), t)) continue;
            ++applicable;
            bool found = std::any_of(xs[y].begin(), xs[y].end(),
                                     [&](auto s) { return a.extract(x, s) == t && a.leq(psi, s); });
            if (!found) w = {x, t, y, psi};
          }
        }
    rep.checks.verdict("conditional_extension", w.empty(), w,
                       w.empty() ? count_detail(applicable, "cases") : "(x, t, y, psi) without a lift");
  }
  if (!rep.checks.passed()) {
    rep.reason = "tuple-system properties fail";
    return te;
  }

  // Maximal domains first so most components are forced by projection.
  std::vector<std::size_t> order(nd);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](auto x, auto y) { return dom.up_set(x).count() < dom.up_set(y).count(); });
  std::vector<std::size_t> cur(nd, npos);
  auto& maps = te.system.maps;
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == nd) {
      if (maps.size() >= max_maps)
        throw BoundExceeded("more than " + std::to_string(max_maps) + " consistent maps");
      maps.push_back(cur);
      return;
    }
    const auto x = order[k];
    for (auto t : xs[x]) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const auto y = order[j];
        if (dom.leq(x, y) && a.extract(x, cur[y]) != t) ok = false;
        if (dom.leq(y, x) && a.extract(y, t) != cur[y]) ok = false;
      }
      if (!ok) continue;
      cur[x] = t;
      assign(k + 1);
      cur[x] = npos;
    }
  };
  assign(0);
  std::sort(maps.begin(), maps.end());
  rep.checks.verdict("nonempty_universe", !maps.empty(), {}, std::to_string(maps.size()) + " consistent maps");
  if (maps.empty()) {
    rep.reason = "no consistent maps";
    return te;
  }

  for (const auto& mp : maps) {
    std::string label = "<";
    for (std::size_t x = 0; x < nd; ++x) label += (x ? "|" : "") + a.name(mp[x]);
    rep.universe_labels.push_back(label + ">");
  }
  rep.f.assign(m, Subset(maps.size()));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < maps.size(); ++i) {
      bool in = true;
      for (std::size_t x = 0; x < nd && in; ++x) in = a.leq(a.extract(x, p), maps[i][x]);
      if (in) rep.f[p].set(i);
    }
  for (std::size_t x = 0; x < nd; ++x) {
    std::vector<std::size_t> labels(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) labels[i] = maps[i][x];
    rep.g.push_back(Partition::from_labels(labels));
  }
  rep.checks.merge("", verify_embedding_laws(a, rep.f, rep.g));
  return te;
}

InfoAlgebra dual_algebra(const InfoAlgebra& a) {
  auto comp = boolean_complements(a.order());
  if (!comp) throw InvalidArgument("dual algebra requires a Boolean carrier");
  const auto& c = *comp;
  const std::size_t m = a.size();
  Table comb(m, std::vector<std::size_t>(m));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) comb[p][q] = c[a.combine(c[p], c[q])];
  Table ext(a.domain_count(), std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < a.domain_count(); ++x)
    for (std::size_t p = 0; p < m; ++p) ext[x][p] = c[a.extract(x, c[p])];
  return InfoAlgebra(a.names(), std::move(comb), a.null(), a.unit(), a.domains(), std::move(ext));
}

Report boolean_checks(const InfoAlgebra& a) {
  Report r;
  auto comp = a.has_lattice_order() ? boolean_complements(a.order()) : std::nullopt;
  r.verdict("boolean", comp.has_value(), {}, comp ? "" : "carrier is not a Boolean lattice");
  if (!comp) return r;
  const auto& c = *comp;
  const std::size_t m = a.size();
  const std::size_t nd = a.domain_count();
  auto meet = [&](auto p, auto q) { return a.meet(p, q); };
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if (a.leq(p, q) != a.leq(c[q], c[p])) w = {p, q};
    r.verdict("complement_reverses_order", w.empty(), w, "(phi, psi)");
  }
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if ((a.combine(p, c[q]) == a.null()) != a.leq(q, p)) w = {p, q};
    r.verdict("complement_null", w.empty(), w, "(phi, psi) where phi·psi^c = 0 differs from psi <= phi");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        for (std::size_t q = 0; q < m && w.empty(); ++q)
          if (a.extract(x, meet(p, q)) != meet(a.extract(x, p), a.extract(x, q))) w = {x, p, q};
    r.verdict("extract_meet", w.empty(), w, "(x, phi, psi)");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        if (meet(p, a.extract(x, p)) != a.extract(x, p)) w = {x, p};
    r.verdict("meet_extract", w.empty(), w, "(x, phi)");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        if (a.extract(x, p) == p && a.extract(x, c[p]) != c[p]) w = {x, p};
    r.verdict("support_complement", w.empty(), w, "(x, phi)");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        for (std::size_t q = 0; q < m && w.empty(); ++q)
          if (a.extract(x, p) == p && a.extract(x, q) == q && a.extract(x, meet(p, q)) != meet(p, q))
            w = {x, p, q};
    r.verdict("support_meet", w.empty(), w, "(x, phi, psi)");
  }
  const auto dual = dual_algebra(a);
  r.merge("dual", verify_axioms(dual));
  std::vector<std::size_t> id(nd);
  std::iota(id.begin(), id.end(), 0);
  r.merge("isomorphism", check_homomorphism(a, dual, c, id));
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      if (c[c[p]] != p) w = {p};
    r.verdict("isomorphism.bijective", w.empty(), w, "complement is an involution");
  }
  const auto back = dual_algebra(dual);
  r.verdict("dual_involution",
            back.combine_table() == a.combine_table() && back.extract_table() == a.extract_table() &&
                back.unit() == a.unit() && back.null() == a.null());
  return r;
}

EmbeddingReport finite_boolean_representation(const InfoAlgebra& a) {
  EmbeddingReport rep;
  rep.kind = "boolean";
  auto comp = a.has_lattice_order() ? boolean_complements(a.order()) : std::nullopt;
  rep.checks.verdict("boolean", comp.has_value());
  if (!comp) {
    rep.reason = "carrier is not a Boolean lattice";
    return rep;
  }
  const auto& c = *comp;
  const std::size_t m = a.size();
  const auto& ord = a.order();
  const auto at = compute_atoms(a);
  rep.checks.verdict("completely_atomistic", at.classification == AtomClass::completely_atomistic, at.witness,
                     std::string(to_string(at.classification)));
  const auto universe = members_of(at.atoms);
  rep.universe_labels = labels_of(a, universe);
  rep.f = images_over(a, universe);
  rep.g = fibres_over(a, universe);
  {
    std::set<Subset> distinct(rep.f.begin(), rep.f.end());
    bool onto = universe.size() < 40 && distinct.size() == (std::size_t{1} << universe.size());
    rep.checks.verdict("bijective", distinct.size() == m && onto, {},
                       std::to_string(distinct.size()) + " images for " + std::to_string(universe.size()) + " atoms");
  }
  rep.checks.merge("", verify_embedding_laws(a, rep.f, rep.g));
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if (rep.f[a.meet(p, q)] != (rep.f[p] | rep.f[q])) w = {p, q};
    rep.checks.verdict("meet_to_union", w.empty(), w, "(phi, psi)");
  }
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      if (rep.f[c[p]] != ~rep.f[p]) w = {p};
    rep.checks.verdict("complement", w.empty(), w, "(phi)");
  }
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      if (ord.meet_all(atoms_above(a, at, p)) != p) w = {p};
    rep.checks.verdict("round_trip", w.empty(), w, "(psi) with inf At(psi) != psi");
  }
  if (m > 20) {
    for (auto n : {"ideals_principal", "maximal_ideals_are_atom_downsets", "maximal_ideal_count",
                   "prime_equals_maximal", "downset_intersection"})
      rep.checks.not_applicable(n, "carrier exceeds the ideal enumeration bound");
    return rep;
  }
  const auto ideals = enumerate_ideals(ord);
  {
    Witness w;
    for (std::size_t i = 0; i < ideals.size() && w.empty(); ++i)
      if (!ideals[i].principal) w = {i};
    rep.checks.verdict("ideals_principal", w.empty(), w, std::to_string(ideals.size()) + " ideals");
  }
  std::set<Subset> maximal, atom_downs;
  for (const auto& I : ideals)
    if (I.maximal) maximal.insert(I.members);
  for (auto al : universe) atom_downs.insert(ord.down_set(al));
  rep.checks.verdict("maximal_ideals_are_atom_downsets", maximal == atom_downs);
  rep.checks.verdict("maximal_ideal_count", maximal.size() == universe.size(), {},
                     std::to_string(maximal.size()) + " maximal ideals, " + std::to_string(universe.size()) +
                         " atoms");
  {
    Witness w;
    for (std::size_t i = 0; i < ideals.size() && w.empty(); ++i)
      if (ideals[i].prime != ideals[i].maximal) w = {i};
    rep.checks.verdict("prime_equals_maximal", w.empty(), w, "(ideal index)");
  }
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p) {
      Subset inter = full_subset(m);
      for (auto al : members_of(atoms_above(a, at, p))) inter &= ord.down_set(al);
      if (inter != ord.down_set(p)) w = {p};
    }
    rep.checks.verdict("downset_intersection", w.empty(), w, "(psi)");
  }
  return rep;
}

Report distributive_preconditions(const InfoAlgebra& a, std::string& reason) {
  Report r;
  reason.clear();
  r.verdict("lattice_order", a.has_lattice_order());
  if (!a.has_lattice_order()) {
    reason = "combination is not a semilattice";
    return r;
  }
  auto dw = distributivity_witness(a.order());
  r.verdict("distributive", !dw, dw ? Witness(dw->begin(), dw->end()) : Witness{},
            dw ? "carrier is not a distributive lattice" : "");
  if (dw) {
    reason = "carrier is not a distributive lattice";
    return r;
  }
  Witness w;
  for (std::size_t x = 0; x < a.domain_count() && w.empty(); ++x)
    for (std::size_t p = 0; p < a.size() && w.empty(); ++p)
      for (std::size_t q = 0; q < a.size() && w.empty(); ++q)
        if (a.extract(x, a.meet(p, q)) != a.meet(a.extract(x, p), a.extract(x, q))) w = {x, p, q};
  r.verdict("extract_meet", w.empty(), w, w.empty() ? "" : quantifier_meet_reason);
  if (!w.empty()) reason = quantifier_meet_reason;
  return r;
}

EmbeddingReport finite_distributive_representation(const InfoAlgebra& a) {
  EmbeddingReport rep;
  rep.kind = "meet-irreducible";
  rep.checks = distributive_preconditions(a, rep.reason);
  if (!rep.reason.empty()) return rep;
  const std::size_t m = a.size();
  const std::size_t nd = a.domain_count();
  const auto& ord = a.order();
  Subset mi = meet_irreducibles(ord);
  mi.reset(a.null());

  // A maximal element of {eta : psi <= eta, phi not<= eta}; psi itself is a member.
  auto separate = [&](std::size_t phi, std::size_t psi) {
    std::size_t best = psi;
    bool grown = true;
    while (grown) {
      grown = false;
      for (std::size_t eta = 0; eta < m; ++eta)
        if (eta != best && a.leq(best, eta) && !a.leq(phi, eta)) {
          best = eta;
          grown = true;
          break;
        }
    }
    return best;
  };
  auto bottom_of_f = [&](std::size_t x, std::size_t chi) {
    Subset fs(m);
    for (std::size_t p = 0; p < m; ++p)
      if (a.extract(x, p) == p && !a.leq(p, chi)) fs.set(p);
    return ord.meet_all(fs);
  };
  // Returns the lambda of the first auxiliary lemma, or npos if the construction breaks.
  auto aux1 = [&](std::size_t x, std::size_t eta, std::size_t chi) -> std::size_t {
    auto wf = bottom_of_f(x, chi);
    if (a.extract(x, wf) != wf || a.leq(wf, chi)) return npos;
    auto base = a.combine(eta, a.extract(x, chi));
    if (a.leq(wf, base)) return npos;
    auto lambda = separate(wf, base);
    if (!mi.test(lambda) || !a.leq(eta, lambda) || a.extract(x, lambda) != a.extract(x, chi)) return npos;
    return lambda;
  };

  {
    Witness w;
    std::size_t pairs = 0;
    for (std::size_t phi = 0; phi < m && w.empty(); ++phi)
      for (std::size_t psi = 0; psi < m && w.empty(); ++psi) {
        if (a.leq(phi, psi)) continue;
        ++pairs;
        auto chi = separate(phi, psi);
        if (!mi.test(chi) || !a.leq(psi, chi) || a.leq(phi, chi)) w = {phi, psi};
      }
    rep.checks.verdict("separation", w.empty(), w, w.empty() ? count_detail(pairs, "pairs") : "(phi, psi)");
  }
  const auto ms = members_of(mi);
  {
    Witness w;
    std::size_t cases = 0;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (auto eta : ms)
        for (auto chi : ms) {
          if (!a.leq(a.extract(x, eta), a.extract(x, chi))) continue;
          ++cases;
          if (aux1(x, eta, chi) == npos) {
            w = {x, eta, chi};
            break;
          }
        }
    rep.checks.verdict("aux_lemma_1", w.empty(), w, w.empty() ? count_detail(cases, "cases") : "(x, eta, chi)");
  }
  {
    Witness w;
    std::size_t cases = 0;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (auto chi : ms)
        for (std::size_t phi = 0; phi < m && w.empty(); ++phi) {
          if (!a.leq(a.extract(x, phi), a.extract(x, chi))) continue;
          ++cases;
          std::size_t lambda = chi;
          if (!a.leq(phi, chi)) {
            auto wf = bottom_of_f(x, chi);
            lambda = npos;
            if (!a.leq(wf, phi)) {
              auto eta = separate(wf, phi);
              if (mi.test(eta) && a.leq(phi, eta) && a.leq(a.extract(x, eta), a.extract(x, chi)))
                lambda = aux1(x, eta, chi);
            }
          }
          if (lambda == npos || !a.leq(phi, lambda) || a.extract(x, lambda) != a.extract(x, chi))
            w = {x, chi, phi};
        }
    rep.checks.verdict("aux_lemma_2", w.empty(), w, w.empty() ? count_detail(cases, "cases") : "(x, chi, phi)");
  }
  rep.checks.add(is_strongly_order_generating(a, mi));

  rep.universe_labels = labels_of(a, ms);
  rep.f = images_over(a, ms);
  rep.g = fibres_over(a, ms);
  rep.checks.merge("", verify_embedding_laws(a, rep.f, rep.g));
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if (rep.f[a.meet(p, q)] != (rep.f[p] | rep.f[q])) w = {p, q};
    rep.checks.verdict("meet_to_union", w.empty(), w, "(phi, psi)");
  }
  if (ms.size() > max_subset_universe) {
    rep.checks.not_applicable("image_is_upsets", "too many meet-irreducibles to enumerate up-sets");
    rep.checks.not_applicable("saturation_preserves_upsets", "too many meet-irreducibles to enumerate up-sets");
    return rep;
  }
  std::vector<Subset> upsets;
  for_each_subset(ms.size(), [&](const Subset& s) {
    if (is_upset(a, ms, s)) upsets.push_back(s);
  });
  {
    std::set<Subset> image(rep.f.begin(), rep.f.end());
    std::set<Subset> ups(upsets.begin(), upsets.end());
    rep.checks.verdict("image_is_upsets", image == ups, {},
                       std::to_string(ups.size()) + " up-sets, " + std::to_string(image.size()) + " images");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t i = 0; i < upsets.size() && w.empty(); ++i)
        if (!is_upset(a, ms, saturate(rep.g[x], upsets[i]))) w = {x, i};
    rep.checks.verdict("saturation_preserves_upsets", w.empty(), w, "(x, up-set index)");
  }
  return rep;
}

Report finite_prime_ideal_check(const InfoAlgebra& a, std::size_t bound) {
  Report r;
  std::string reason;
  r.merge("precondition", distributive_preconditions(a, reason));
  if (!reason.empty()) return r;
  const std::size_t m = a.size();
  const std::size_t nd = a.domain_count();
  const auto& ord = a.order();
  std::vector<Subset> primes;
  bool all_prime_maximal = true;
  for (const auto& I : enumerate_ideals(ord, bound)) {
    if (I.prime) primes.push_back(I.members);
    if (I.proper && I.prime != I.maximal) all_prime_maximal = false;
  }
  const std::size_t k = primes.size();
  std::vector<std::vector<Subset>> ex(nd);
  for (std::size_t x = 0; x < nd; ++x)
    for (const auto& P : primes) ex[x].push_back(P & a.image(x));
  std::vector<Subset> xs(m, Subset(k));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t i = 0; i < k; ++i)
      if (primes[i].test(p)) xs[p].set(i);
  auto sigma = [&](std::size_t x, const Subset& s) {
    Subset out(k);
    for (std::size_t i = 0; i < k; ++i)
      for (auto j = s.find_first(); j != Subset::npos; j = s.find_next(j))
        if (ex[x][i] == ex[x][j]) {
          out.set(i);
          break;
        }
    return out;
  };
  r.pass("prime_ideals", std::to_string(k) + " prime ideals");
  r.verdict("unit", xs[a.unit()] == full_subset(k));
  r.verdict("null", xs[a.null()].none());
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = p + 1; q < m && w.empty(); ++q)
        if (xs[p] == xs[q]) w = {p, q};
    r.verdict("injective", w.empty(), w, "(phi, psi)");
  }
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if (xs[a.combine(p, q)] != (xs[p] & xs[q])) w = {p, q};
    r.verdict("combination", w.empty(), w, "(phi, psi)");
  }
  {
    Witness w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if (xs[a.meet(p, q)] != (xs[p] | xs[q])) w = {p, q};
    r.verdict("meet", w.empty(), w, "(phi, psi)");
  }
  {
    Witness w;
    std::size_t cases = 0;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < k && w.empty(); ++p)
        for (std::size_t q = 0; q < k && w.empty(); ++q) {
          if (!ex[x][q].is_subset_of(ex[x][p])) continue;
          ++cases;
          bool found = false;
          for (std::size_t s = 0; s < k && !found; ++s) found = ex[x][s] == ex[x][p] && primes[q].is_subset_of(primes[s]);
          if (!found) w = {x, p, q};
        }
    r.verdict("cignoli_1", w.empty(), w, w.empty() ? count_detail(cases, "cases") : "(x, P, Q)");
  }
  {
    Witness w;
    std::size_t cases = 0;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t phi = 0; phi < m && w.empty(); ++phi)
        for (std::size_t p = 0; p < k && w.empty(); ++p) {
          if (!primes[p].test(a.extract(x, phi))) continue;
          ++cases;
          bool found = false;
          for (std::size_t s = 0; s < k && !found; ++s) found = ex[x][s] == ex[x][p] && primes[s].test(phi);
          if (!found) w = {x, phi, p};
        }
    r.verdict("cignoli_2", w.empty(), w, w.empty() ? count_detail(cases, "cases") : "(x, phi, P)");
  }
  {
    Witness w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        if (xs[a.extract(x, p)] != sigma(x, xs[p])) w = {x, p};
    r.verdict("extraction_identity", w.empty(), w, "(x, phi)");
  }
  if (boolean_complements(ord))
    r.verdict("prime_equals_maximal", all_prime_maximal);
  else
    r.not_applicable("prime_equals_maximal", "carrier is not Boolean");
  return r;
}

CIRelation induced_ci(const InfoAlgebra& a, const EmbeddingReport& emb) {
  if (!emb.is_embedding()) throw InvalidArgument("induced relation needs a verified embedding");
  return relation_from_partitions(a.domains(), emb.g);
}

CIRelation partition_relation(const InfoAlgebra& a, const EmbeddingReport& emb) {
  if (emb.g.size() != a.domain_count()) throw InvalidArgument("no partition per domain: " + emb.reason);
  return relation_from_partitions(a.domains(), emb.g);
}

Report verify_comb_extr_properties(const InfoAlgebra& a, const CIRelation& r) {
  Report rep;
  std::vector<std::vector<std::size_t>> supported(a.domain_count());
  for (std::size_t x = 0; x < a.domain_count(); ++x)
    for (std::size_t p = 0; p < a.size(); ++p)
      if (a.extract(x, p) == p) supported[x].push_back(p);
  Witness wc, we;
  for (const auto& [x, y, z] : r.triples()) {
    for (auto phi : supported[x]) {
      if (we.empty() && a.extract(y, phi) != a.extract(y, a.extract(z, phi))) we = {x, y, z, phi};
      if (!wc.empty()) continue;
      for (auto psi : supported[y])
        if (a.extract(z, a.combine(phi, psi)) != a.combine(a.extract(z, phi), a.extract(z, psi))) {
          wc = {x, y, z, phi, psi};
          break;
        }
    }
    if (!wc.empty() && !we.empty()) break;
  }
  rep.verdict("combination_property", wc.empty(), wc, "(x, y, z, phi, psi)");
  rep.verdict("extraction_property", we.empty(), we, "(x, y, z, phi)");
  return rep;
}

Report ci_uniqueness_check(const InfoAlgebra& a, const std::vector<CIRelation>& induced,
                           const std::vector<CIRelation>& external) {
  Report rep;
  auto full_emb = build_embedding(a, make_generating_set(a, GeneratingKind::full));
  if (!full_emb.reason.empty()) {
    rep.fail("reference_embedding", {}, full_emb.reason);
    return rep;
  }
  // With every non-null element as X, g can fail to preserve joins (all of 2^U
  // in a multivariate algebra); the relation is still defined by the partitions.
  if (full_emb.is_embedding())
    rep.pass("reference_embedding");
  else
    rep.not_applicable("reference_embedding", "partitions of the non-null elements are not an embedding");
  const auto reference = partition_relation(a, full_emb);
  for (std::size_t k = 0; k < external.size(); ++k) {
    const auto& r = external[k];
    const std::string name = "contained." + std::to_string(k);
    if (!check_qseparoid(r).passed() || !verify_comb_extr_properties(a, r).passed()) {
      rep.not_applicable(name, "relation fails C1-C4 or the combination/extraction properties");
      continue;
    }
    Witness w;
    for (const auto& t : r.triples())
      if (!reference.contains(t[0], t[1], t[2])) {
        w = {t[0], t[1], t[2]};
        break;
      }
    rep.verdict(name, w.empty(), w, "first triple outside the relation induced by all non-null elements");
  }
  Witness w;
  for (std::size_t k = 0; k < induced.size() && w.empty(); ++k) {
    if (induced[k] == reference) continue;
    for (std::size_t x = 0; x < reference.size() && w.empty(); ++x)
      for (std::size_t y = 0; y < reference.size() && w.empty(); ++y)
        for (std::size_t z = 0; z < reference.size() && w.empty(); ++z)
          if (induced[k].contains(x, y, z) != reference.contains(x, y, z)) w = {k, x, y, z};
  }
  rep.verdict("relations_identical", w.empty(), w,
              w.empty() ? "relations identical" : "(relation index, x, y, z) where the relations differ");
  return rep;
}

namespace {

// Gluing search shared by both element-level checks. xs(d) lists the
// candidates at domain d; with a single generating set d is ignored.
Report gluing_checks(const InfoAlgebra& a, const CIRelation& r,
                     const std::function<const std::vector<std::size_t>&(std::size_t)>& xs, bool per_domain) {
  Report rep;
  const auto& dom = a.domains();
  auto e = [&](std::size_t d, std::size_t p) { return a.extract(d, p); };
  Witness w;
  std::size_t cases = 0;
  for (const auto& [x, y, z] : r.triples()) {
    const auto xz = dom.join(x, z);
    const auto yz = dom.join(y, z);
    // Per domain: α in X_{x∨z}, β in X_{y∨z}, γ in X_{x∨y∨z}.
    const auto& gammas = xs(per_domain ? dom.join(xz, yz) : 0);
    for (auto alpha : xs(per_domain ? xz : 0)) {
      for (auto beta : xs(per_domain ? yz : 0)) {
        if (e(z, alpha) != e(z, beta)) continue;
        ++cases;
        bool found = std::any_of(gammas.begin(), gammas.end(), [&](auto g) {
          return e(xz, alpha) == e(xz, g) && e(yz, beta) == e(yz, g);
        });
        if (!found) {
          w = {x, y, z, alpha, beta};
          break;
        }
      }
      if (!w.empty()) break;
    }
    if (!w.empty()) break;
  }
  rep.verdict("gluing", w.empty(), w, w.empty() ? count_detail(cases, "pairs") : "(x, y, z, alpha, beta)");

  auto comm = is_commutative(a);
  if (!comm.commutative) {
    rep.not_applicable("commutative_gluing", "extractions do not commute: " + comm.reason);
    return rep;
  }
  w.clear();
  cases = 0;
  const std::size_t nd = a.domain_count();
  for (std::size_t x = 0; x < nd && w.empty(); ++x)
    for (std::size_t y = 0; y < nd && w.empty(); ++y) {
      const auto mxy = comm.meet[x][y];
      const auto& gammas = xs(per_domain ? dom.join(x, y) : 0);
      for (auto alpha : xs(per_domain ? x : 0)) {
        for (auto beta : xs(per_domain ? y : 0)) {
          if (e(mxy, alpha) != e(mxy, beta)) continue;
          ++cases;
          bool found = std::any_of(gammas.begin(), gammas.end(), [&](auto g) {
            return e(x, alpha) == e(x, g) && e(y, beta) == e(y, g);
          });
          if (!found) {
            w = {x, y, alpha, beta};
            break;
          }
        }
        if (!w.empty()) break;
      }
    }
  rep.verdict("commutative_gluing", w.empty(), w,
              w.empty() ? count_detail(cases, "pairs") : "(x, y, alpha, beta)");
  return rep;
}

}  // namespace

Report element_level_ci_check(const InfoAlgebra& a, const Subset& x, const CIRelation& r) {
  const auto xs = members_of(x);
  return gluing_checks(a, r, [&](std::size_t) -> const std::vector<std::size_t>& { return xs; }, false);
}

Report element_level_ci_check(const InfoAlgebra& a, const std::vector<Subset>& sets, const CIRelation& r) {
  if (sets.size() != a.domain_count()) throw InvalidArgument("one set per domain required");
  std::vector<std::vector<std::size_t>> xs;
  for (const auto& s : sets) xs.push_back(members_of(s));
  return gluing_checks(a, r, [&](std::size_t d) -> const std::vector<std::size_t>& { return xs[d]; }, true);
}

}  // namespace infalg
