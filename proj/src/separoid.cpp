#include "infalg/separoid.hpp"

namespace infalg {

CIRelation::CIRelation(Semilattice domain) : domain_(std::move(domain)) {
  const std::size_t n = domain_.size();
  bits_.resize(n * n * n);
}

CIRelation CIRelation::from_predicate(Semilattice domain,
                                      const std::function<bool(std::size_t, std::size_t, std::size_t)>& pred) {
  CIRelation r(std::move(domain));
  const std::size_t n = r.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (pred(x, y, z)) r.insert(x, y, z);
  return r;
}

CIRelation CIRelation::full(Semilattice domain) {
  return from_predicate(std::move(domain), [](auto, auto, auto) { return true; });
}

std::vector<Triple> CIRelation::triples() const {
  std::vector<Triple> out;
  for (auto i = bits_.find_first(); i != Subset::npos; i = bits_.find_next(i))
    out.push_back({i / (size() * size()), i / size() % size(), i % size()});
  return out;
}

namespace {

// Lexicographic scans; the first tuple where f holds is the witness.
using Witness = std::vector<std::size_t>;

template <class F>
Witness scan4(std::size_t n, F f) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          if (f(a, b, c, d)) return {a, b, c, d};
  return {};
}

template <class F>
Witness scan3(std::size_t n, F f) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (f(a, b, c)) return {a, b, c};
  return {};
}

void add_c1_c4(Report& rep, const CIRelation& r) {
  const auto& d = r.domain();
  const std::size_t n = r.size();
  Witness w;
  for (std::size_t x = 0; x < n && w.empty(); ++x)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      if (!r.contains(x, y, y)) w = {x, y};
  rep.verdict("C1", w.empty(), w, "(x, y) with x ⊥ y | y missing");

  w = scan3(n, [&](auto x, auto y, auto z) { return r.contains(x, y, z) && !r.contains(y, x, z); });
  rep.verdict("C2", w.empty(), w, "(x, y, z)");

  w = scan4(n, [&](auto x, auto y, auto z, auto v) {
    return r.contains(x, y, z) && d.leq(v, y) && !r.contains(x, v, z);
  });
  rep.verdict("C3", w.empty(), w, "(x, y, z, w) with w <= y");

  w = scan3(n, [&](auto x, auto y, auto z) { return r.contains(x, y, z) && !r.contains(x, d.join(y, z), z); });
  rep.verdict("C4", w.empty(), w, "(x, y, z)");
}

void add_c5_c6(Report& rep, const CIRelation& r) {
  const auto& d = r.domain();
  const std::size_t n = r.size();
  auto w = scan4(n, [&](auto x, auto y, auto z, auto v) {
    return r.contains(x, y, z) && d.leq(v, y) && !r.contains(x, y, d.join(z, v));
  });
  rep.verdict("C5", w.empty(), w, "(x, y, z, w) with w <= y");

  w = scan4(n, [&](auto x, auto y, auto z, auto v) {
    return r.contains(x, y, z) && r.contains(x, v, d.join(y, z)) && !r.contains(x, d.join(y, v), z);
  });
  rep.verdict("C6", w.empty(), w, "(x, y, z, w)");
}

void add_c7(Report& rep, const CIRelation& r) {
  const auto& d = r.domain();
  if (!d.is_lattice()) {
    rep.not_applicable("C7", "domain is not a lattice");
    return;
  }
  auto w = scan4(r.size(), [&](auto x, auto y, auto z, auto v) {
    return d.leq(z, y) && d.leq(v, y) && r.contains(x, y, z) && r.contains(x, y, v) &&
           !r.contains(x, y, d.meet(z, v));
  });
  rep.verdict("C7", w.empty(), w, "(x, y, z, w) with z, w <= y");
}

void require_lattice(const Semilattice& l, const char* what) {
  if (!l.is_lattice()) throw InvalidArgument(std::string(what) + " requires a lattice");
}

}  // namespace

Report check_qseparoid(const CIRelation& r) {
  Report rep;
  add_c1_c4(rep, r);
  return rep;
}

Report check_separoid(const CIRelation& r) {
  Report rep;
  add_c5_c6(rep, r);
  return rep;
}

Report check_strong_separoid(const CIRelation& r) {
  Report rep;
  add_c7(rep, r);
  return rep;
}

Report check_all_axioms(const CIRelation& r) {
  Report rep;
  add_c1_c4(rep, r);
  add_c5_c6(rep, r);
  add_c7(rep, r);
  return rep;
}

CIRelation lattice_relation(const Semilattice& l) {
  require_lattice(l, "lattice relation");
  return CIRelation::from_predicate(
      l, [&](auto x, auto y, auto z) { return l.meet(l.join(x, z), l.join(y, z)) == z; });
}

CIRelation dawid_relation(const Semilattice& l) {
  require_lattice(l, "meet relation");
  return CIRelation::from_predicate(l, [&](auto x, auto y, auto z) { return l.leq(l.meet(x, y), z); });
}

Report check_basic(const CIRelation& r) {
  Report rep;
  const auto& d = r.domain();
  const std::size_t n = r.size();
  Witness w;
  for (std::size_t x = 0; x < n && w.empty(); ++x)
    for (std::size_t y = 0; y < n && w.empty(); ++y)
      if (r.contains(x, x, y) && !d.leq(x, y)) w = {x, x, y};
  const bool basic = w.empty();
  rep.verdict("basic", basic, w, "(x, x, y) in the relation with x not <= y");
  if (d.is_lattice()) {
    auto lw = scan3(n, [&](auto x, auto y, auto z) {
      return r.contains(x, y, z) && d.meet(d.join(x, z), d.join(y, z)) != z;
    });
    const bool implies_lattice = lw.empty();
    rep.verdict("basic_iff_implies_lattice_relation", basic == implies_lattice, lw,
                implies_lattice ? "relation is contained in the lattice relation"
                                : "first triple outside the lattice relation");
  } else {
    rep.not_applicable("basic_iff_implies_lattice_relation", "domain is not a lattice");
  }
  return rep;
}

CIRelation pullback_relation(const Semilattice& d1, const std::vector<std::size_t>& f, const CIRelation& r2) {
  if (f.size() != d1.size()) throw InvalidArgument("map length differs from the domain size");
  for (auto v : f)
    if (v >= r2.size()) throw InvalidArgument("map value outside the target domain");
  const auto& d2 = r2.domain();
  for (std::size_t x = 0; x < d1.size(); ++x)
    for (std::size_t y = 0; y < d1.size(); ++y)
      if (f[d1.join(x, y)] != d2.join(f[x], f[y]))
        throw InvalidArgument("map does not preserve the join of " + d1.name(x) + " and " + d1.name(y));
  return CIRelation::from_predicate(d1, [&](auto x, auto y, auto z) { return r2.contains(f[x], f[y], f[z]); });
}

CIRelation relation_from_partitions(const Semilattice& d, const std::vector<Partition>& parts) {
  if (parts.size() != d.size()) throw InvalidArgument("one partition per domain element required");
  return CIRelation::from_predicate(
      d, [&](auto x, auto y, auto z) { return cond_independent(parts[x], parts[y], parts[z]); });
}

}  // namespace infalg
