#include "infalg/info_algebra.hpp"

#include <algorithm>
#include <map>

namespace infalg {

namespace {

void check_table(const Table& t, std::size_t rows, std::size_t cols, std::size_t range, const std::string& what) {
  if (t.size() != rows)
    throw InvalidArgument(what + " has " + std::to_string(t.size()) + " rows, expected " + std::to_string(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    if (t[i].size() != cols)
      throw InvalidArgument(what + " row " + std::to_string(i) + " has " + std::to_string(t[i].size()) +
                            " entries, expected " + std::to_string(cols));
    for (auto v : t[i])
      if (v >= range) throw InvalidArgument(what + " row " + std::to_string(i) + " references element " +
                                            std::to_string(v) + " outside the carrier");
  }
}

bool semigroup_ok(const Table& c, std::size_t unit, std::size_t null) {
  const std::size_t m = c.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (c[a][a] != a || c[a][unit] != a || c[a][null] != null) return false;
    for (std::size_t b = 0; b < m; ++b) {
      if (c[a][b] != c[b][a]) return false;
      for (std::size_t d = 0; d < m; ++d)
        if (c[c[a][b]][d] != c[a][c[b][d]]) return false;
    }
  }
  return true;
}

std::string domain_pair(const InfoAlgebra& a, std::size_t x, std::size_t y) {
  return a.domain_name(x) + ", " + a.domain_name(y);
}

}  // namespace

InfoAlgebra::InfoAlgebra(std::vector<std::string> names, Table combine, std::size_t unit, std::size_t null,
                         Semilattice domains, Table extract)
    : names_(std::move(names)),
      combine_(std::move(combine)),
      unit_(unit),
      null_(null),
      domains_(std::move(domains)),
      extract_(std::move(extract)) {
  const std::size_t m = names_.size();
  if (m == 0) throw InvalidArgument("empty carrier");
  if (unit_ >= m) throw InvalidArgument("unit index out of range");
  if (null_ >= m) throw InvalidArgument("null index out of range");
  check_table(combine_, m, m, m, "combination table");
  check_table(extract_, domains_.size(), m, m, "extraction table");
  if (semigroup_ok(combine_, unit_, null_)) {
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) leq[a][b] = combine_[a][b] == b;
    order_.emplace(Poset::from_matrix(std::move(leq), names_));
  }
}

std::size_t InfoAlgebra::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? npos : static_cast<std::size_t>(it - names_.begin());
}

const Semilattice& InfoAlgebra::order() const {
  if (!order_) throw InvalidArgument("combination is not an idempotent commutative monoid with null");
  return *order_;
}

Subset InfoAlgebra::image(std::size_t x) const {
  Subset s(size());
  for (auto v : extract_[x]) s.set(v);
  return s;
}

Subset InfoAlgebra::up_set(std::size_t a) const {
  Subset s(size());
  for (std::size_t b = 0; b < size(); ++b)
    if (leq(a, b)) s.set(b);
  return s;
}

Report verify_axioms(const InfoAlgebra& a, VerifyOptions opts) {
  Report r;
  const std::size_t m = a.size();
  const std::size_t nd = a.domain_count();
  const auto& dom = a.domains();

  // Layer 1: semigroup, unit and null laws.
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        for (std::size_t s = 0; s < m && w.empty(); ++s)
          if (a.combine(a.combine(p, q), s) != a.combine(p, a.combine(q, s))) w = {p, q, s};
    r.verdict("associative", w.empty(), w, "(phi, psi, chi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t q = 0; q < m && w.empty(); ++q)
        if (a.combine(p, q) != a.combine(q, p)) w = {p, q};
    r.verdict("commutative", w.empty(), w, "(phi, psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      if (a.combine(p, p) != p) w = {p};
    r.verdict("idempotent", w.empty(), w, "(psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      if (a.combine(p, a.unit()) != p) w = {p};
    r.verdict("unit", w.empty(), w, "(psi) with psi·1 != psi");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      if (a.combine(p, a.null()) != a.null()) w = {p};
    r.verdict("null", w.empty(), w, "(psi) with psi·0 != 0");
  }
  const bool layer1 = r.passed();
  auto skip = [&](const char* name) { r.not_applicable(name, "skipped: combination laws failed"); };

  if (!layer1) {
    for (auto n : {"E1", "E2", "E3", "E4", "E5", "distinct_domains"}) skip(n);
    return r;
  }

  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      if (a.extract(x, a.null()) != a.null()) w = {x};
    r.verdict("E1", w.empty(), w, "(x) with eps_x(0) != 0");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        if (a.combine(p, a.extract(x, p)) != p) w = {x, p};
    r.verdict("E2", w.empty(), w, "(x, psi) with psi·eps_x(psi) != psi");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        for (std::size_t q = 0; q < m && w.empty(); ++q) {
          auto ep = a.extract(x, p);
          if (a.extract(x, a.combine(ep, q)) != a.combine(ep, a.extract(x, q))) w = {x, p, q};
        }
    r.verdict("E3", w.empty(), w, "(x, phi, psi) with eps_x(eps_x(phi)·psi) != eps_x(phi)·eps_x(psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      if (support_set(a, p).none()) w = {p};
    if (opts.require_e4)
      r.verdict("E4", w.empty(), w, "(psi) without a support");
    else if (w.empty())
      r.pass("E4", "every element has a support");
    else
      r.not_applicable("E4", "not required; element " + a.name(w[0]) + " has no support");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < m && w.empty(); ++p)
      for (std::size_t x = 0; x < nd && w.empty(); ++x)
        for (std::size_t y = 0; y < nd && w.empty(); ++y)
          if (dom.leq(x, y) && a.extract(x, p) == p && a.extract(y, p) != p) w = {p, x, y};
    r.verdict("E5", w.empty(), w, "(psi, x, y) with x <= y, x a support of psi but y not");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = x + 1; y < nd && w.empty(); ++y)
        if (a.image(x) == a.image(y)) w = {x, y};
    r.verdict("distinct_domains", w.empty(), w,
              w.empty() ? "" : "domains " + domain_pair(a, w[0], w[1]) + " have the same image");
  }
  return r;
}

Subset support_set(const InfoAlgebra& a, std::size_t psi) {
  Subset s(a.domain_count());
  for (std::size_t x = 0; x < a.domain_count(); ++x)
    if (a.extract(x, psi) == psi) s.set(x);
  return s;
}

Report support_lemma_check(const InfoAlgebra& a) {
  Report r;
  const std::size_t m = a.size();
  const std::size_t nd = a.domain_count();
  const auto& dom = a.domains();
  if (!a.has_lattice_order()) {
    r.fail("precondition", {}, "combination laws fail");
    return r;
  }
  auto e = [&](std::size_t x, std::size_t p) { return a.extract(x, p); };
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      if (e(x, a.unit()) != a.unit()) w = {x};
    r.verdict("extract_unit", w.empty(), w, "(x)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        for (std::size_t q = 0; q < m && w.empty(); ++q)
          if (a.leq(p, q) && !a.leq(e(x, p), e(x, q))) w = {x, p, q};
    r.verdict("monotone", w.empty(), w, "(x, phi, psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        if (e(x, e(x, p)) != e(x, p)) w = {x, p};
    r.verdict("idempotent", w.empty(), w, "(x, psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = 0; y < nd && w.empty(); ++y)
        for (std::size_t p = 0; p < m && w.empty(); ++p)
          if (dom.leq(x, y) && !a.leq(e(x, p), e(y, p))) w = {x, y, p};
    r.verdict("domain_monotone", w.empty(), w, "(x, y, psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = 0; y < nd && w.empty(); ++y)
        for (std::size_t p = 0; p < m && w.empty(); ++p)
          if (dom.leq(x, y) && e(x, e(y, p)) != e(x, p)) w = {x, y, p};
    r.verdict("composition", w.empty(), w, "(x, y, psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t p = 0; p < m && w.empty(); ++p)
        for (std::size_t q = 0; q < m && w.empty(); ++q)
          if (e(x, p) == p && e(x, q) == q && e(x, a.combine(p, q)) != a.combine(p, q)) w = {x, p, q};
    r.verdict("support_combination", w.empty(), w, "(x, phi, psi)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < nd && w.empty(); ++x)
      for (std::size_t y = 0; y < nd && w.empty(); ++y)
        for (std::size_t p = 0; p < m && w.empty(); ++p)
          for (std::size_t q = 0; q < m && w.empty(); ++q) {
            auto z = dom.join(x, y);
            auto pq = a.combine(p, q);
            if (e(x, p) == p && e(y, q) == q && e(z, pq) != pq) w = {x, y, p, q};
          }
    r.verdict("joint_support", w.empty(), w, "(x, y, phi, psi)");
  }
  return r;
}

Subalgebra subalgebra_at(const InfoAlgebra& a, std::size_t x) {
  if (x >= a.domain_count()) throw InvalidArgument("domain index out of range");
  const auto img = a.image(x);
  std::vector<std::size_t> elems = members_of(img);
  std::vector<std::size_t> back(a.size(), npos);
  for (std::size_t i = 0; i < elems.size(); ++i) back[elems[i]] = i;

  std::vector<std::size_t> doms;
  for (std::size_t y = 0; y < a.domain_count(); ++y)
    if (a.domains().leq(y, x)) doms.push_back(y);

  std::vector<std::vector<bool>> leq(doms.size(), std::vector<bool>(doms.size()));
  std::vector<std::string> dnames;
  for (std::size_t i = 0; i < doms.size(); ++i) {
    dnames.push_back(a.domain_name(doms[i]));
    for (std::size_t j = 0; j < doms.size(); ++j) leq[i][j] = a.domains().leq(doms[i], doms[j]);
  }

  auto local = [&](std::size_t parent) {
    if (back[parent] == npos)
      throw InvalidArgument("image of domain " + a.domain_name(x) + " is not closed (element " + a.name(parent) + ")");
    return back[parent];
  };
  std::vector<std::string> names;
  Table comb(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    names.push_back(a.name(elems[i]));
    for (std::size_t j = 0; j < elems.size(); ++j) comb[i][j] = local(a.combine(elems[i], elems[j]));
  }
  Table ext(doms.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t d = 0; d < doms.size(); ++d)
    for (std::size_t i = 0; i < elems.size(); ++i) ext[d][i] = local(a.extract(doms[d], elems[i]));

  InfoAlgebra sub(std::move(names), std::move(comb), local(a.unit()), local(a.null()),
                  Semilattice(Poset::from_matrix(std::move(leq), std::move(dnames))), std::move(ext));
  return Subalgebra{std::move(sub), std::move(elems), std::move(doms)};
}

IdealCompletion ideal_completion(const InfoAlgebra& a, std::size_t bound) {
  const auto& ord = a.order();
  const std::size_t m = a.size();
  auto ideals_raw = enumerate_ideals(ord, bound);
  std::vector<Subset> ideals;
  std::map<Subset, std::size_t> index;
  for (auto& I : ideals_raw) {
    index.emplace(I.members, ideals.size());
    ideals.push_back(I.members);
  }
  auto lookup = [&](const Subset& s) {
    auto it = index.find(s);
    if (it == index.end()) throw std::logic_error("ideal operation left the set of ideals: " + to_string(s));
    return it->second;
  };
  const std::size_t k = ideals.size();
  Table comb(k, std::vector<std::size_t>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Subset s(m);
      for (auto p : members_of(ideals[i]))
        for (auto q : members_of(ideals[j])) s |= ord.down_set(a.combine(p, q));
      comb[i][j] = lookup(s);
    }
  Table ext(a.domain_count(), std::vector<std::size_t>(k));
  for (std::size_t x = 0; x < a.domain_count(); ++x)
    for (std::size_t i = 0; i < k; ++i) {
      Subset s(m);
      for (auto p : members_of(ideals[i])) s |= ord.down_set(a.extract(x, p));
      ext[x][i] = lookup(s);
    }
  std::vector<std::size_t> principal(m);
  for (std::size_t p = 0; p < m; ++p) principal[p] = lookup(ord.down_set(p));
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto g = ord.join_all(ideals[i]);
    names[i] = ord.down_set(g) == ideals[i] ? "down(" + a.name(g) + ")" : "I" + std::to_string(i);
  }
  Subset unit_set(m);
  unit_set.set(a.unit());
  InfoAlgebra alg(std::move(names), std::move(comb), lookup(unit_set), lookup(full_subset(m)), a.domains(),
                  std::move(ext));
  return IdealCompletion{std::move(alg), std::move(ideals), std::move(principal)};
}

Report ideal_extraction_lemma(const InfoAlgebra& a, std::size_t bound) {
  Report r;
  auto ic = ideal_completion(a, bound);
  const auto& b = ic.algebra;
  r.merge("completion", verify_axioms(b));
  std::vector<std::size_t> dmap(a.domain_count());
  for (std::size_t x = 0; x < dmap.size(); ++x) dmap[x] = x;
  r.merge("principal", check_homomorphism(a, b, ic.principal_of, dmap));
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < a.size() && w.empty(); ++p)
      for (std::size_t q = p + 1; q < a.size() && w.empty(); ++q)
        if (ic.principal_of[p] == ic.principal_of[q]) w = {p, q};
    r.verdict("principal.injective", w.empty(), w, "(phi, psi) with the same principal ideal");
  }
  std::vector<std::size_t> w;
  const std::size_t k = ic.ideals.size();
  for (std::size_t x = 0; x < a.domain_count() && w.empty(); ++x) {
    auto img = a.image(x);
    for (std::size_t i = 0; i < k && w.empty(); ++i)
      for (std::size_t j = 0; j < k && w.empty(); ++j) {
        bool lhs = b.extract(x, i) == b.extract(x, j);
        bool rhs = (ic.ideals[i] & img) == (ic.ideals[j] & img);
        if (lhs != rhs) w = {x, i, j};
      }
  }
  r.verdict("extraction_lemma", w.empty(), w, "(x, I, J) indices into the ideal list");
  return r;
}

CommutativityResult is_commutative(const InfoAlgebra& a) {
  CommutativityResult res;
  const std::size_t nd = a.domain_count();
  const std::size_t m = a.size();
  res.meet.assign(nd, std::vector<std::size_t>(nd, npos));
  for (std::size_t x = 0; x < nd; ++x)
    for (std::size_t y = 0; y < nd; ++y) {
      std::vector<std::size_t> xy(m);
      for (std::size_t p = 0; p < m; ++p) {
        xy[p] = a.extract(x, a.extract(y, p));
        if (xy[p] != a.extract(y, a.extract(x, p))) {
          res.witness = {x, y, p};
          res.reason = "extractions at " + domain_pair(a, x, y) + " do not commute on " + a.name(p);
          res.meet.clear();
          return res;
        }
      }
      for (std::size_t z = 0; z < nd && res.meet[x][y] == npos; ++z)
        if (a.extract_table()[z] == xy) res.meet[x][y] = z;
      if (res.meet[x][y] == npos) {
        res.witness = {x, y};
        res.reason = "composition of extractions at " + domain_pair(a, x, y) + " is not an extraction";
        res.meet.clear();
        return res;
      }
    }
  res.commutative = true;
  const auto& dom = a.domains();
  res.domain_lattice = true;
  for (std::size_t x = 0; x < nd && res.domain_lattice; ++x)
    for (std::size_t y = 0; y < nd && res.domain_lattice; ++y)
      if (dom.meet_or_npos(x, y) != res.meet[x][y]) {
        res.domain_lattice = false;
        res.witness = {x, y};
        res.reason = "induced meet differs from the domain order at " + domain_pair(a, x, y);
      }
  return res;
}

Report check_homomorphism(const InfoAlgebra& a, const InfoAlgebra& b, const std::vector<std::size_t>& h,
                          const std::vector<std::size_t>& d) {
  Report r;
  if (h.size() != a.size() || d.size() != a.domain_count())
    throw InvalidArgument("homomorphism maps have the wrong length");
  {
    std::vector<std::size_t> w;
    for (std::size_t p = 0; p < a.size() && w.empty(); ++p)
      for (std::size_t q = 0; q < a.size() && w.empty(); ++q)
        if (h[a.combine(p, q)] != b.combine(h[p], h[q])) w = {p, q};
    r.verdict("combination", w.empty(), w, "(phi, psi)");
  }
  r.verdict("unit", h[a.unit()] == b.unit());
  r.verdict("null", h[a.null()] == b.null());
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < a.domain_count() && w.empty(); ++x)
      for (std::size_t p = 0; p < a.size() && w.empty(); ++p)
        if (h[a.extract(x, p)] != b.extract(d[x], h[p])) w = {x, p};
    r.verdict("extraction", w.empty(), w, "(x, psi)");
  }
  return r;
}

}  // namespace infalg
