#include "infalg/lattice.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace infalg {

namespace {

std::vector<std::string> default_names(std::size_t m, std::vector<std::string> names) {
  if (names.empty()) {
    for (std::size_t i = 0; i < m; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != m) throw InvalidArgument("poset has " + std::to_string(m) + " elements but " +
                                               std::to_string(names.size()) + " names");
  return names;
}

void require_lattice(const Semilattice& l, const char* what) {
  if (!l.is_lattice()) throw InvalidArgument(std::string(what) + " requires a lattice");
}

std::string set_name(unsigned mask, std::size_t k, std::size_t offset) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < k; ++i)
    if (mask >> i & 1U) {
      if (!first) s += ',';
      s += std::to_string(i + offset);
      first = false;
    }
  return s + "}";
}

Semilattice inclusion_lattice(const std::vector<unsigned>& family, std::size_t k, std::size_t offset) {
  const std::size_t m = family.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(set_name(family[i], k, offset));
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = (family[i] & ~family[j]) == 0;
  }
  return Semilattice(Poset::from_matrix(std::move(leq), std::move(names)));
}

}  // namespace

Poset::Poset(std::vector<std::vector<bool>> leq, std::vector<std::string> names)
    : leq_(std::move(leq)), names_(std::move(names)) {}

Poset Poset::from_relation(std::size_t m, const std::vector<Pair>& pairs, std::vector<std::string> names) {
  std::vector<std::vector<bool>> r(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i) r[i][i] = true;
  for (auto [i, j] : pairs) {
    if (i >= m || j >= m) throw InvalidArgument("order pair references element outside 0.." + std::to_string(m - 1));
    r[i][j] = true;
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t i = 0; i < m; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < m; ++j)
          if (r[k][j]) r[i][j] = true;
  return from_matrix(std::move(r), std::move(names));
}

Poset Poset::from_matrix(std::vector<std::vector<bool>> leq, std::vector<std::string> names) {
  const std::size_t m = leq.size();
  if (m == 0) throw InvalidArgument("empty poset");
  for (const auto& row : leq)
    if (row.size() != m) throw InvalidArgument("order matrix is not square");
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq[i][i]) throw InvalidArgument("order not reflexive at " + std::to_string(i));
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw InvalidArgument("order not antisymmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (leq[i][j])
        for (std::size_t k = 0; k < m; ++k)
          if (leq[j][k] && !leq[i][k])
            throw InvalidArgument("order not transitive at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
    }
  }
  return Poset(std::move(leq), default_names(m, std::move(names)));
}

std::size_t Poset::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? npos : static_cast<std::size_t>(it - names_.begin());
}

std::vector<Pair> Poset::covers() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (!lt(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < size() && direct; ++k)
        if (lt(i, k) && lt(k, j)) direct = false;
      if (direct) out.push_back({i, j});
    }
  return out;
}

namespace {

// Least element of `cands` w.r.t. `le`, or npos.
template <class Le>
std::size_t least_of(const std::vector<std::size_t>& cands, Le le) {
  for (auto c : cands) {
    bool least = true;
    for (auto d : cands)
      if (!le(c, d)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return npos;
}

}  // namespace

std::optional<Pair> check_join_semilattice(const Poset& p) {
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      std::vector<std::size_t> ub;
      for (std::size_t k = 0; k < m; ++k)
        if (p.leq(i, k) && p.leq(j, k)) ub.push_back(k);
      if (least_of(ub, [&](auto a, auto b) { return p.leq(a, b); }) == npos) return Pair{i, j};
    }
  return std::nullopt;
}

Semilattice::Semilattice(Poset p) : poset_(std::move(p)) {
  const std::size_t m = poset_.size();
  join_.assign(m, std::vector<std::size_t>(m, npos));
  meet_.assign(m, std::vector<std::size_t>(m, npos));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> ub, lb;
      for (std::size_t k = 0; k < m; ++k) {
        if (poset_.leq(i, k) && poset_.leq(j, k)) ub.push_back(k);
        if (poset_.leq(k, i) && poset_.leq(k, j)) lb.push_back(k);
      }
      join_[i][j] = least_of(ub, [&](auto a, auto b) { return poset_.leq(a, b); });
      if (join_[i][j] == npos)
        throw InvalidArgument("elements " + poset_.name(i) + " and " + poset_.name(j) + " have no join");
      meet_[i][j] = least_of(lb, [&](auto a, auto b) { return poset_.leq(b, a); });
    }
  std::vector<std::size_t> all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  top_ = least_of(all, [&](auto a, auto b) { return poset_.leq(b, a); });
  bottom_ = least_of(all, [&](auto a, auto b) { return poset_.leq(a, b); });
}

std::size_t Semilattice::meet(std::size_t i, std::size_t j) const {
  auto r = meet_[i][j];
  if (r == npos) throw InvalidArgument("meet of " + name(i) + " and " + name(j) + " is undefined");
  return r;
}

std::size_t Semilattice::bottom() const {
  if (bottom_ == npos) throw InvalidArgument("semilattice has no bottom");
  return bottom_;
}

std::size_t Semilattice::join_all(const Subset& s) const {
  auto i = s.find_first();
  if (i == Subset::npos) return bottom();
  std::size_t acc = i;
  for (i = s.find_next(i); i != Subset::npos; i = s.find_next(i)) acc = join(acc, i);
  return acc;
}

std::size_t Semilattice::meet_all(const Subset& s) const {
  auto i = s.find_first();
  if (i == Subset::npos) return top_;
  std::size_t acc = i;
  for (i = s.find_next(i); i != Subset::npos; i = s.find_next(i)) {
    acc = meet_[acc][i];
    if (acc == npos) return npos;
  }
  return acc;
}

Subset Semilattice::up_set(std::size_t i) const {
  Subset s(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (leq(i, j)) s.set(j);
  return s;
}

Subset Semilattice::down_set(std::size_t i) const {
  Subset s(size());
  for (std::size_t j = 0; j < size(); ++j)
    if (leq(j, i)) s.set(j);
  return s;
}

std::optional<Triple> modularity_witness(const Semilattice& l) {
  require_lattice(l, "modularity check");
  const std::size_t m = l.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (l.leq(z, x) && l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), z)) return Triple{x, y, z};
  return std::nullopt;
}

std::optional<Triple> distributivity_witness(const Semilattice& l) {
  require_lattice(l, "distributivity check");
  const std::size_t m = l.size();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return Triple{x, y, z};
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> boolean_complements(const Semilattice& l) {
  if (!l.is_lattice() || !is_distributive(l)) return std::nullopt;
  std::vector<std::size_t> comp(l.size(), npos);
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size() && comp[x] == npos; ++y)
      if (l.join(x, y) == l.top() && l.meet(x, y) == l.bottom()) comp[x] = y;
    if (comp[x] == npos) return std::nullopt;
  }
  return comp;
}

Subset meet_irreducibles(const Semilattice& l) {
  const std::size_t m = l.size();
  Subset out(m);
  for (std::size_t c = 0; c < m; ++c) {
    if (c == l.top()) continue;
    bool irreducible = true;
    for (std::size_t a = 0; a < m && irreducible; ++a)
      for (std::size_t b = 0; b < m && irreducible; ++b)
        if (l.meet_or_npos(a, b) == c && a != c && b != c) irreducible = false;
    if (irreducible) out.set(c);
  }
  return out;
}

Subset ideal_closure(const Semilattice& l, const Subset& s) {
  if (s.none()) throw InvalidArgument("ideal generated by the empty set");
  // The join of the generators generates the same ideal.
  return l.down_set(l.join_all(s));
}

std::vector<OrderIdeal> enumerate_ideals(const Semilattice& l, std::size_t bound) {
  const std::size_t m = l.size();
  if (m > bound)
    throw BoundExceeded("ideal enumeration over " + std::to_string(m) + " elements exceeds bound " +
                        std::to_string(bound));
  // Closure traversal: start from each single-element closure and keep adding one element.
  auto close = [&](Subset s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
        for (std::size_t j = 0; j < m; ++j) {
          if (l.leq(j, i) && !s.test(j)) s.set(j), changed = true;
          if (s.test(j) && !s.test(l.join(i, j))) s.set(l.join(i, j)), changed = true;
        }
    }
    return s;
  };
  std::set<Subset> seen;
  std::deque<Subset> queue;
  for (std::size_t i = 0; i < m; ++i) {
    Subset s(m);
    s.set(i);
    auto c = close(s);
    if (seen.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < m; ++j) {
      if (cur.test(j)) continue;
      auto next = cur;
      next.set(j);
      next = close(next);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<OrderIdeal> out;
  for (const auto& s : seen) {
    OrderIdeal I;
    I.members = s;
    I.proper = s.count() < m;
    auto g = l.join_all(s);
    I.principal = s.test(g) && l.down_set(g) == s;
    if (I.principal) I.generator = g;
    if (I.proper && l.is_lattice()) {
      I.prime = true;
      for (std::size_t a = 0; a < m && I.prime; ++a)
        for (std::size_t b = 0; b < m && I.prime; ++b)
          if (s.test(l.meet(a, b)) && !s.test(a) && !s.test(b)) I.prime = false;
    }
    out.push_back(std::move(I));
  }
  for (auto& I : out) {
    if (!I.proper) continue;
    I.maximal = true;
    for (const auto& J : out)
      if (J.proper && J.members != I.members && I.members.is_subset_of(J.members)) I.maximal = false;
  }
  // Order by generator-free canonical key: size then members.
  std::sort(out.begin(), out.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
    if (a.members.count() != b.members.count()) return a.members.count() < b.members.count();
    return members_of(a.members) < members_of(b.members);
  });
  return out;
}

Semilattice chain_lattice(std::size_t n) {
  if (n == 0) throw InvalidArgument("chain of length 0");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  return Semilattice(Poset::from_matrix(std::move(leq)));
}

Semilattice powerset_lattice(std::size_t k, std::size_t offset) {
  if (k > 10) throw BoundExceeded("powerset lattice over more than 10 points");
  std::vector<unsigned> family;
  for (unsigned m = 0; m < (1U << k); ++m) family.push_back(m);
  return inclusion_lattice(family, k, offset);
}

Semilattice n5_lattice() {
  return Semilattice(Poset::from_relation(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}, {"0", "a", "b", "c", "1"}));
}

Semilattice m3_lattice() {
  return Semilattice(
      Poset::from_relation(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}, {"0", "a", "b", "c", "1"}));
}

Semilattice antichain_with_top(std::size_t k) {
  std::vector<Pair> pairs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    pairs.push_back({i, k});
    names.push_back("a" + std::to_string(i));
  }
  names.push_back("top");
  return Semilattice(Poset::from_relation(k + 1, pairs, names));
}

Semilattice partition_lattice(const std::vector<Partition>& family) {
  const std::size_t m = family.size();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(family[i].to_string());
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = refines(family[i], family[j]);
  }
  return Semilattice(Poset::from_matrix(std::move(leq), std::move(names)));
}

Semilattice partition_lattice(std::size_t n) { return partition_lattice(all_partitions(n)); }

Semilattice random_closure_lattice(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<unsigned> fam{0};
  auto picks = 1 + rng() % 5;
  for (std::uint64_t i = 0; i < picks; ++i) fam.insert(static_cast<unsigned>(rng() % 8));
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<unsigned> cur(fam.begin(), fam.end());
    for (auto a : cur)
      for (auto b : cur)
        if (fam.insert(a | b).second | fam.insert(a & b).second) changed = true;
  }
  return inclusion_lattice(std::vector<unsigned>(fam.begin(), fam.end()), 3, 0);
}

Semilattice builtin_lattice(const std::string& spec) {
  auto arg = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (spec.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return static_cast<std::size_t>(std::stoul(spec.substr(prefix.size())));
    } catch (const std::exception&) {
      throw InvalidArgument("bad lattice size in '" + spec + "'");
    }
  };
  if (spec == "N5") return n5_lattice();
  if (spec == "M3") return m3_lattice();
  if (auto n = arg("chain:")) return chain_lattice(*n);
  if (auto n = arg("powerset:")) return powerset_lattice(*n);
  if (auto n = arg("antichain:")) return antichain_with_top(*n);
  if (auto n = arg("partitions:")) return partition_lattice(*n);
  throw InvalidArgument("unknown lattice '" + spec + "'");
}

}  // namespace infalg
