#include "infalg/examples.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace infalg {

namespace {

void check_carrier(std::size_t m, std::size_t max_carrier) {
  if (m > max_carrier)
    throw BoundExceeded("carrier of " + std::to_string(m) + " elements exceeds bound " + std::to_string(max_carrier));
}

// First pair of family members whose join is missing, or nullopt.
std::optional<Pair> join_closure_witness(const std::vector<Partition>& family) {
  std::set<Partition> fam(family.begin(), family.end());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!fam.count(partition_join(family[i], family[j]))) return Pair{i, j};
  return std::nullopt;
}

Semilattice family_order(const std::vector<Partition>& family, std::vector<std::string> names) {
  const std::size_t k = family.size();
  if (k == 0) throw InvalidArgument("empty partition family");
  if (names.empty())
    for (const auto& p : family) names.push_back(p.to_string());
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = refines(family[i], family[j]);
  return Semilattice(Poset::from_matrix(std::move(leq), std::move(names)));
}

void check_family(std::size_t n, const std::vector<Partition>& family) {
  for (const auto& p : family)
    if (p.universe() != n) throw InvalidArgument("family partition over the wrong universe");
  std::set<Partition> distinct(family.begin(), family.end());
  if (distinct.size() != family.size()) throw InvalidArgument("family contains a repeated partition");
  if (auto w = join_closure_witness(family))
    throw InvalidArgument("family is not join-closed: join of members " + std::to_string((*w)[0]) + " and " +
                          std::to_string((*w)[1]) + " is missing");
}

std::string subset_name(const Subset& s, const std::vector<std::string>& points) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    if (!first) out += ',';
    out += points.empty() ? std::to_string(i) : points[i];
    first = false;
  }
  return out + "}";
}

// Unions of blocks of p.
std::vector<Subset> saturated_sets(const Partition& p) {
  std::vector<Subset> out;
  const auto k = p.block_count();
  if (k > 20) throw BoundExceeded("partition with more than 20 blocks");
  for (unsigned long long m = 0; m < (1ULL << k); ++m) {
    Subset s(p.universe());
    for (std::size_t b = 0; b < k; ++b)
      if (m >> b & 1ULL) s |= p.block(b);
    out.push_back(s);
  }
  return out;
}

}  // namespace

InfoAlgebra make_string_algebra(std::size_t k, std::size_t L, std::size_t max_carrier) {
  if (k == 0 || k > 26) throw InvalidArgument("alphabet size must be between 1 and 26");
  if (L == 0) throw InvalidArgument("length bound must be at least 1");
  std::size_t count = 1, layer = 1;
  for (std::size_t i = 1; i <= L; ++i) {
    layer *= k;
    count += layer;
    check_carrier(count + 1, max_carrier);
  }
  std::vector<std::string> strings{""};
  for (std::size_t begin = 0, len = 0; len < L; ++len) {
    const std::size_t end = strings.size();
    for (std::size_t i = begin; i < end; ++i)
      for (std::size_t c = 0; c < k; ++c) strings.push_back(strings[i] + static_cast<char>('a' + c));
    begin = end;
  }
  const std::size_t m = strings.size() + 1;
  const std::size_t null = m - 1;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < strings.size(); ++i) index[strings[i]] = i;

  Table comb(m, std::vector<std::size_t>(m, null));
  for (std::size_t i = 0; i < strings.size(); ++i)
    for (std::size_t j = 0; j < strings.size(); ++j) {
      const auto& r = strings[i];
      const auto& s = strings[j];
      if (s.compare(0, r.size(), r) == 0)
        comb[i][j] = j;
      else if (r.compare(0, s.size(), s) == 0)
        comb[i][j] = i;
    }
  Table ext(L + 1, std::vector<std::size_t>(m, null));
  for (std::size_t n = 0; n <= L; ++n)
    for (std::size_t i = 0; i < strings.size(); ++i) ext[n][i] = index.at(strings[i].substr(0, n));

  std::vector<std::string> names = strings;
  names[0] = "1";
  names.push_back("0");
  std::vector<std::vector<bool>> leq(L + 1, std::vector<bool>(L + 1));
  std::vector<std::string> dnames;
  for (std::size_t i = 0; i <= L; ++i) {
    dnames.push_back(std::to_string(i));
    for (std::size_t j = i; j <= L; ++j) leq[i][j] = true;
  }
  return InfoAlgebra(std::move(names), std::move(comb), 0, null,
                     Semilattice(Poset::from_matrix(std::move(leq), std::move(dnames))), std::move(ext));
}

InfoAlgebra make_multivariate(const std::vector<std::size_t>& frames, std::size_t max_carrier) {
  if (frames.empty()) throw InvalidArgument("no variables");
  if (frames.size() > 6) throw BoundExceeded("more than 6 variables");
  std::size_t n = 1;
  for (auto f : frames) {
    if (f < 2 || f > 10) throw InvalidArgument("frame sizes must be between 2 and 10");
    n *= f;
    if (n > 16) throw BoundExceeded("product universe exceeds 16 points");
  }
  if (n >= 64 || (std::size_t{1} << n) > max_carrier)
    throw BoundExceeded("carrier of 2^" + std::to_string(n) + " elements exceeds bound " + std::to_string(max_carrier));
  const std::size_t v = frames.size();
  // Point u has coordinate i equal to (u / stride_i) % frame_i, variable 1 varying slowest.
  std::vector<std::vector<std::size_t>> coord(n, std::vector<std::size_t>(v));
  std::vector<std::string> points(n);
  for (std::size_t u = 0; u < n; ++u) {
    std::size_t rest = u;
    for (std::size_t i = v; i-- > 0;) {
      coord[u][i] = rest % frames[i];
      rest /= frames[i];
    }
    for (std::size_t i = 0; i < v; ++i) points[u] += std::to_string(coord[u][i]);
  }
  std::vector<Partition> family;
  std::vector<std::string> dnames;
  for (unsigned mask = 0; mask < (1U << v); ++mask) {
    std::map<std::vector<std::size_t>, std::size_t> key;
    std::vector<std::size_t> labels(n);
    for (std::size_t u = 0; u < n; ++u) {
      std::vector<std::size_t> k;
      for (std::size_t i = 0; i < v; ++i)
        if (mask >> i & 1U) k.push_back(coord[u][i]);
      labels[u] = key.emplace(k, key.size()).first->second;
    }
    family.push_back(Partition::from_labels(labels));
    std::string name = "{";
    for (std::size_t i = 0, first = 1; i < v; ++i)
      if (mask >> i & 1U) {
        if (!first) name += ',';
        name += std::to_string(i + 1);
        first = 0;
      }
    dnames.push_back(name + "}");
  }
  std::vector<Subset> all;
  for_each_subset(n, [&](const Subset& s) { all.push_back(s); });
  return make_set_algebra(n, family, all, std::move(dnames), std::move(points));
}

InfoAlgebra make_set_algebra(std::size_t n, const std::vector<Partition>& family,
                             const std::optional<std::vector<Subset>>& elements, std::vector<std::string> domain_names,
                             std::vector<std::string> point_names) {
  if (n == 0 || n > max_subset_universe) throw InvalidArgument("universe size must be between 1 and 16");
  if (!point_names.empty() && point_names.size() != n) throw InvalidArgument("one name per point required");
  check_family(n, family);
  auto domains = family_order(family, std::move(domain_names));

  std::vector<Subset> carrier;
  if (elements) {
    std::set<Subset> set;
    for (const auto& s : *elements) {
      if (s.size() != n) throw InvalidArgument("element over the wrong universe");
      if (!set.insert(s).second) throw InvalidArgument("repeated element " + subset_name(s, point_names));
    }
    if (!set.count(full_subset(n))) throw InvalidArgument("elements must contain the universe");
    if (!set.count(Subset(n))) throw InvalidArgument("elements must contain the empty set");
    // Input order, so the reported pair is the first offending one as given.
    for (const auto& s : *elements) {
      bool saturated = std::any_of(family.begin(), family.end(), [&](const auto& p) { return is_saturated(p, s); });
      if (!saturated) throw InvalidArgument("element " + subset_name(s, point_names) + " is not saturated for any domain");
      for (const auto& t : *elements)
        if (!set.count(s & t))
          throw InvalidArgument("elements not closed under intersection: " + subset_name(s, point_names) + " and " +
                                subset_name(t, point_names));
      for (std::size_t x = 0; x < family.size(); ++x)
        if (!set.count(saturate(family[x], s)))
          throw InvalidArgument("elements not closed under saturation: " + subset_name(s, point_names) +
                                " by domain " + domains.name(x));
    }
    carrier = *elements;
  } else {
    std::set<Subset> set;
    for (const auto& p : family)
      for (auto& s : saturated_sets(p)) set.insert(s);
    carrier.assign(set.begin(), set.end());
    std::sort(carrier.begin(), carrier.end(),
              [](const Subset& a, const Subset& b) { return a.to_ulong() < b.to_ulong(); });
  }
  check_carrier(carrier.size(), std::max<std::size_t>(default_max_carrier, 1U << std::min<std::size_t>(n, 16)));

  std::map<Subset, std::size_t> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = i;
  const std::size_t m = carrier.size();
  Table comb(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) comb[i][j] = index.at(carrier[i] & carrier[j]);
  Table ext(family.size(), std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < family.size(); ++x)
    for (std::size_t i = 0; i < m; ++i) ext[x][i] = index.at(saturate(family[x], carrier[i]));
  std::vector<std::string> names;
  for (const auto& s : carrier) names.push_back(subset_name(s, point_names));
  return InfoAlgebra(std::move(names), std::move(comb), index.at(full_subset(n)), index.at(Subset(n)),
                     std::move(domains), std::move(ext));
}

InfoAlgebra make_lattice_valued(std::size_t n, const std::vector<Partition>& family, const Semilattice& values,
                                std::size_t max_carrier) {
  if (!values.is_lattice() || !is_distributive(values))
    throw InvalidArgument("value lattice must be a distributive lattice");
  if (n == 0) throw InvalidArgument("empty universe");
  check_family(n, family);
  auto domains = family_order(family, {});
  const std::size_t lv = values.size();

  std::set<std::vector<std::size_t>> maps;
  for (const auto& p : family) {
    const std::size_t k = p.block_count();
    double total = 1;
    for (std::size_t b = 0; b < k; ++b) total *= static_cast<double>(lv);
    if (total > static_cast<double>(max_carrier) * 4)
      throw BoundExceeded("too many block-constant maps for the carrier bound");
    std::vector<std::size_t> val(k, 0);
    while (true) {
      std::vector<std::size_t> f(n);
      for (std::size_t u = 0; u < n; ++u) f[u] = val[p.block_of(u)];
      maps.insert(f);
      std::size_t i = 0;
      while (i < k && ++val[i] == lv) val[i++] = 0;
      if (i == k) break;
    }
  }
  check_carrier(maps.size(), max_carrier);
  std::vector<std::vector<std::size_t>> carrier(maps.begin(), maps.end());
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = i;
  const std::size_t m = carrier.size();
  Table comb(m, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> f(n);
      for (std::size_t u = 0; u < n; ++u) f[u] = values.meet(carrier[i][u], carrier[j][u]);
      comb[i][j] = index.at(f);
    }
  Table ext(family.size(), std::vector<std::size_t>(m));
  for (std::size_t x = 0; x < family.size(); ++x)
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<std::size_t> f(n);
      for (std::size_t u = 0; u < n; ++u) {
        auto acc = values.bottom();
        for (auto w : members_of(family[x].block(family[x].block_of(u)))) acc = values.join(acc, carrier[i][w]);
        f[u] = acc;
      }
      ext[x][i] = index.at(f);
    }
  std::vector<std::string> names;
  for (const auto& f : carrier) {
    std::string s = "(";
    for (std::size_t u = 0; u < n; ++u) s += (u ? "," : "") + values.name(f[u]);
    names.push_back(s + ")");
  }
  return InfoAlgebra(std::move(names), std::move(comb), index.at(std::vector<std::size_t>(n, values.top())),
                     index.at(std::vector<std::size_t>(n, values.bottom())), std::move(domains), std::move(ext));
}

InfoAlgebra random_instance(std::uint64_t seed, std::size_t max_universe) {
  if (max_universe == 0 || max_universe > 8) throw InvalidArgument("random universe bound must be between 1 and 8");
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + rng() % max_universe;
  const std::size_t picks = 1 + rng() % 4;
  std::set<Partition> fam;
  for (std::size_t i = 0; i < picks; ++i) {
    std::vector<std::size_t> labels(n);
    const std::size_t blocks = 1 + rng() % n;
    for (auto& l : labels) l = rng() % blocks;
    fam.insert(Partition::from_labels(labels));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Partition> cur(fam.begin(), fam.end());
    for (const auto& p : cur)
      for (const auto& q : cur)
        if (fam.insert(partition_join(p, q)).second) changed = true;
  }
  return make_set_algebra(n, std::vector<Partition>(fam.begin(), fam.end()));
}

InfoAlgebra multivariate_fixture() { return make_multivariate({2, 2}); }

InfoAlgebra string_fixture() { return make_string_algebra(2, 3); }

InfoAlgebra lattice_valued_fixture() {
  return make_lattice_valued(2, {Partition::coarsest(2), Partition::finest(2)}, chain_lattice(3));
}

InfoAlgebra chain_carrier_fixture() { return make_string_algebra(1, 2); }

InfoAlgebra noncommutative_fixture() {
  return make_set_algebra(3, {Partition::from_blocks(3, {{0, 1}, {2}}), Partition::from_blocks(3, {{0}, {1, 2}}),
                              Partition::finest(3)});
}

InfoAlgebra footnote_fixture() {
  // Information order u < bot < t, f < top; u is the unit, top the null.
  enum { u, bot, t, f, top };
  std::vector<std::string> names{"u", "bot", "t", "f", "top"};
  auto rank = [](std::size_t e) { return e == u ? 0 : e == bot ? 1 : e == top ? 3 : 2; };
  Table comb(5, std::vector<std::size_t>(5));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i == j)
        comb[i][j] = i;
      else if (rank(i) == 2 && rank(j) == 2)
        comb[i][j] = top;
      else
        comb[i][j] = rank(i) >= rank(j) ? i : j;
    }
  Table ext{{u, u, t, f, top}, {u, bot, t, f, top}};
  return InfoAlgebra(std::move(names), std::move(comb), u, top,
                     Semilattice(Poset::from_relation(2, {{0, 1}}, {"x", "y"})), std::move(ext));
}

std::vector<NamedInstance> bundled_fixtures() {
  std::vector<NamedInstance> out;
  out.push_back({"multivariate", multivariate_fixture()});
  out.push_back({"string", string_fixture()});
  out.push_back({"lattice_valued", lattice_valued_fixture()});
  out.push_back({"chain_carrier", chain_carrier_fixture()});
  out.push_back({"noncommutative", noncommutative_fixture()});
  out.push_back({"footnote", footnote_fixture()});
  return out;
}

}  // namespace infalg
