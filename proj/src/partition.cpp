#include "infalg/partition.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace infalg {

namespace {

void require_same_universe(const Partition& a, const Partition& b) {
  if (a.universe() != b.universe())
    throw InvalidArgument("partitions over universes of size " + std::to_string(a.universe()) + " and " +
                          std::to_string(b.universe()));
}

std::vector<std::size_t> canonicalize(std::span<const std::size_t> labels) {
  std::map<std::size_t, std::size_t> renumber;
  std::vector<std::size_t> out;
  out.reserve(labels.size());
  for (auto l : labels) {
    auto [it, fresh] = renumber.emplace(l, renumber.size());
    out.push_back(it->second);
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<std::size_t> canonical_labels) : block_of_(std::move(canonical_labels)) {
  // n = 0 only arises for the empty universe of a degenerate embedding.
  const std::size_t n = block_of_.size();
  if (n == 0) return;
  std::size_t k = *std::max_element(block_of_.begin(), block_of_.end()) + 1;
  blocks_.assign(k, Subset(n));
  for (std::size_t u = 0; u < n; ++u) blocks_[block_of_[u]].set(u);
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
  return Partition(canonicalize(labels));
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> labels(n, unset);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidArgument("empty block");
    for (auto u : blocks[b]) {
      if (u >= n) throw InvalidArgument("block element " + std::to_string(u) + " outside universe");
      if (labels[u] != unset) throw InvalidArgument("element " + std::to_string(u) + " in two blocks");
      labels[u] = b;
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    if (labels[u] == unset) throw InvalidArgument("element " + std::to_string(u) + " in no block");
  return from_labels(labels);
}

Partition Partition::coarsest(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

Partition Partition::finest(std::size_t n) {
  std::vector<std::size_t> l(n);
  for (std::size_t i = 0; i < n; ++i) l[i] = i;
  return Partition(std::move(l));
}

std::vector<std::vector<std::size_t>> Partition::block_lists() const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& b : blocks_) out.push_back(members_of(b));
  return out;
}

std::string Partition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += infalg::to_string(blocks_[i]);
  }
  return s + "}";
}

Partition partition_join(const Partition& p1, const Partition& p2) {
  require_same_universe(p1, p2);
  const std::size_t n = p1.universe();
  std::vector<std::size_t> labels(n);
  for (std::size_t u = 0; u < n; ++u) labels[u] = p1.block_of(u) * n + p2.block_of(u);
  return Partition::from_labels(labels);
}

Partition partition_meet(const Partition& p1, const Partition& p2) {
  require_same_universe(p1, p2);
  const std::size_t n = p1.universe();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] != unset) continue;
    std::deque<std::size_t> queue{start};
    comp[start] = next;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (const Subset* b : {&p1.block(p1.block_of(u)), &p2.block(p2.block_of(u))})
        for (auto v = b->find_first(); v != Subset::npos; v = b->find_next(v))
          if (comp[v] == unset) {
            comp[v] = next;
            queue.push_back(v);
          }
    }
    ++next;
  }
  return Partition::from_labels(comp);
}

bool refines(const Partition& p_coarse, const Partition& p_fine) {
  require_same_universe(p_coarse, p_fine);
  for (const auto& b : p_fine.blocks()) {
    auto first = b.find_first();
    if (!b.is_subset_of(p_coarse.block(p_coarse.block_of(first)))) return false;
  }
  return true;
}

Subset saturate(const Partition& p, const Subset& x) {
  if (x.size() != p.universe()) throw InvalidArgument("subset and partition universes differ");
  Subset out(p.universe());
  for (const auto& b : p.blocks())
    if (b.intersects(x)) out |= b;
  return out;
}

bool is_saturated(const Partition& p, const Subset& x) { return saturate(p, x) == x; }

bool commute(const Partition& p1, const Partition& p2) {
  require_same_universe(p1, p2);
  // Inside each block of the meet, every p1-block must meet every p2-block.
  const Partition m = partition_meet(p1, p2);
  for (const auto& b1 : p1.blocks())
    for (const auto& b2 : p2.blocks())
      if (!b1.intersects(b2) && m.block_of(b1.find_first()) == m.block_of(b2.find_first())) return false;
  return true;
}

bool cond_independent(std::span<const Partition> ps, const Partition& given) {
  if (ps.empty()) throw InvalidArgument("cond_independent needs at least one partition");
  for (const auto& p : ps) require_same_universe(p, given);
  for (const auto& bgiven : given.blocks()) {
    // Candidate blocks per partition: those meeting the conditioning block.
    std::vector<std::vector<const Subset*>> cand(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (const auto& b : ps[i].blocks())
        if (b.intersects(bgiven)) cand[i].push_back(&b);
    // Depth-first over tuples, pruning as soon as the running intersection is empty.
    std::vector<Subset> acc(ps.size() + 1);
    acc[0] = bgiven;
    std::vector<std::size_t> idx(ps.size(), 0);
    std::size_t depth = 0;
    while (true) {
      if (depth == ps.size()) {
        --depth;
        ++idx[depth];
        continue;
      }
      if (idx[depth] == cand[depth].size()) {
        if (depth == 0) break;
        idx[depth] = 0;
        --depth;
        ++idx[depth];
        continue;
      }
      acc[depth + 1] = acc[depth] & *cand[depth][idx[depth]];
      if (acc[depth + 1].none()) return false;
      ++depth;
    }
  }
  return true;
}

bool cond_independent(const Partition& p1, const Partition& p2, const Partition& given) {
  const Partition ps[] = {p1, p2};
  return cond_independent(std::span<const Partition>(ps), given);
}

bool independent(std::span<const Partition> ps) {
  if (ps.size() < 2) throw InvalidArgument("independent needs at least two partitions");
  return cond_independent(ps, Partition::coarsest(ps[0].universe()));
}

std::vector<Partition> all_partitions(std::size_t n, std::size_t bound) {
  if (n == 0) throw InvalidArgument("universe must be nonempty");
  if (n > bound) throw BoundExceeded("all_partitions: universe " + std::to_string(n) + " exceeds bound " +
                                     std::to_string(bound));
  std::vector<Partition> out;
  // Restricted-growth strings: a[0]=0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::size_t> a(n, 0), mx(n, 0);
  while (true) {
    out.push_back(Partition::from_labels(a));
    std::size_t i = n - 1;
    while (i > 0 && a[i] == mx[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    mx[i] = std::max(mx[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      mx[j] = mx[i];
    }
  }
  return out;
}

void for_each_subset(std::size_t n, const std::function<void(const Subset&)>& f) {
  if (n > max_subset_universe)
    throw BoundExceeded("subset enumeration over " + std::to_string(n) + " elements exceeds " +
                        std::to_string(max_subset_universe));
  for (unsigned long long m = 0; m < (1ULL << n); ++m) f(subset_from_mask(n, m));
}

}  // namespace infalg
