#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "infalg/subset.hpp"

namespace infalg {

/// Largest universe for which 2^n subset enumeration is allowed.
inline constexpr std::size_t max_subset_universe = 16;

/// A partition of {0..n-1} in canonical form: block ids are 0..k-1,
/// numbered by the minimum element of each block.
///
/// Order follows information content: P <= Q iff Q is finer than P.
class Partition {
 public:
  /// Builds from an arbitrary labelling (labels need not be contiguous).
  static Partition from_labels(std::span<const std::size_t> labels);
  /// Blocks must be disjoint, nonempty, and cover {0..n-1}.
  static Partition from_blocks(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks);
  static Partition coarsest(std::size_t n);
  static Partition finest(std::size_t n);

  std::size_t universe() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t block_of(std::size_t u) const { return block_of_.at(u); }
  const std::vector<std::size_t>& labels() const { return block_of_; }
  const std::vector<Subset>& blocks() const { return blocks_; }
  const Subset& block(std::size_t id) const { return blocks_.at(id); }
  std::vector<std::vector<std::size_t>> block_lists() const;

  bool operator==(const Partition& o) const { return block_of_ == o.block_of_; }
  bool operator<(const Partition& o) const { return block_of_ < o.block_of_; }

  std::string to_string() const;

 private:
  explicit Partition(std::vector<std::size_t> canonical_labels);
  std::vector<std::size_t> block_of_;
  std::vector<Subset> blocks_;
};

/// Finer partition whose blocks are the nonempty intersections.
Partition partition_join(const Partition& p1, const Partition& p2);
/// Connected components of "same block in p1 or in p2".
Partition partition_meet(const Partition& p1, const Partition& p2);
/// True iff p_coarse <= p_fine, i.e. each block of p_fine sits inside a block of p_coarse.
bool refines(const Partition& p_coarse, const Partition& p_fine);
/// Union of the blocks meeting x.
Subset saturate(const Partition& p, const Subset& x);
bool is_saturated(const Partition& p, const Subset& x);
/// Whether the two saturation operators commute (block criterion).
bool commute(const Partition& p1, const Partition& p2);
/// Every tuple of blocks, one per partition, has a common element.
bool independent(std::span<const Partition> ps);
/// Conditional version: inside each block B of `given`, blocks that each meet B
/// must jointly meet B.
bool cond_independent(std::span<const Partition> ps, const Partition& given);
/// Binary shorthand for P1 ⊥ P2 | P.
bool cond_independent(const Partition& p1, const Partition& p2, const Partition& given);

/// All set partitions of {0..n-1} in restricted-growth order.
std::vector<Partition> all_partitions(std::size_t n, std::size_t bound = 8);

/// Calls f on every subset of {0..n-1}; n must not exceed max_subset_universe.
void for_each_subset(std::size_t n, const std::function<void(const Subset&)>& f);

}  // namespace infalg

template <>
struct std::hash<infalg::Partition> {
  std::size_t operator()(const infalg::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto l : p.labels()) h = (h ^ l) * 1099511628211ULL;
    return h;
  }
};
