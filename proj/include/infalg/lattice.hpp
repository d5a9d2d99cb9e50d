#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infalg/partition.hpp"
#include "infalg/subset.hpp"

namespace infalg {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

using Pair = std::array<std::size_t, 2>;
using Triple = std::array<std::size_t, 3>;

/// Explicit finite partial order on {0..m-1}.
class Poset {
 public:
  /// Reflexive-transitive closure of the given pairs (i <= j). Throws on a cycle.
  static Poset from_relation(std::size_t m, const std::vector<Pair>& pairs, std::vector<std::string> names = {});
  /// Full relation as a matrix; validated, not closed.
  static Poset from_matrix(std::vector<std::vector<bool>> leq, std::vector<std::string> names = {});

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool lt(std::size_t i, std::size_t j) const { return i != j && leq_[i][j]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  /// Index of a named element, or npos.
  std::size_t index_of(const std::string& name) const;
  /// Covering pairs (i < j with nothing strictly between).
  std::vector<Pair> covers() const;

 private:
  Poset(std::vector<std::vector<bool>> leq, std::vector<std::string> names);
  std::vector<std::vector<bool>> leq_;
  std::vector<std::string> names_;
};

/// First pair without a least upper bound, if any.
std::optional<Pair> check_join_semilattice(const Poset& p);

/// Finite join-semilattice with join and (where defined) meet tables.
/// It is a lattice iff it has a bottom element.
class Semilattice {
 public:
  /// Throws InvalidArgument (naming the offending pair) if some pair lacks a join.
  explicit Semilattice(Poset p);

  std::size_t size() const { return poset_.size(); }
  const Poset& poset() const { return poset_; }
  bool leq(std::size_t i, std::size_t j) const { return poset_.leq(i, j); }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i][j]; }
  /// npos when i and j have no common lower bound.
  std::size_t meet_or_npos(std::size_t i, std::size_t j) const { return meet_[i][j]; }
  /// Throws InvalidArgument when undefined.
  std::size_t meet(std::size_t i, std::size_t j) const;
  bool is_lattice() const { return bottom_ != npos; }
  std::size_t top() const { return top_; }
  std::size_t bottom() const;
  const std::string& name(std::size_t i) const { return poset_.name(i); }

  /// Join of a set; the bottom for the empty set (throws if there is none).
  std::size_t join_all(const Subset& s) const;
  /// Meet of a set; the top for the empty set. npos if undefined.
  std::size_t meet_all(const Subset& s) const;
  Subset up_set(std::size_t i) const;
  Subset down_set(std::size_t i) const;

 private:
  Poset poset_;
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::vector<std::size_t>> meet_;
  std::size_t top_ = npos;
  std::size_t bottom_ = npos;
};

/// Lattice predicates. Each returns the first violating triple (x,y,z) in
/// lexicographic order, or nullopt. They require is_lattice().
std::optional<Triple> modularity_witness(const Semilattice& l);
std::optional<Triple> distributivity_witness(const Semilattice& l);
inline bool is_modular(const Semilattice& l) { return !modularity_witness(l); }
inline bool is_distributive(const Semilattice& l) { return !distributivity_witness(l); }

/// The complement map if the lattice is Boolean.
std::optional<std::vector<std::size_t>> boolean_complements(const Semilattice& l);
inline bool is_boolean(const Semilattice& l) { return boolean_complements(l).has_value(); }

/// Elements other than the top that are not the meet of two elements both different from them.
Subset meet_irreducibles(const Semilattice& l);

struct OrderIdeal {
  Subset members;
  bool proper = false;
  bool prime = false;
  bool maximal = false;
  bool principal = false;
  std::size_t generator = npos;
};

/// All nonempty, downward- and join-closed subsets, found by closure traversal.
/// Primality needs meets; on non-lattices the prime flag stays false.
std::vector<OrderIdeal> enumerate_ideals(const Semilattice& l, std::size_t bound = 20);
/// Smallest ideal containing s (s nonempty).
Subset ideal_closure(const Semilattice& l, const Subset& s);

// Named lattices used by tests, fixtures and the CLI.
Semilattice chain_lattice(std::size_t n);
/// Subsets of {0..k-1} under inclusion; element index = bitmask. Names use
/// `offset` as the first variable label, e.g. offset 1 gives "{1,2}".
Semilattice powerset_lattice(std::size_t k, std::size_t offset = 0);
/// Pentagon with elements 0, a, b, c, 1 and 0 < a < c < 1, 0 < b < 1.
Semilattice n5_lattice();
/// Diamond with elements 0, a, b, c, 1.
Semilattice m3_lattice();
/// k pairwise incomparable elements plus a top; not a lattice for k >= 2.
Semilattice antichain_with_top(std::size_t k);
/// Partitions of {0..n-1}, coarser below finer.
Semilattice partition_lattice(std::size_t n);
Semilattice partition_lattice(const std::vector<Partition>& family);
/// Family of subsets of a 3-set closed under union and intersection, seeded.
Semilattice random_closure_lattice(std::uint64_t seed);
/// Looks up "N5", "M3", "chain:n", "powerset:k", "antichain:k", "partitions:n".
Semilattice builtin_lattice(const std::string& spec);

}  // namespace infalg
