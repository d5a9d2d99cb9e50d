#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "infalg/lattice.hpp"
#include "infalg/partition.hpp"
#include "infalg/report.hpp"

namespace infalg {

/// Extensional ternary relation x ⊥ y | z over a finite join-semilattice.
class CIRelation {
 public:
  explicit CIRelation(Semilattice domain);
  /// All triples satisfying pred.
  static CIRelation from_predicate(Semilattice domain,
                                   const std::function<bool(std::size_t, std::size_t, std::size_t)>& pred);
  static CIRelation full(Semilattice domain);

  const Semilattice& domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }
  bool contains(std::size_t x, std::size_t y, std::size_t z) const { return bits_.test(index(x, y, z)); }
  void insert(std::size_t x, std::size_t y, std::size_t z) { bits_.set(index(x, y, z)); }
  void erase(std::size_t x, std::size_t y, std::size_t z) { bits_.reset(index(x, y, z)); }
  std::size_t count() const { return bits_.count(); }
  /// Triples in lexicographic order.
  std::vector<Triple> triples() const;

  bool operator==(const CIRelation& o) const { return bits_ == o.bits_; }
  /// Every triple of *this is in o (same domain size assumed).
  bool is_subset_of(const CIRelation& o) const { return bits_.is_subset_of(o.bits_); }

 private:
  std::size_t index(std::size_t x, std::size_t y, std::size_t z) const { return (x * size() + y) * size() + z; }
  Semilattice domain_;
  Subset bits_;
};

/// C1-C4.
Report check_qseparoid(const CIRelation& r);
/// C5, C6.
Report check_separoid(const CIRelation& r);
/// C7; not applicable when the domain is not a lattice.
Report check_strong_separoid(const CIRelation& r);
/// All of the above in order C1..C7.
Report check_all_axioms(const CIRelation& r);

/// (x ∨ z) ∧ (y ∨ z) = z. Needs a lattice.
CIRelation lattice_relation(const Semilattice& l);
/// x ∧ y <= z. Needs a lattice.
CIRelation dawid_relation(const Semilattice& l);

/// x ⊥ x | y implies x <= y; on lattices also compares with "⊥ implies the lattice relation".
Report check_basic(const CIRelation& r);

/// Pulls r2 back along f : D1 -> D2. Throws InvalidArgument naming a pair
/// whose join f does not preserve.
CIRelation pullback_relation(const Semilattice& d1, const std::vector<std::size_t>& f, const CIRelation& r2);

/// x ⊥ y | z iff parts[x] ⊥ parts[y] | parts[z] as partitions.
CIRelation relation_from_partitions(const Semilattice& d, const std::vector<Partition>& parts);

}  // namespace infalg
