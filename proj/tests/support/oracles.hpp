#pragma once

// Test-only reference implementations. They deliberately take different
// routes from the library: union-find instead of BFS, pointwise definitions
// instead of block algebra, brute force instead of closure search.

#include <cstddef>
#include <vector>

#include "infalg/info_algebra.hpp"
#include "infalg/lattice.hpp"
#include "infalg/partition.hpp"

namespace oracle {

using infalg::Partition;
using infalg::Subset;

Partition meet(const Partition& a, const Partition& b);
Partition join(const Partition& a, const Partition& b);
/// Finer-or-equal test via pairs of points.
bool leq(const Partition& coarse, const Partition& fine);
Subset saturate(const Partition& p, const Subset& x);
/// σ1∘σ2 = σ2∘σ1 on every subset.
bool commute(const Partition& a, const Partition& b);
/// u ≡_P u' implies some v with u ≡_{P1∨P} v and u' ≡_{P2∨P} v.
bool cond_independent(const Partition& p1, const Partition& p2, const Partition& p);
/// Bell numbers from the Bell triangle.
std::size_t bell(std::size_t n);

/// Least upper bound by scanning all upper bounds.
std::size_t lattice_join(const infalg::Poset& p, std::size_t i, std::size_t j);
/// Nonempty down-closed join-closed subsets, by brute force over 2^m.
std::vector<Subset> ideals(const infalg::Semilattice& l);
/// Maximal proper ideals among ideals().
std::size_t maximal_ideal_count(const infalg::Semilattice& l);

/// Elements covered only by the null.
Subset atoms(const infalg::InfoAlgebra& a);
/// Meet in the information order by scanning lower bounds.
std::size_t info_meet(const infalg::InfoAlgebra& a, std::size_t x, std::size_t y);

}  // namespace oracle
