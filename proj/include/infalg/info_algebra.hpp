#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infalg/lattice.hpp"
#include "infalg/report.hpp"
#include "infalg/subset.hpp"

namespace infalg {

using Table = std::vector<std::vector<std::size_t>>;

/// Finite domain-free information algebra given by explicit tables.
/// Elements and domains are referred to by index.
///
/// The information order is derived from the combination table:
/// a <= b iff a·b = b, so the unit is the bottom and the null the top.
class InfoAlgebra {
 public:
  /// Throws InvalidArgument on malformed tables (ragged rows, indices out of
  /// range, wrong number of extraction maps). Algebraic laws are not checked
  /// here; see verify_axioms.
  InfoAlgebra(std::vector<std::string> names, Table combine, std::size_t unit, std::size_t null,
              Semilattice domains, Table extract);

  std::size_t size() const { return names_.size(); }
  std::size_t domain_count() const { return domains_.size(); }
  std::size_t combine(std::size_t a, std::size_t b) const { return combine_[a][b]; }
  std::size_t extract(std::size_t x, std::size_t a) const { return extract_[x][a]; }
  std::size_t unit() const { return unit_; }
  std::size_t null() const { return null_; }
  bool leq(std::size_t a, std::size_t b) const { return combine_[a][b] == b; }
  const Semilattice& domains() const { return domains_; }
  const Table& combine_table() const { return combine_; }
  const Table& extract_table() const { return extract_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t a) const { return names_.at(a); }
  const std::string& domain_name(std::size_t x) const { return domains_.name(x); }
  std::size_t index_of(const std::string& name) const;
  std::size_t domain_index(const std::string& name) const { return domains_.poset().index_of(name); }

  /// Whether the combination table is a semilattice with the given unit and
  /// null, which makes the derived order a lattice.
  bool has_lattice_order() const { return order_.has_value(); }
  /// (Ψ; <=) as a lattice; throws if the semigroup laws fail.
  const Semilattice& order() const;
  /// Meet in the information order.
  std::size_t meet(std::size_t a, std::size_t b) const { return order().meet(a, b); }

  /// Image ε_x(Ψ).
  Subset image(std::size_t x) const;
  /// ↑a in the information order.
  Subset up_set(std::size_t a) const;

 private:
  std::vector<std::string> names_;
  Table combine_;
  std::size_t unit_;
  std::size_t null_;
  Semilattice domains_;
  Table extract_;
  std::optional<Semilattice> order_;
};

struct VerifyOptions {
  /// Demand a support for every element. Set algebras over all of 2^U fail this in general.
  bool require_e4 = true;
};

/// Semigroup laws, then E1-E5 and distinct domain images, in that order.
/// Later layers are reported not-applicable once an earlier layer fails.
Report verify_axioms(const InfoAlgebra& a, VerifyOptions opts = {});

/// The seven elementary facts about supports and extraction.
Report support_lemma_check(const InfoAlgebra& a);

/// Domains x with ε_x(ψ) = ψ.
Subset support_set(const InfoAlgebra& a, std::size_t psi);

struct Subalgebra {
  InfoAlgebra algebra;
  std::vector<std::size_t> element_map;  ///< sub element -> parent element
  std::vector<std::size_t> domain_map;   ///< sub domain -> parent domain
};

/// ε_x(Ψ) with the domains below x.
Subalgebra subalgebra_at(const InfoAlgebra& a, std::size_t x);

struct IdealCompletion {
  InfoAlgebra algebra;
  std::vector<Subset> ideals;              ///< members per ideal index
  std::vector<std::size_t> principal_of;   ///< ψ -> index of ↓ψ
};

/// Ideals of Ψ with I·J = {φ : φ <= φ1·φ2} and ε̄_x(I) = {φ : φ <= ε_x(ψ), ψ in I}.
IdealCompletion ideal_completion(const InfoAlgebra& a, std::size_t bound = 20);

/// ε̄_x(I) = ε̄_x(J) iff I ∩ ε_x(Ψ) = J ∩ ε_x(Ψ), plus ψ -> ↓ψ being an embedding.
Report ideal_extraction_lemma(const InfoAlgebra& a, std::size_t bound = 20);

struct CommutativityResult {
  bool commutative = false;
  /// When commutative: meet[x][y] = z with ε_x∘ε_y = ε_z.
  Table meet;
  /// The induced meet agrees with the meet of (D; <=), which is therefore a lattice.
  bool domain_lattice = false;
  std::vector<std::size_t> witness;
  std::string reason;
};
CommutativityResult is_commutative(const InfoAlgebra& a);

/// Checks that h (elements) and d (domains) form a homomorphism a -> b:
/// h preserves combination, unit and null, and h(ε_x ψ) = ε_{d(x)}(h ψ).
Report check_homomorphism(const InfoAlgebra& a, const InfoAlgebra& b, const std::vector<std::size_t>& h,
                          const std::vector<std::size_t>& d);

}  // namespace infalg
