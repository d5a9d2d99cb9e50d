#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "infalg/info_algebra.hpp"
#include "infalg/partition.hpp"
#include "infalg/report.hpp"
#include "infalg/separoid.hpp"
#include "infalg/subset.hpp"

namespace infalg {

enum class GeneratingKind { full, atoms, meet_irreducibles, custom };

std::string_view to_string(GeneratingKind k);

struct GeneratingSet {
  GeneratingKind kind = GeneratingKind::custom;
  Subset members;  ///< over the carrier; never contains the null
};

/// Ψ without the null, the atoms, or the meet-irreducibles of (Ψ; <=).
GeneratingSet make_generating_set(const InfoAlgebra& a, GeneratingKind kind);

/// ψ = inf(↑ψ ∩ X) for every ψ != 0, cross-checked against the separation
/// criterion. Throws InvalidArgument if X contains the null.
Check is_order_generating(const InfoAlgebra& a, const Subset& x);
/// ε_x(α) >= ε_x(ψ) implies some γ in X with ε_x(γ) = ε_x(α) and γ >= ψ.
/// Witness (α, ψ, x).
Check is_strongly_order_generating(const InfoAlgebra& a, const Subset& x);
/// ε_x(ψ) = inf(↑ε_x(ψ) ∩ X_x) for all ψ, with infima taken in Ψ.
Check is_locally_order_generating(const InfoAlgebra& a, std::size_t x, const Subset& xs);

/// A map of an algebra into the subsets of a universe U plus a partition of U per domain.
struct EmbeddingReport {
  std::string kind;
  std::vector<std::string> universe_labels;
  std::vector<Subset> f;      ///< per element
  std::vector<Partition> g;   ///< per domain
  Report checks;
  /// Why the construction stopped early, empty otherwise.
  std::string reason;

  bool is_embedding() const { return reason.empty() && checks.passed(); }
};

/// f(ψ) = ↑ψ ∩ X and g(x) = P_x with α ≡_x β iff ε_x(α) = ε_x(β).
EmbeddingReport build_embedding(const InfoAlgebra& a, const GeneratingSet& x);

/// Laws shared by every representation: f injective and preserving ·, 1, 0;
/// g injective, join-preserving and order-reflecting; f(ε_x ψ) = σ_{g(x)}(f ψ).
Report verify_embedding_laws(const InfoAlgebra& a, const std::vector<Subset>& f, const std::vector<Partition>& g);

enum class AtomClass { not_atomic, atomic, atomistic, completely_atomistic };
std::string_view to_string(AtomClass c);

struct AtomSet {
  Subset atoms;                  ///< At(Ψ)
  std::vector<Subset> relative;  ///< At_x(Ψ) per domain
  AtomClass classification = AtomClass::not_atomic;
  /// Element at which the next stronger class fails (empty when completely atomistic).
  std::vector<std::size_t> witness;
};

AtomSet compute_atoms(const InfoAlgebra& a);
/// At(ψ) = ↑ψ ∩ At(Ψ).
Subset atoms_above(const InfoAlgebra& a, const AtomSet& at, std::size_t psi);
/// At_x(ψ) = ↑ε_x(ψ) ∩ At_x(Ψ).
Subset relative_atoms_above(const InfoAlgebra& a, const AtomSet& at, std::size_t x, std::size_t psi);
/// The five facts linking atoms and relative atoms. Needs an atomic algebra.
Report relative_atom_lemma_check(const InfoAlgebra& a);

struct LocalClassification {
  bool locally_atomic = false;
  bool locally_atomistic = false;
  bool locally_completely_atomistic = false;
  std::vector<std::size_t> witness;  ///< (x, ψ) or (x) for the first failing clause
};
LocalClassification classify_locally_atomic(const InfoAlgebra& a);

struct TupleSystem {
  std::vector<Subset> sets;                     ///< X_x per domain
  std::vector<std::vector<std::size_t>> maps;   ///< consistent maps, a[x] per domain
};

struct TupleEmbedding {
  TupleSystem system;
  EmbeddingReport report;
};

/// At_x(Ψ) for every domain.
std::vector<Subset> relative_atom_sets(const InfoAlgebra& a);
/// ε_x(X) for every domain.
std::vector<Subset> projected_sets(const InfoAlgebra& a, const Subset& x);
/// Verifies the tuple-system properties, enumerates consistent maps and checks
/// the induced map into subsets of consistent maps.
TupleEmbedding build_tuple_system(const InfoAlgebra& a, const std::vector<Subset>& sets,
                                  std::size_t max_maps = 4096);

/// Lattice facts of a Boolean carrier plus the dual algebra.
Report boolean_checks(const InfoAlgebra& a);
/// The dual algebra on the same carrier (combination = meet, unit and null swapped).
/// Requires a Boolean carrier.
InfoAlgebra dual_algebra(const InfoAlgebra& a);
/// ψ -> At(ψ) onto the subsets of the atoms.
EmbeddingReport finite_boolean_representation(const InfoAlgebra& a);

/// Reason string used when extraction fails to distribute over meets.
inline constexpr const char* quantifier_meet_reason = "quantifier does not distribute over meet";

/// Preconditions for the distributive representation; reason empty when they hold.
Report distributive_preconditions(const InfoAlgebra& a, std::string& reason);
/// ψ -> ↑ψ ∩ M(Ψ) into the up-sets of the meet-irreducibles.
EmbeddingReport finite_distributive_representation(const InfoAlgebra& a);
/// Prime ideals as points: X_{ε_x φ} = σ_x(X_φ) and the two lifting lemmas.
Report finite_prime_ideal_check(const InfoAlgebra& a, std::size_t bound = 20);

/// x ⊥ y | z iff g(x) ⊥ g(y) | g(z). Throws if the report is not an embedding.
CIRelation induced_ci(const InfoAlgebra& a, const EmbeddingReport& emb);
/// Same relation read off g alone; only needs one partition per domain. Used
/// where f and g exist but g fails to preserve joins.
CIRelation partition_relation(const InfoAlgebra& a, const EmbeddingReport& emb);
/// Combination and extraction properties for each triple of r.
Report verify_comb_extr_properties(const InfoAlgebra& a, const CIRelation& r);
/// (i) externally supplied relations satisfying C1-C4 and both properties lie
/// inside the relation induced by Ψ∖{0}; (ii) all induced relations coincide.
Report ci_uniqueness_check(const InfoAlgebra& a, const std::vector<CIRelation>& induced,
                           const std::vector<CIRelation>& external = {});
/// Gluing of ≡_z-equivalent elements of X, computed from extractions directly.
/// On commutative algebras also the x ∧ y form.
Report element_level_ci_check(const InfoAlgebra& a, const Subset& x, const CIRelation& r);
/// Same for a family of per-domain sets.
Report element_level_ci_check(const InfoAlgebra& a, const std::vector<Subset>& sets, const CIRelation& r);

}  // namespace infalg
