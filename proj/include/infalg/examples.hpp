#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "infalg/info_algebra.hpp"
#include "infalg/partition.hpp"

namespace infalg {

/// Default cap on carrier size for generated instances.
inline constexpr std::size_t default_max_carrier = 64;

/// Strings of length <= max_len over k letters plus a null; r·s is the longer
/// string when one is a prefix of the other and the null otherwise. Domains
/// are the lengths 0..max_len and ε_n truncates to n letters. The empty string
/// is named "1" and the null "0".
InfoAlgebra make_string_algebra(std::size_t alphabet_size, std::size_t max_len,
                                std::size_t max_carrier = default_max_carrier);

/// All subsets of the product of the frames, combined by intersection, with
/// one domain per set of variables (named "{1,2}", 1-based) extracting by
/// cylindrification. Every frame needs at least two values.
InfoAlgebra make_multivariate(const std::vector<std::size_t>& frames, std::size_t max_carrier = default_max_carrier);

/// Maps U -> Λ constant on the blocks of some family member, combined by
/// pointwise meet; ε_P takes the join over each block. Λ must be a
/// distributive lattice and the family join-closed.
InfoAlgebra make_lattice_valued(std::size_t universe, const std::vector<Partition>& family, const Semilattice& values,
                                std::size_t max_carrier = default_max_carrier);

/// Subsets of U combined by intersection, extracted by saturation. With no
/// explicit elements the carrier is every set saturated for some member of
/// the family. Explicit elements must contain U and the empty set and be
/// closed under intersection and every saturation.
InfoAlgebra make_set_algebra(std::size_t universe, const std::vector<Partition>& family,
                             const std::optional<std::vector<Subset>>& elements = std::nullopt,
                             std::vector<std::string> domain_names = {},
                             std::vector<std::string> point_names = {});

/// Seeded saturated-set algebra over a random join-closed family of partitions.
InfoAlgebra random_instance(std::uint64_t seed, std::size_t max_universe = 5);

// Bundled fixtures.
/// Two binary variables.
InfoAlgebra multivariate_fixture();
/// k = 2, L = 3.
InfoAlgebra string_fixture();
/// U = {0,1}, family {coarsest, finest}, values in a 3-chain.
InfoAlgebra lattice_valued_fixture();
/// One-letter string algebra of length 2; the carrier is a chain.
InfoAlgebra chain_carrier_fixture();
/// Set algebra on {0,1,2} with {{0,1},{2}}, {{0},{1,2}} and the finest partition.
InfoAlgebra noncommutative_fixture();
/// Distributive carrier whose extraction does not distribute over meets.
InfoAlgebra footnote_fixture();

struct NamedInstance {
  std::string name;
  InfoAlgebra algebra;
};
/// Every bundled fixture, in a fixed order.
std::vector<NamedInstance> bundled_fixtures();

}  // namespace infalg
