#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "infalg/embedding.hpp"
#include "infalg/examples.hpp"
#include "infalg/info_algebra.hpp"
#include "infalg/lattice.hpp"
#include "infalg/partition.hpp"
#include "infalg/report.hpp"
#include "infalg/separoid.hpp"

namespace infalg {

using json = nlohmann::json;

/// Unreadable or ill-formed input. `what()` carries the position when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LoadOptions {
  std::size_t max_carrier = default_max_carrier;
};

/// Parses text, reporting the byte offset of syntax errors.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

/// [[0,1],[2,3]] over a universe of n points.
Partition partition_from_json(const json& j, std::size_t n);
json partition_to_json(const Partition& p);

/// {"elements":[names], "leq":[[i,j],...]} or a builtin name such as "N5" or "chain:3".
Semilattice lattice_from_json(const json& j);
json lattice_to_json(const Semilattice& l);

/// {"triples":[[x,y,z],...]}; entries are indices or domain names.
CIRelation relation_from_json(const json& j, const Semilattice& domains);
json relation_to_json(const CIRelation& r);

/// Dispatches on "kind": string, multivariate, lattice_valued, set_algebra,
/// abstract or fixture.
InfoAlgebra instance_from_json(const json& j, const LoadOptions& opts = {});
InfoAlgebra load_instance(const std::string& path, const LoadOptions& opts = {});
/// Abstract form of any instance; loading it back gives identical tables.
json instance_to_json(const InfoAlgebra& a);

json check_to_json(const Check& c, bool timing = true);
json report_to_json(const Report& r, bool timing = true);
json embedding_to_json(const EmbeddingReport& e, bool timing = true);

/// FNV-1a over the compact dump of the abstract form, as 16 hex digits.
std::string instance_digest(const InfoAlgebra& a);

}  // namespace infalg
