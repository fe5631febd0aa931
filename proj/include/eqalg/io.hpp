#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "eqalg/bredon.hpp"
#include "eqalg/group.hpp"
#include "eqalg/houghton.hpp"
#include "eqalg/linalg.hpp"

namespace eqalg {

using Json = nlohmann::ordered_json;

namespace io {

/// "1" or "triv" for the trivial subgroup, "G" or "all" for the whole group,
/// "#k" for subgroup id k, otherwise generators "(0 1)(2 3);(0 2)".
SubgroupId parse_subgroup(const SubgroupLattice& L, const std::string& text);
/// "a..b" or "n" (meaning 0..n).
std::pair<std::size_t, std::size_t> parse_degrees(const std::string& text);

Json invariants(const std::vector<AbelianInvariants>& v);
Json subgroup(const SubgroupLattice& L, SubgroupId h);

/// {"cells":[[{"isotropy": id | generators, "boundary":[{"cell","coset","coeff"}]}]]}.
/// A coset is an index into G/H_j (cosets numbered by least element) or a cycle string.
GCWData gcw_from_json(const SubgroupLattice& L, const Json& j);

/// {"n":2,"prefix":[[[i,x],[j,y]],...],"m":[-1,1]}.
HoughtonElement houghton_from_json(const Json& j);
Json houghton_to_json(const EventualMap& h);
Json shape_to_json(const houghton::CentraliserShape& C);
Json gamma_to_json(const houghton::GammaGraph& G);

/// Parses a file, throwing InvalidInput on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace io
}  // namespace eqalg
