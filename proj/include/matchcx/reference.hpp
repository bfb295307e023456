#pragma once

#include "matchcx/homology.hpp"

#include <map>
#include <optional>

namespace matchcx {

// Published nonzero groups H_d(M_n; Z) for 3 <= n <= 12 and H_d(M_n \ e; Z)
// for 2 <= n <= 11, keyed by degree. Every other degree is zero. nullopt
// outside the tabulated range.
std::optional<std::map<int, GroupDescriptor>> published_matching_homology(int n);
std::optional<std::map<int, GroupDescriptor>> published_deleted_edge_homology(int n);

}  // namespace matchcx
