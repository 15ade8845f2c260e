#pragma once

// Extremal rays of pointed rational polyhedral cones {n : c . n >= 0}.

#include <istream>
#include <string>
#include <vector>

#include "diag/quartic_surface.hpp"

namespace diag {

using IntVector = std::vector<Integer>;

struct RationalCone {
  std::vector<IntVector> halfspaces;  // rows c with c . n >= 0
  std::size_t dimension() const { return halfspaces.empty() ? 0 : halfspaces.front().size(); }
};

/// Reads one integer row per line, whitespace separated, '#' comments.
RationalCone read_cone(std::istream& in);
RationalCone parse_cone(const std::string& text);

/// Double-description enumeration. Rays are primitive and sorted
/// lexicographically. Throws InvalidInput for empty or ragged input or a
/// zero row, Degenerate (naming a lineality direction) if not pointed.
std::vector<IntVector> extremal_rays(const RationalCone& cone);

struct MinForm {
  Integer value;
  IntVector ray;
};
/// Minimum of the intersection form (D.D) over the extremal rays (dimension 6).
MinForm min_self_intersection(const RationalCone& cone);
std::string to_string(const IntVector& v);

}  // namespace diag
