#pragma once

/// The surface catalog used by the CLI and the verification suites. Coordinate
/// patches:
///   thm53-i  : f(u,v) = (u, v, 0) in the E(1,1) model
///   thm53-ii : f(u,v) = (u, -u, v) in the E(1,1) model (classified for l1=l2)
///   thm54    : f(u,v) = (u, v, 0) in the E2tilde model
/// Invariant frame distributions in non-unimodular groups:
///   nonuni-e23, nonuni-e12, nonuni-e13

#include "liegauss/surfaces.hpp"

#include <string>
#include <vector>

namespace liegauss {

std::vector<std::string> catalog_ids();
bool is_catalog_patch_id(const std::string& id);
bool is_catalog_frame_id(const std::string& id);

/// Throws invalid_parameter_error for unknown ids or ids of the other kind.
ImmersedPatch catalog_patch(const std::string& id, double lambda1, double lambda2);
FrameSurfaceSpec catalog_frame_surface(const std::string& id, double xi, double eta);

} // namespace liegauss
