#pragma once

#include <string>

#include "hyperghz/state.hpp"

namespace hyperghz {

/// 2x2 polarization maps of the passive elements.
JointMap qwp_map();   // R -> (R+L)/sqrt2, L -> (R-L)/sqrt2
JointMap qwp1_map();  // R -> (R-L)/sqrt2, L -> (R+L)/sqrt2
JointMap wp_map();    // R -> R, L -> i L

/// Quarter-wave-plate Hadamard on the photon's polarization.
PureState qwp(const PureState& state, const std::string& photon);
/// The second Hadamard variant.
PureState qwp1(const PureState& state, const std::string& photon);
/// pi/2 retarder on the L component.
PureState wp(const PureState& state, const std::string& photon);

/// Circular-basis polarizing beam splitter: R keeps its path, L toggles it.
PureState cpbs_route(const PureState& state, const std::string& photon);

}  // namespace hyperghz
