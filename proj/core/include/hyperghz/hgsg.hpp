#pragma once

#include <cstdint>
#include <vector>

#include "hyperghz/cavity.hpp"
#include "hyperghz/ghz.hpp"
#include "hyperghz/state.hpp"

namespace hyperghz {

/// One heralded branch of the generator: both spin outcomes, its exact
/// probability, the (renormalized) photonic state it heralds, the class it
/// should be per the herald table, and the conditional fidelity against it.
struct GenerationBranch {
    int spin1 = +1;
    int spin2 = +1;  // primed basis
    double probability = 0.0;
    PureState heralded_state;
    HyperLabel label;
    double fidelity = 0.0;
};

struct GenerationResult {
    std::vector<GenerationBranch> branches;  // four herald outcomes
    double failure_probability = 0.0;        // norm lost to scattering (physical mode)
    int sampled = -1;                        // index into branches, or -1 for failure
    std::uint64_t seed = 0;
};

/// Herald table: spin outcomes -> generated class (indices are always 1).
HyperLabel hgsg_herald_label(int spin1, int spin2);

/// Sends one photon through the double-sided cavity from a fixed input port,
/// creating its path qubit: the reflected component exits into path 1 with
/// its polarization flipped, the transmitted one into path 2.
PureState spatial_mode_birth(const PureState& state, const std::string& photon,
                             const std::string& spin1_owner, const InteractionMode& mode);

/// State of the full generator register (photons A,B,C with both DOFs,
/// spins 1 and 2) right after the three cavity-1 passes.
PureState hgsg_state_after_cavity1(const InteractionMode& mode);

/// Full generator run: three R-polarized photons through cavity 1, QWPs,
/// WP + cavity 2, QWP1, then both spin readouts. Exact branch probabilities
/// are always computed; `seed` only picks the sampled outcome.
GenerationResult run_hgsg(std::uint64_t seed, const InteractionMode& mode);

}  // namespace hyperghz
