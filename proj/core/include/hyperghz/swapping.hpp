#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hyperghz/ghz.hpp"
#include "hyperghz/state.hpp"

namespace hyperghz {

/// Nine-photon network: three hyperentangled triples (1,4,5), (2,6,7),
/// (3,8,9), each prepared in the index-1, sign-(+,+) class. Subsystem order:
/// pol 1..9, then path 1..9 (2^18 amplitudes).
PureState build_network_state();

/// Six-photon GHZ state over owners 4..9 for one DOF, with the class
/// patterns obtained by doubling the three-photon patterns (each projected
/// photon's bit spreads to its two partners).
PureState make_six_photon_ghz(Kind dof, int index, int sign);

/// Project photons 1,2,3 (both DOFs) of the network onto the hyperentangled
/// class `label`; returns the branch probability and the renormalized
/// remote state of photons 4..9.
std::pair<double, PureState> project_123(const PureState& network, const HyperLabel& label);

struct SwapRow {
    HyperLabel label;
    double probability = 0.0;
    double remote_fidelity = 0.0;
    double dof_product_gap = 0.0;  // 1 - leading Schmidt weight between the two DOFs
};

struct SwapReport {
    std::vector<SwapRow> rows;
    bool all_ok = false;
};

/// Runs all 64 projections and checks uniform probability 1/64 (1e-12) and
/// remote fidelity 1 (1e-9) against the matching six-photon class pair.
SwapReport verify_swap_table();

/// CSV with header label,probability,remote_fidelity.
void write_swap_csv(std::ostream& os, const SwapReport& report);

}  // namespace hyperghz
