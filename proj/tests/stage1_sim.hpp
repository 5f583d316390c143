#pragma once

// Scattering simulation of the generator's first stage, projected on the
// spin-1 readout: the state-evolution route against which the closed-form
// fidelity/efficiency expressions are checked. The closed forms assume the
// balanced-condition substitution (rh, th) = (-t0, -r0); callers feed the
// same premise through the cavity map.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "hyperghz/ghz.hpp"
#include "hyperghz/hgsg.hpp"

namespace hyperghz::testing {

struct SimulatedStage1 {
    double F_plus, F_minus, E_plus, E_minus;
};

inline SimulatedStage1 simulate_stage1(const DoubleSidedCoeffs& c) {
    const std::vector<std::string> abc = {"A", "B", "C"};
    const double s = 1.0 / std::sqrt(2.0);
    PureState st = hgsg_state_after_cavity1(InteractionMode::with_coeffs(c));
    auto spin_pm = [&](const std::string& owner, int sign) {
        return PureState::qubit(spin(owner), s, sign * s);
    };
    auto branch = [&](int sign) {
        const SubsystemLabel t1[] = {spin("1")};
        auto [p, rest] = project(st, t1, spin_pm("1", sign));
        // |-> heralds (Psi1- Phi1- - Psi1+ Phi1+)/sqrt2,
        // |+> heralds (Psi1+ Phi1- - Psi1- Phi1+)/sqrt2, spin 2 still in |+>
        PureState first = (sign < 0) ? make_hyper_ghz({1, -1, 1, -1}, abc)
                                     : make_hyper_ghz({1, +1, 1, -1}, abc);
        PureState second = (sign < 0) ? make_hyper_ghz({1, +1, 1, +1}, abc)
                                      : make_hyper_ghz({1, -1, 1, +1}, abc);
        for (std::size_t i = 0; i < first.dimension(); ++i)
            first.amplitudes()[i] =
                (first.amplitudes()[i] - second.amplitudes()[i]) / std::sqrt(2.0);
        PureState target = tensor(first, spin_pm("2", +1));
        const double fid = std::sqrt(rest.fidelity(target));
        return std::make_pair(fid, 2.0 * p);
    };
    auto [fm, em] = branch(-1);
    auto [fp, ep] = branch(+1);
    return {fp, fm, ep, em};
}

}  // namespace hyperghz::testing
