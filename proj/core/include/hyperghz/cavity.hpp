#pragma once

#include <stdexcept>
#include <vector>

#include "hyperghz/state.hpp"

namespace hyperghz {

/// Physical parameters of one spin-cavity unit, all rates and frequencies in
/// units of the cavity decay rate kappa. `omega` is the probe frequency in
/// the frame where `omega_c` sits (default 0); `omega_x` is the exciton
/// transition frequency in the same frame (default 0 = resonant with the
/// cavity).
struct CavityParams {
    double g = 0.0;
    double kappa = 1.0;
    double kappa_s = 0.0;
    double gamma = 0.1;
    double omega = 0.0;
    double omega_c = 0.0;
    double omega_x = 0.0;

    void validate() const {
        if (g < 0) throw std::invalid_argument("cavity: g must be >= 0");
        if (kappa <= 0) throw std::invalid_argument("cavity: kappa must be > 0");
        if (kappa_s < 0) throw std::invalid_argument("cavity: kappa_s must be >= 0");
        if (gamma <= 0) throw std::invalid_argument("cavity: gamma must be > 0");
    }

    CavityParams at_omega(double w) const {
        CavityParams p = *this;
        p.omega = w;
        return p;
    }
};

/// Transfer amplitudes of the double-sided cavity: hot (coupled) reflection
/// and transmission, cold (uncoupled) reflection and transmission.
struct DoubleSidedCoeffs {
    cx r_h, t_h, r_0, t_0;
};

/// Reflection amplitudes of the single-sided cavity for the coupled and
/// uncoupled spin configurations.
struct SingleSidedCoeffs {
    cx r_h_prime, r_0_prime;
};

DoubleSidedCoeffs double_sided_coeffs(const CavityParams& p);
SingleSidedCoeffs single_sided_coeffs(const CavityParams& p);

/// Thrown when a detuning condition has no solution in the search bracket.
struct DetuningError : std::runtime_error {
    double best_residual;
    DetuningError(const std::string& what, double residual)
        : std::runtime_error(what), best_residual(residual) {}
};

/// Smallest non-negative probe detuning with |t0(w)| = |rh(w)|, searched on
/// [0, 5 kappa] at resolution kappa/100 and refined by bisection.
/// Residual below 1e-9 or DetuningError.
double solve_balanced_detuning(const CavityParams& p);

/// Probe detuning where arg(r0') - arg(rh') = pi/2 (mod 2pi) within 1e-9,
/// searched on [-5 kappa, 5 kappa]. When several detunings realize the
/// phase, returns the one with the most balanced reflection magnitudes
/// (the best operating point for the phase-shift gate).
double solve_pi_half_detuning(const CavityParams& p);

/// All pi/2-phase detunings in the bracket, ascending.
std::vector<double> solve_pi_half_detunings(const CavityParams& p);

/// Which spin state couples the R-polarized photon at the reference port.
/// The published phase-gate rules correspond to UpCouplesR; the mirrored
/// orientation realizes the phase gate used inside the analyzer's second
/// stage.
enum class SpinCoupling { UpCouplesR, UpCouplesL };

/// 8x8 unitary on (polarization, direction, spin) for the ideal double-sided
/// cavity pass: coupled combinations reflect with a polarization and
/// direction flip, uncoupled ones transmit with a pi phase. `path1_forward`
/// selects which direction value the port subsystem's basis state 0 denotes.
JointMap ideal_double_sided_map(bool path1_forward = true);

/// Non-unitary scattering version: coupled components scatter with (r_h
/// reflected, t_h transmitted), uncoupled with (r_0, t_0). Norm is not
/// restored; the lost weight is the failure probability.
JointMap physical_double_sided_map(const DoubleSidedCoeffs& c, bool path1_forward = true);

/// 4x4 unitary on (polarization, spin) for the ideal single-sided cavity
/// reflection: every photon reflects with a polarization flip; the uncoupled
/// configuration picks up an extra pi/2 phase.
JointMap ideal_single_sided_map(SpinCoupling coupling = SpinCoupling::UpCouplesR);

PureState ideal_double_sided_interaction(const PureState& state, const std::string& photon,
                                         const SubsystemLabel& direction,
                                         const std::string& spin_owner);
PureState physical_double_sided_interaction(const PureState& state, const std::string& photon,
                                            const SubsystemLabel& direction,
                                            const std::string& spin_owner,
                                            const DoubleSidedCoeffs& c);
PureState ideal_single_sided_interaction(const PureState& state, const std::string& photon,
                                         const std::string& spin_owner,
                                         SpinCoupling coupling = SpinCoupling::UpCouplesR);

/// Ideal truth-table evolution or physical scattering with a coefficient set.
struct InteractionMode {
    bool physical = false;
    DoubleSidedCoeffs coeffs{cx(1), cx(0), cx(0), cx(-1)};

    static InteractionMode ideal() { return {}; }
    static InteractionMode with_coeffs(const DoubleSidedCoeffs& c) { return {true, c}; }
};

}  // namespace hyperghz
