#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperghz/cavity.hpp"

namespace hyperghz {

/// Heralded-state fidelities of the double-sided swap stage under the
/// balanced condition, from the cold coefficients:
///   F- = |r0^3 + t0^3| / sqrt(|r0^3 + t0^3|^2 + 3 |r0^2 t0 + t0^2 r0|^2)
/// and F+ with the minus combinations. Returns (F+, F-).
std::pair<double, double> fidelity_double(const DoubleSidedCoeffs& c);

/// Matching success probabilities, normalized so the ideal limit is 1:
///   E-+ = |r0^3 +- t0^3|^2 + 3 |r0^2 t0 +- t0^2 r0|^2. Returns (E+, E-).
std::pair<double, double> efficiency_double(const DoubleSidedCoeffs& c);

/// Phase-readout fidelity of the single-sided stage.
double fidelity_single(const SingleSidedCoeffs& c);
double efficiency_single(const SingleSidedCoeffs& c);

/// Spin-dephasing factor [1 + exp(-5 t / T)] / 2 for photon spacing t and
/// spin coherence time T.
double decoherence_factor(double t, double coherence_time);

struct GRange {
    double min = 0.1;
    double max = 3.0;
    int steps = 30;
};

struct SweepPoint {
    double ks_over_k = 0.0;
    double g_over_ktot = 0.0;
    double omega_star_double = 0.0;
    double omega_star_single = 0.0;
    double F_plus = 0.0, F_minus = 0.0;
    double E_plus = 0.0, E_minus = 0.0;
    double F_prime = 0.0, E_prime = 0.0;
    std::string status = "ok";
};

/// Fidelity/efficiency sweep over side-leakage ratios and coupling
/// strengths; each point solves both detuning conditions and evaluates all
/// six metrics. Points with an unsolvable condition are emitted with a
/// non-"ok" status instead of being dropped. Rows come out in (ks, g)
/// row-major order.
std::vector<SweepPoint> sweep(std::span<const double> ks_ratios, const GRange& g_range,
                              double gamma);

/// CSV with the fixed header
/// ks_over_k,g_over_ktot,omega_star_double,omega_star_single,F_plus,F_minus,
/// E_plus,E_minus,F_prime,E_prime,status and 9-significant-digit floats.
void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points);

}  // namespace hyperghz
