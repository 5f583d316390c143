#include "hyperghz/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace hyperghz {

namespace {

double abs2(const cx& z) { return std::norm(z); }

}  // namespace

std::pair<double, double> fidelity_double(const DoubleSidedCoeffs& c) {
    const cx r = c.r_0, t = c.t_0;
    const cx a_minus = r * r * r + t * t * t;
    const cx b_minus = r * r * t + t * t * r;
    const cx a_plus = r * r * r - t * t * t;
    const cx b_plus = r * r * t - t * t * r;
    const double den_minus = std::sqrt(abs2(a_minus) + 3.0 * abs2(b_minus));
    const double den_plus = std::sqrt(abs2(a_plus) + 3.0 * abs2(b_plus));
    if (den_minus == 0.0 && den_plus == 0.0)
        throw std::domain_error("fidelity_double: degenerate coefficients");
    // a vanishing denominator means that herald never fires (its efficiency
    // is zero); report 0 for the undefined conditional fidelity
    const double f_plus = den_plus == 0.0 ? 0.0 : std::abs(a_plus) / den_plus;
    const double f_minus = den_minus == 0.0 ? 0.0 : std::abs(a_minus) / den_minus;
    return {f_plus, f_minus};
}

std::pair<double, double> efficiency_double(const DoubleSidedCoeffs& c) {
    const cx r = c.r_0, t = c.t_0;
    const double e_minus = abs2(r * r * r + t * t * t) + 3.0 * abs2(r * r * t + t * t * r);
    const double e_plus = abs2(r * r * r - t * t * t) + 3.0 * abs2(r * r * t - t * t * r);
    return {e_plus, e_minus};
}

double fidelity_single(const SingleSidedCoeffs& c) {
    const cx rh = c.r_h_prime, r0 = c.r_0_prime;
    const cx num = rh * (rh * rh - 3.0 * r0 * r0) + cx(0, 1) * (r0 * r0 - 3.0 * rh * rh) * r0;
    const double bracket = abs2(r0 * r0 * r0) + abs2(rh * rh * rh) +
                           3.0 * (abs2(r0 * r0 * rh) + abs2(rh * rh * r0));
    if (bracket == 0.0) throw std::domain_error("fidelity_single: degenerate coefficients");
    return std::abs(num) / (2.0 * std::sqrt(2.0 * bracket));
}

double efficiency_single(const SingleSidedCoeffs& c) {
    const cx rh = c.r_h_prime, r0 = c.r_0_prime;
    return (abs2(r0 * r0 * r0) + abs2(rh * rh * rh) +
            3.0 * (abs2(r0 * r0 * rh) + abs2(rh * rh * r0))) / 8.0;
}

double decoherence_factor(double t, double coherence_time) {
    if (t < 0) throw std::invalid_argument("decoherence_factor: t must be >= 0");
    if (coherence_time <= 0) throw std::invalid_argument("decoherence_factor: T must be > 0");
    return (1.0 + std::exp(-5.0 * t / coherence_time)) / 2.0;
}

std::vector<SweepPoint> sweep(std::span<const double> ks_ratios, const GRange& g_range,
                              double gamma) {
    if (g_range.steps < 2) throw std::invalid_argument("sweep: need at least 2 g steps");
    if (g_range.max < g_range.min) throw std::invalid_argument("sweep: empty g range");
    std::vector<SweepPoint> rows;
    for (double ks : ks_ratios) {
        for (int step = 0; step < g_range.steps; ++step) {
            SweepPoint pt;
            pt.ks_over_k = ks;
            pt.g_over_ktot =
                g_range.min + step * (g_range.max - g_range.min) / (g_range.steps - 1);
            CavityParams p;
            p.kappa_s = ks;
            p.gamma = gamma;
            p.g = pt.g_over_ktot * (p.kappa + p.kappa_s);
            try {
                pt.omega_star_double = solve_balanced_detuning(p);
                const auto cd = double_sided_coeffs(p.at_omega(pt.omega_star_double));
                std::tie(pt.F_plus, pt.F_minus) = fidelity_double(cd);
                std::tie(pt.E_plus, pt.E_minus) = efficiency_double(cd);
            } catch (const DetuningError&) {
                pt.status = "no_balanced_root";
            }
            try {
                pt.omega_star_single = solve_pi_half_detuning(p);
                const auto cs = single_sided_coeffs(p.at_omega(pt.omega_star_single));
                pt.F_prime = fidelity_single(cs);
                pt.E_prime = efficiency_single(cs);
            } catch (const DetuningError&) {
                pt.status = (pt.status == "ok") ? "no_pi_half_root" : pt.status + "+no_pi_half_root";
            }
            rows.push_back(std::move(pt));
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepPoint> points) {
    os << "ks_over_k,g_over_ktot,omega_star_double,omega_star_single,"
          "F_plus,F_minus,E_plus,E_minus,F_prime,E_prime,status\n";
    char buf[256];
    for (const auto& pt : points) {
        std::snprintf(buf, sizeof buf,
                      "%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%s\n",
                      pt.ks_over_k, pt.g_over_ktot, pt.omega_star_double, pt.omega_star_single,
                      pt.F_plus, pt.F_minus, pt.E_plus, pt.E_minus, pt.F_prime, pt.E_prime,
                      pt.status.c_str());
        os << buf;
    }
}

}  // namespace hyperghz
