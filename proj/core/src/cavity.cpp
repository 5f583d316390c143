#include "hyperghz/cavity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace hyperghz {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr int kScanSteps = 100;  // per kappa

double wrap_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a + std::numbers::pi, two_pi);
    if (a < 0) a += two_pi;
    return a - std::numbers::pi;
}

double bisect(const std::function<double(double)>& f, double a, double b) {
    double fa = f(a);
    for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0) != (fm < 0)) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

DoubleSidedCoeffs double_sided_coeffs(const CavityParams& p) {
    p.validate();
    const cx i(0, 1);
    const cx dx = i * (p.omega_x - p.omega) + p.gamma / 2.0;
    const cx dc = i * (p.omega_c - p.omega) + p.kappa + p.kappa_s / 2.0;
    DoubleSidedCoeffs c;
    c.t_h = -p.kappa * dx / (dx * dc + p.g * p.g);
    c.r_h = 1.0 + c.t_h;
    c.r_0 = (i * (p.omega_c - p.omega) + p.kappa_s / 2.0) / dc;
    c.t_0 = -p.kappa / dc;
    return c;
}

SingleSidedCoeffs single_sided_coeffs(const CavityParams& p) {
    p.validate();
    const cx i(0, 1);
    const cx dx = i * (p.omega_x - p.omega) + p.gamma / 2.0;
    const cx dc = i * (p.omega_c - p.omega) + p.kappa / 2.0 + p.kappa_s / 2.0;
    SingleSidedCoeffs c;
    c.r_h_prime = 1.0 - p.kappa * dx / (dx * dc + p.g * p.g);
    // uncoupled limit (g = 0) of the coupled expression; the lossless cavity
    // then reflects everything, r0' = -1 at resonance
    c.r_0_prime = 1.0 - p.kappa / dc;
    return c;
}

double solve_balanced_detuning(const CavityParams& p) {
    p.validate();
    if (p.g <= 0) throw std::invalid_argument("solve_balanced_detuning: g must be > 0");
    auto f = [&](double w) {
        const auto c = double_sided_coeffs(p.at_omega(w));
        return std::abs(c.t_0) - std::abs(c.r_h);
    };
    const double hi = 5.0 * p.kappa;
    const double step = p.kappa / kScanSteps;
    double best = std::abs(f(0.0));
    double prev_w = 0.0;
    double prev_f = f(0.0);
    if (std::abs(prev_f) < kResidualTol) return 0.0;
    for (double w = step; w <= hi + 0.5 * step; w += step) {
        const double fw = f(w);
        best = std::min(best, std::abs(fw));
        if (std::abs(fw) < kResidualTol) return w;
        if ((prev_f < 0) != (fw < 0)) {
            const double root = bisect(f, prev_w, w);
            if (std::abs(f(root)) < kResidualTol) return root;
        }
        prev_w = w;
        prev_f = fw;
    }
    throw DetuningError("balanced detuning |t0|=|rh| has no root in [0, 5 kappa]; "
                        "smallest residual " + std::to_string(best), best);
}

namespace {

double phase_gap(const CavityParams& p, double w) {
    const auto c = single_sided_coeffs(p.at_omega(w));
    return wrap_angle(std::arg(c.r_0_prime) - std::arg(c.r_h_prime) - std::numbers::pi / 2.0);
}

}  // namespace

std::vector<double> solve_pi_half_detunings(const CavityParams& p) {
    p.validate();
    if (p.g <= 0) throw std::invalid_argument("solve_pi_half_detuning: g must be > 0");
    auto f = [&](double w) { return phase_gap(p, w); };
    const double lo = -5.0 * p.kappa, hi = 5.0 * p.kappa;
    const double step = p.kappa / kScanSteps;
    std::vector<double> roots;
    double prev_w = lo;
    double prev_f = f(lo);
    for (double w = lo + step; w <= hi + 0.5 * step; w += step) {
        const double fw = f(w);
        if (std::abs(fw) < kResidualTol) {
            roots.push_back(w);
        } else if (std::abs(fw - prev_f) < std::numbers::pi && (prev_f < 0) != (fw < 0)) {
            // a sign change that is not a wrap across the branch cut
            const double root = bisect(f, prev_w, w);
            if (std::abs(f(root)) < kResidualTol) roots.push_back(root);
        }
        prev_w = w;
        prev_f = fw;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double solve_pi_half_detuning(const CavityParams& p) {
    auto roots = solve_pi_half_detunings(p);
    if (roots.empty()) {
        // fallback: secant polish from +-kappa/2
        double best_res = std::numeric_limits<double>::infinity();
        for (double w0 : {p.kappa / 2.0, -p.kappa / 2.0}) {
            double a = w0, b = w0 + 1e-3 * p.kappa;
            for (int i = 0; i < 100; ++i) {
                const double fa = phase_gap(p, a), fb = phase_gap(p, b);
                if (fb == fa) break;
                const double c = b - fb * (b - a) / (fb - fa);
                a = b;
                b = c;
            }
            const double res = std::abs(phase_gap(p, b));
            best_res = std::min(best_res, res);
            if (res < kResidualTol) roots.push_back(b);
        }
        if (roots.empty())
            throw DetuningError("pi/2 phase difference not attainable in [-5, 5] kappa; "
                                "smallest residual " + std::to_string(best_res), best_res);
    }
    // prefer the root with the most balanced |r0'| vs |rh'| (best gate contrast)
    double best_w = roots.front();
    double best_ratio = -1.0;
    for (double w : roots) {
        const auto c = single_sided_coeffs(p.at_omega(w));
        const double a = std::abs(c.r_h_prime), b = std::abs(c.r_0_prime);
        const double ratio = (a > b ? b / a : a / b);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_w = w;
        }
    }
    return best_w;
}

JointMap ideal_double_sided_map(bool path1_forward) {
    return physical_double_sided_map({cx(1), cx(0), cx(0), cx(-1)}, path1_forward);
}

JointMap physical_double_sided_map(const DoubleSidedCoeffs& c, bool path1_forward) {
    // basis |pol, dir, spin>; dir bit 0 means "forward" when path1_forward.
    // A photon couples the spin when its circular polarization and propagation
    // direction give the s_z matching the spin projection: pol ^ dir ^ spin == 0.
    // Reflection flips polarization and direction, transmission keeps both.
    JointMap m(3);
    for (std::size_t src = 0; src < 8; ++src) {
        const int polb = static_cast<int>(src >> 2) & 1;
        const int dirb = static_cast<int>(src >> 1) & 1;
        const int spinb = static_cast<int>(src) & 1;
        const int dir = path1_forward ? dirb : (dirb ^ 1);
        const bool coupled = ((polb ^ dir ^ spinb) == 0);
        const cx r = coupled ? c.r_h : c.r_0;
        const cx t = coupled ? c.t_h : c.t_0;
        const std::size_t reflected = static_cast<std::size_t>(((polb ^ 1) << 2) | ((dirb ^ 1) << 1) | spinb);
        m.at(reflected, src) += r;
        m.at(src, src) += t;
    }
    return m;
}

JointMap ideal_single_sided_map(SpinCoupling coupling) {
    // basis |pol, spin>; all photons reflect with a polarization flip, the
    // uncoupled configuration picks up the extra pi/2.
    JointMap m(2);
    for (std::size_t src = 0; src < 4; ++src) {
        const int polb = static_cast<int>(src >> 1) & 1;
        const int spinb = static_cast<int>(src) & 1;
        const bool coupled = (coupling == SpinCoupling::UpCouplesR) ? (polb == spinb)
                                                                    : (polb != spinb);
        const std::size_t dst = static_cast<std::size_t>(((polb ^ 1) << 1) | spinb);
        m.at(dst, src) = coupled ? cx(1) : cx(0, 1);
    }
    return m;
}

PureState ideal_double_sided_interaction(const PureState& state, const std::string& photon,
                                         const SubsystemLabel& direction,
                                         const std::string& spin_owner) {
    const SubsystemLabel targets[] = {pol(photon), direction, spin(spin_owner)};
    return apply_joint(ideal_double_sided_map(), targets, state);
}

PureState physical_double_sided_interaction(const PureState& state, const std::string& photon,
                                            const SubsystemLabel& direction,
                                            const std::string& spin_owner,
                                            const DoubleSidedCoeffs& c) {
    const SubsystemLabel targets[] = {pol(photon), direction, spin(spin_owner)};
    return apply_joint(physical_double_sided_map(c), targets, state);
}

PureState ideal_single_sided_interaction(const PureState& state, const std::string& photon,
                                         const std::string& spin_owner, SpinCoupling coupling) {
    const SubsystemLabel targets[] = {pol(photon), spin(spin_owner)};
    return apply_joint(ideal_single_sided_map(coupling), targets, state);
}

}  // namespace hyperghz
