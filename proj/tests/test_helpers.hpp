#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "hyperghz/state.hpp"

namespace hyperghz::testing {

inline bool close(const cx& a, const cx& b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

inline double max_amp_diff(const PureState& a, const PureState& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    return worst;
}

/// max |a - e^{i theta} b| with theta aligned on the largest amplitude of b
inline double max_amp_diff_up_to_phase(const PureState& a, const PureState& b) {
    std::size_t ref = 0;
    double best = 0;
    for (std::size_t i = 0; i < b.dimension(); ++i)
        if (std::abs(b.amplitudes()[i]) > best) {
            best = std::abs(b.amplitudes()[i]);
            ref = i;
        }
    if (best == 0) return max_amp_diff(a, b);
    const cx phase = a.amplitudes()[ref] / b.amplitudes()[ref];
    const cx unit = (std::abs(phase) > 0) ? phase / std::abs(phase) : cx(1);
    double worst = 0;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        worst = std::max(worst, std::abs(a.amplitudes()[i] - unit * b.amplitudes()[i]));
    return worst;
}

inline PureState random_state(std::vector<SubsystemLabel> subs, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    std::vector<cx> amps(std::size_t{1} << subs.size());
    for (auto& a : amps) a = cx(gauss(rng), gauss(rng));
    PureState st(std::move(subs), std::move(amps));
    return st.normalized();
}

}  // namespace hyperghz::testing
