#include "hyperghz/hgsg.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hyperghz/optics.hpp"

namespace hyperghz {

namespace {

const std::vector<std::string> kPhotons = {"A", "B", "C"};
const std::string kSpin1 = "1";
const std::string kSpin2 = "2";

// birth map on |pol, path, spin>: the fresh path qubit starts in |1>; the
// incoming beam direction is the backward port, the reflected output is
// collected as path 1 and the transmitted one as path 2.
JointMap birth_map(const DoubleSidedCoeffs& c) {
    // input path value p enters with direction ~p; output path = output direction
    JointMap scatter = physical_double_sided_map(c, /*path1_forward=*/true);
    // conjugate the input path bit: columns with path bit complemented
    JointMap m(3);
    for (std::size_t row = 0; row < 8; ++row)
        for (std::size_t col = 0; col < 8; ++col) {
            const std::size_t col_in = col ^ 0b010;  // flip the direction bit of the source
            m.at(row, col) = scatter.at(row, col_in);
        }
    return m;
}

}  // namespace

HyperLabel hgsg_herald_label(int spin1, int spin2) {
    // (-,-') -> Psi1- Phi1-, (-,+') -> Psi1+ Phi1+,
    // (+,+') -> Psi1+ Phi1-, (+,-') -> Psi1- Phi1+
    if (spin1 < 0) return {1, spin2 > 0 ? +1 : -1, 1, spin2 > 0 ? +1 : -1};
    return {1, spin2 > 0 ? +1 : -1, 1, spin2 > 0 ? -1 : +1};
}

PureState spatial_mode_birth(const PureState& state, const std::string& photon,
                             const std::string& spin1_owner, const InteractionMode& mode) {
    if (state.find(path(photon)))
        throw std::invalid_argument("spatial_mode_birth: photon " + photon + " already has a path");
    state.require(pol(photon));
    state.require(spin(spin1_owner));
    PureState with_path = tensor(state, PureState::basis_state({path(photon)}, 0));
    const SubsystemLabel targets[] = {pol(photon), path(photon), spin(spin1_owner)};
    return apply_joint(birth_map(mode.coeffs), targets, with_path);
}

PureState hgsg_state_after_cavity1(const InteractionMode& mode) {
    const double s = 1.0 / std::sqrt(2.0);
    PureState st = PureState::basis_state({pol("A"), pol("B"), pol("C")}, 0);  // |RRR>
    st = tensor(st, PureState::qubit(spin(kSpin1), s, s));
    st = tensor(st, PureState::qubit(spin(kSpin2), s, s));
    for (const auto& photon : kPhotons) st = spatial_mode_birth(st, photon, kSpin1, mode);
    // canonical order: pols, paths, spin 1, spin 2
    std::vector<SubsystemLabel> order;
    for (const auto& o : kPhotons) order.push_back(pol(o));
    for (const auto& o : kPhotons) order.push_back(path(o));
    order.push_back(spin(kSpin1));
    order.push_back(spin(kSpin2));
    return reordered(st, order);
}

GenerationResult run_hgsg(std::uint64_t seed, const InteractionMode& mode) {
    PureState st = hgsg_state_after_cavity1(mode);
    for (const auto& o : kPhotons) st = qwp(st, o);
    for (const auto& o : kPhotons) {
        st = wp(st, o);
        st = ideal_single_sided_interaction(st, o, kSpin2, SpinCoupling::UpCouplesL);
    }
    for (const auto& o : kPhotons) st = qwp1(st, o);

    const double s = 1.0 / std::sqrt(2.0);
    GenerationResult result;
    result.seed = seed;
    double total = 0.0;
    for (int b1 : {+1, -1})
        for (int b2 : {+1, -1}) {
            PureState spin1_state = PureState::qubit(spin(kSpin1), s, b1 * s);
            PureState spin2_state = PureState::qubit(spin(kSpin2), s, cx(0, b2 * s));
            const SubsystemLabel t1[] = {spin(kSpin1)};
            const SubsystemLabel t2[] = {spin(kSpin2)};
            auto [p1, rest1] = project(st, t1, spin1_state);
            auto [p2, rest2] = project(rest1, t2, spin2_state);
            GenerationBranch br;
            br.spin1 = b1;
            br.spin2 = b2;
            br.probability = p1 * p2;
            br.label = hgsg_herald_label(b1, b2);
            br.heralded_state = rest2;
            br.fidelity = br.probability > 0
                              ? rest2.fidelity(make_hyper_ghz(br.label, kPhotons))
                              : 0.0;
            total += br.probability;
            result.branches.push_back(std::move(br));
        }
    result.failure_probability = std::max(0.0, 1.0 - total);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    double x = uni(rng);
    result.sampled = -1;
    for (std::size_t i = 0; i < result.branches.size(); ++i) {
        if (x < result.branches[i].probability) {
            result.sampled = static_cast<int>(i);
            break;
        }
        x -= result.branches[i].probability;
    }
    return result;
}

}  // namespace hyperghz
