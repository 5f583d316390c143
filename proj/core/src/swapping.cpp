#include "hyperghz/swapping.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace hyperghz {

namespace {

// largest Schmidt weight of the polarization|path bipartition of a
// normalized 12-qubit remote state, via power iteration on M M^dagger with
// M[pol][path] the reshaped amplitude matrix
double leading_schmidt_weight(const PureState& st) {
    const std::size_t d = 64;
    // generic deterministic start; a uniform one is orthogonal to the
    // minus-sign class states
    std::vector<cx> v(d);
    double vn = 0;
    for (std::size_t p = 0; p < d; ++p) {
        v[p] = cx(std::cos(0.73 * double(p) + 0.31), std::sin(1.37 * double(p) + 1.13));
        vn += std::norm(v[p]);
    }
    for (auto& x : v) x /= std::sqrt(vn);
    std::vector<cx> mv(d), w(d);
    const auto& a = st.amplitudes();
    for (int it = 0; it < 60; ++it) {
        // w = M^dagger v ; mv = M w
        for (std::size_t q = 0; q < d; ++q) {
            cx acc = 0;
            for (std::size_t p = 0; p < d; ++p) acc += std::conj(a[p * d + q]) * v[p];
            w[q] = acc;
        }
        for (std::size_t p = 0; p < d; ++p) {
            cx acc = 0;
            for (std::size_t q = 0; q < d; ++q) acc += a[p * d + q] * w[q];
            mv[p] = acc;
        }
        double n = 0;
        for (const cx& x : mv) n += std::norm(x);
        n = std::sqrt(n);
        if (n == 0) return 0.0;
        for (std::size_t p = 0; p < d; ++p) v[p] = mv[p] / n;
    }
    // Rayleigh quotient of M M^dagger at v
    for (std::size_t q = 0; q < d; ++q) {
        cx acc = 0;
        for (std::size_t p = 0; p < d; ++p) acc += std::conj(a[p * d + q]) * v[p];
        w[q] = acc;
    }
    double s = 0;
    for (const cx& x : w) s += std::norm(x);
    return s;
}

}  // namespace

PureState build_network_state() {
    const std::array<std::array<int, 3>, 3> triples = {{{1, 4, 5}, {2, 6, 7}, {3, 8, 9}}};
    auto make_triple = [](const std::array<int, 3>& t) {
        const std::vector<std::string> owners = {std::to_string(t[0]), std::to_string(t[1]),
                                                 std::to_string(t[2])};
        return make_hyper_ghz({1, +1, 1, +1}, owners);
    };
    PureState acc = make_triple(triples[0]);
    acc = tensor(acc, make_triple(triples[1]));
    acc = tensor(acc, make_triple(triples[2]));
    std::vector<SubsystemLabel> order;
    for (int i = 1; i <= 9; ++i) order.push_back(pol(std::to_string(i)));
    for (int i = 1; i <= 9; ++i) order.push_back(path(std::to_string(i)));
    return reordered(acc, order);
}

PureState make_six_photon_ghz(Kind dof, int index, int sign) {
    if (index < 1 || index > 4) throw std::out_of_range("six-photon class index must be in [1,4]");
    if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
    const auto reps3 = ghz_class_representatives(3);
    const std::uint32_t rep3 = reps3[index - 1];
    std::uint32_t rep6 = 0;
    for (int b = 2; b >= 0; --b) {
        const std::uint32_t bit = (rep3 >> b) & 1;
        rep6 = (rep6 << 2) | (bit * 3);  // each projected photon's bit doubles
    }
    std::vector<SubsystemLabel> subs;
    for (int i = 4; i <= 9; ++i) subs.push_back({dof, std::to_string(i)});
    std::vector<cx> amps(64);
    const double s = 1.0 / std::sqrt(2.0);
    amps[rep6] = s;
    amps[~rep6 & 63u] = sign * s;
    return PureState(std::move(subs), std::move(amps));
}

std::pair<double, PureState> project_123(const PureState& network, const HyperLabel& label) {
    const std::vector<std::string> owners = {"1", "2", "3"};
    PureState target = make_hyper_ghz(label, owners);
    std::vector<SubsystemLabel> targets;
    for (const auto& o : owners) targets.push_back(pol(o));
    for (const auto& o : owners) targets.push_back(path(o));
    return project(network, targets, target);
}

SwapReport verify_swap_table() {
    SwapReport report;
    report.all_ok = true;
    PureState net = build_network_state();
    for (int i = 1; i <= 4; ++i)
        for (int p : {+1, -1})
            for (int j = 1; j <= 4; ++j)
                for (int s : {+1, -1}) {
                    SwapRow row;
                    row.label = {i, p, j, s};
                    auto [prob, remote] = project_123(net, row.label);
                    row.probability = prob;
                    PureState expected = tensor(make_six_photon_ghz(Kind::Polarization, i, p),
                                                make_six_photon_ghz(Kind::Path, j, s));
                    row.remote_fidelity = remote.fidelity(expected);
                    row.dof_product_gap = 1.0 - leading_schmidt_weight(remote);
                    if (std::abs(row.probability - 1.0 / 64.0) > 1e-12 ||
                        std::abs(row.remote_fidelity - 1.0) > 1e-9)
                        report.all_ok = false;
                    report.rows.push_back(row);
                }
    return report;
}

void write_swap_csv(std::ostream& os, const SwapReport& report) {
    os << "label,probability,remote_fidelity\n";
    char buf[64];
    for (const auto& row : report.rows) {
        os << to_string(row.label);
        std::snprintf(buf, sizeof buf, ",%.9g", row.probability);
        os << buf;
        std::snprintf(buf, sizeof buf, ",%.9f", row.remote_fidelity);
        os << buf << "\n";
    }
}

}  // namespace hyperghz
