#include "hyperghz/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hyperghz {

namespace {

constexpr double kBranchCutoff = 1e-12;

const JointMap& basis_rotation(Basis basis) {
    static const JointMap comp = JointMap::identity(1);
    // rows are <b0|, <b1| so that the rotated state holds basis amplitudes
    static const JointMap pm = [] {
        JointMap m(1);
        const double s = 1.0 / std::sqrt(2.0);
        m.at(0, 0) = s;
        m.at(0, 1) = s;
        m.at(1, 0) = s;
        m.at(1, 1) = -s;
        return m;
    }();
    static const JointMap pmp = [] {
        JointMap m(1);
        const double s = 1.0 / std::sqrt(2.0);
        m.at(0, 0) = s;
        m.at(0, 1) = cx(0, -s);
        m.at(1, 0) = s;
        m.at(1, 1) = cx(0, s);
        return m;
    }();
    switch (basis) {
        case Basis::PlusMinus: return pm;
        case Basis::PlusMinusPrime: return pmp;
        default: return comp;
    }
}

JointMap inverse_rotation(Basis basis) {
    const JointMap& rot = basis_rotation(basis);
    JointMap inv(1);
    inv.at(0, 0) = std::conj(rot.at(0, 0));
    inv.at(0, 1) = std::conj(rot.at(1, 0));
    inv.at(1, 0) = std::conj(rot.at(0, 1));
    inv.at(1, 1) = std::conj(rot.at(1, 1));
    return inv;
}

}  // namespace

std::string to_string(const SubsystemLabel& label) {
    const char* k = label.kind == Kind::Polarization ? "pol"
                  : label.kind == Kind::Path         ? "path"
                                                     : "spin";
    return std::string(k) + "(" + label.owner + ")";
}

JointMap JointMap::identity(int k) {
    JointMap m(k);
    for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) = 1.0;
    return m;
}

JointMap JointMap::composed_with(const JointMap& first) const {
    if (arity != first.arity) throw std::invalid_argument("JointMap arity mismatch");
    JointMap out(arity);
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < d; ++k) {
            const cx a = at(r, k);
            if (a == cx{}) continue;
            for (std::size_t c = 0; c < d; ++c) out.at(r, c) += a * first.at(k, c);
        }
    return out;
}

bool JointMap::is_unitary(double tol) const {
    const std::size_t d = dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            cx acc = 0;
            for (std::size_t k = 0; k < d; ++k) acc += std::conj(at(k, r)) * at(k, c);
            const cx want = (r == c) ? cx(1) : cx(0);
            if (std::abs(acc - want) > tol) return false;
        }
    return true;
}

PureState::PureState(std::vector<SubsystemLabel> subsystems, std::vector<cx> amplitudes,
                     double norm_tolerance)
    : subs_(std::move(subsystems)), amps_(std::move(amplitudes)), norm_tol_(norm_tolerance) {
    if (amps_.size() != (std::size_t{1} << subs_.size()))
        throw std::invalid_argument("amplitude length must be 2^(subsystem count)");
    std::set<SubsystemLabel> seen(subs_.begin(), subs_.end());
    if (seen.size() != subs_.size())
        throw std::invalid_argument("duplicate subsystem label in state");
}

PureState PureState::basis_state(std::vector<SubsystemLabel> subsystems, std::size_t index) {
    std::vector<cx> amps(std::size_t{1} << subsystems.size());
    if (index >= amps.size()) throw std::out_of_range("basis index out of range");
    amps[index] = 1.0;
    return PureState(std::move(subsystems), std::move(amps));
}

PureState PureState::qubit(SubsystemLabel label, cx a0, cx a1) {
    return PureState({std::move(label)}, {a0, a1});
}

std::optional<std::size_t> PureState::find(const SubsystemLabel& label) const {
    for (std::size_t i = 0; i < subs_.size(); ++i)
        if (subs_[i] == label) return i;
    return std::nullopt;
}

std::size_t PureState::require(const SubsystemLabel& label) const {
    auto i = find(label);
    if (!i) throw std::invalid_argument("unknown subsystem " + to_string(label));
    return *i;
}

double PureState::norm_squared() const {
    double s = 0;
    for (const cx& a : amps_) s += std::norm(a);
    return s;
}

double PureState::norm() const { return std::sqrt(norm_squared()); }

PureState PureState::normalized() const {
    const double n = norm();
    if (n == 0) throw std::domain_error("cannot normalize a zero state");
    PureState out = *this;
    for (cx& a : out.amps_) a /= n;
    return out;
}

cx PureState::inner_product(const PureState& other) const {
    if (subs_ != other.subs_) throw std::invalid_argument("inner product needs identical subsystems");
    cx acc = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) acc += std::conj(amps_[i]) * other.amps_[i];
    return acc;
}

double PureState::fidelity(const PureState& other) const {
    const double n2 = norm_squared() * other.norm_squared();
    if (n2 == 0) return 0.0;
    return std::norm(inner_product(other)) / n2;
}

PureState tensor(const PureState& a, const PureState& b) {
    std::vector<SubsystemLabel> subs = a.subsystems();
    for (const auto& s : b.subsystems()) {
        if (a.find(s)) throw std::invalid_argument("tensor: duplicate subsystem " + to_string(s));
        subs.push_back(s);
    }
    std::vector<cx> amps(a.dimension() * b.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        const cx ai = a.amplitudes()[i];
        if (ai == cx{}) continue;
        for (std::size_t j = 0; j < b.dimension(); ++j)
            amps[i * b.dimension() + j] = ai * b.amplitudes()[j];
    }
    return PureState(std::move(subs), std::move(amps), a.norm_tolerance());
}

PureState apply_joint(const JointMap& map, std::span<const SubsystemLabel> targets,
                      const PureState& state) {
    const int k = map.arity;
    if (static_cast<std::size_t>(k) != targets.size())
        throw std::invalid_argument("apply_joint: map arity does not match target count");
    std::vector<int> bits(k);
    for (int t = 0; t < k; ++t) bits[t] = state.bit_position(state.require(targets[t]));

    const std::size_t dim = state.dimension();
    const std::size_t ld = std::size_t{1} << k;
    std::size_t mask = 0;
    for (int b : bits) mask |= (std::size_t{1} << b);

    // spread local index l onto the target bit positions (local bit 0 = last target)
    auto spread = [&](std::size_t l) {
        std::size_t idx = 0;
        for (int t = 0; t < k; ++t)
            if ((l >> (k - 1 - t)) & 1) idx |= (std::size_t{1} << bits[t]);
        return idx;
    };
    std::vector<std::size_t> offs(ld);
    for (std::size_t l = 0; l < ld; ++l) offs[l] = spread(l);

    std::vector<cx> out(dim);
    std::vector<cx> in_block(ld);
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (std::size_t l = 0; l < ld; ++l) in_block[l] = state.amplitudes()[base | offs[l]];
        for (std::size_t r = 0; r < ld; ++r) {
            cx acc = 0;
            for (std::size_t c = 0; c < ld; ++c) acc += map.at(r, c) * in_block[c];
            out[base | offs[r]] = acc;
        }
    }
    return PureState(state.subsystems(), std::move(out), state.norm_tolerance());
}

PureState apply_joint(const JointMap& map, const SubsystemLabel& target, const PureState& state) {
    const SubsystemLabel t[] = {target};
    return apply_joint(map, t, state);
}

MeasurementOutcome measure(const PureState& state, const SubsystemLabel& subsystem, Basis basis,
                           std::mt19937_64& rng) {
    if (state.norm_squared() <= 0) throw std::domain_error("measure: zero-norm state");
    PureState rotated = apply_joint(basis_rotation(basis), subsystem, state);

    const int bit = rotated.bit_position(rotated.require(subsystem));
    double p0 = 0;
    for (std::size_t i = 0; i < rotated.dimension(); ++i)
        if (!((i >> bit) & 1)) p0 += std::norm(rotated.amplitudes()[i]);

    const double total = rotated.norm_squared();
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const int result = (uni(rng) * total < p0) ? 0 : 1;
    const double prob = (result == 0) ? p0 : total - p0;

    std::vector<cx> post(rotated.dimension());
    if (prob > 0) {
        const double scale = 1.0 / std::sqrt(prob);
        for (std::size_t i = 0; i < rotated.dimension(); ++i)
            if (static_cast<int>((i >> bit) & 1) == result)
                post[i] = rotated.amplitudes()[i] * scale;
    }
    // rotate back so the collapsed subsystem is expressed in the computational basis
    PureState collapsed(rotated.subsystems(), std::move(post), rotated.norm_tolerance());
    collapsed = apply_joint(inverse_rotation(basis), subsystem, collapsed);
    return {subsystem, basis, result, prob, std::move(collapsed)};
}

MeasurementOutcome measure(const PureState& state, const SubsystemLabel& subsystem, Basis basis,
                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return measure(state, subsystem, basis, rng);
}

std::vector<OutcomeBranch> enumerate_outcomes(const PureState& state,
                                              std::span<const SubsystemLabel> subsystems,
                                              std::span<const Basis> bases) {
    if (subsystems.size() != bases.size())
        throw std::invalid_argument("enumerate_outcomes: one basis per subsystem");
    {
        std::set<SubsystemLabel> seen(subsystems.begin(), subsystems.end());
        if (seen.size() != subsystems.size())
            throw std::invalid_argument("enumerate_outcomes: subsystems must be distinct");
    }

    // the first step's probabilities carry the (possibly sub-unit) input
    // norm; later steps branch on renormalized states
    std::vector<OutcomeBranch> branches{{{}, 1.0, state}};
    if (subsystems.empty()) branches[0].probability = state.norm_squared();
    for (std::size_t s = 0; s < subsystems.size(); ++s) {
        std::vector<OutcomeBranch> next;
        for (auto& br : branches) {
            PureState rotated = apply_joint(basis_rotation(bases[s]), subsystems[s], br.post_state);
            const int bit = rotated.bit_position(rotated.require(subsystems[s]));
            for (int result = 0; result < 2; ++result) {
                double p = 0;
                for (std::size_t i = 0; i < rotated.dimension(); ++i)
                    if (static_cast<int>((i >> bit) & 1) == result)
                        p += std::norm(rotated.amplitudes()[i]);
                if (p <= kBranchCutoff) continue;
                std::vector<cx> post(rotated.dimension());
                const double scale = 1.0 / std::sqrt(p);
                for (std::size_t i = 0; i < rotated.dimension(); ++i)
                    if (static_cast<int>((i >> bit) & 1) == result)
                        post[i] = rotated.amplitudes()[i] * scale;
                PureState collapsed(rotated.subsystems(), std::move(post), rotated.norm_tolerance());
                collapsed = apply_joint(inverse_rotation(bases[s]), subsystems[s], collapsed);
                OutcomeBranch nb;
                nb.results = br.results;
                nb.results.push_back(result);
                nb.probability = br.probability * p;
                nb.post_state = std::move(collapsed);
                next.push_back(std::move(nb));
            }
        }
        branches = std::move(next);
    }
    return branches;
}

std::pair<double, PureState> project(const PureState& state,
                                     std::span<const SubsystemLabel> targets,
                                     const PureState& target) {
    if (targets.size() != target.num_subsystems())
        throw std::invalid_argument("project: target state must cover exactly the named subsystems");
    for (std::size_t i = 0; i < targets.size(); ++i)
        if (target.subsystems()[i] != targets[i])
            throw std::invalid_argument("project: target subsystem order mismatch");

    const std::size_t n = state.num_subsystems();
    std::vector<int> tbits(targets.size());
    std::vector<bool> is_target(n, false);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const std::size_t si = state.require(targets[t]);
        tbits[t] = state.bit_position(si);
        is_target[si] = true;
    }
    std::vector<SubsystemLabel> rest_subs;
    std::vector<int> rest_bits;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_target[i]) {
            rest_subs.push_back(state.subsystems()[i]);
            rest_bits.push_back(state.bit_position(i));
        }

    const int k = static_cast<int>(targets.size());
    const int r = static_cast<int>(rest_bits.size());
    std::vector<cx> out(std::size_t{1} << r);
    for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
        const cx a = state.amplitudes()[idx];
        if (a == cx{}) continue;
        std::size_t li = 0;
        for (int t = 0; t < k; ++t) li = (li << 1) | ((idx >> tbits[t]) & 1);
        std::size_t ri = 0;
        for (int t = 0; t < r; ++t) ri = (ri << 1) | ((idx >> rest_bits[t]) & 1);
        out[ri] += std::conj(target.amplitudes()[li]) * a;
    }
    double prob = 0;
    for (const cx& a : out) prob += std::norm(a);
    if (prob > 0) {
        const double scale = 1.0 / std::sqrt(prob);
        for (cx& a : out) a *= scale;
    }
    return {prob, PureState(std::move(rest_subs), std::move(out), state.norm_tolerance())};
}

PureState reordered(const PureState& state, std::span<const SubsystemLabel> new_order) {
    if (new_order.size() != state.num_subsystems())
        throw std::invalid_argument("reordered: order must list every subsystem");
    const std::size_t n = state.num_subsystems();
    std::vector<int> src_bits(n);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t si = state.require(new_order[i]);
        if (used[si]) throw std::invalid_argument("reordered: duplicate label in order");
        used[si] = true;
        src_bits[i] = state.bit_position(si);
    }
    std::vector<cx> out(state.dimension());
    for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
        const cx a = state.amplitudes()[idx];
        if (a == cx{}) continue;
        std::size_t t = 0;
        for (std::size_t i = 0; i < n; ++i) t = (t << 1) | ((idx >> src_bits[i]) & 1);
        out[t] = a;
    }
    return PureState(std::vector<SubsystemLabel>(new_order.begin(), new_order.end()),
                     std::move(out), state.norm_tolerance());
}

namespace {

std::string format_amplitude(const cx& a) {
    std::ostringstream os;
    os.precision(6);
    const bool re = std::abs(a.real()) > 1e-12;
    const bool im = std::abs(a.imag()) > 1e-12;
    if (re && im) {
        os << "(" << a.real() << (a.imag() >= 0 ? "+" : "") << a.imag() << "i)";
    } else if (im) {
        os << a.imag() << "i";
    } else {
        os << a.real();
    }
    return os.str();
}

std::string subsystem_symbol(const SubsystemLabel& label, int value) {
    switch (label.kind) {
        case Kind::Polarization: return value == 0 ? "R" : "L";
        case Kind::Path: {
            std::string owner = label.owner;
            for (char& c : owner) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return owner + (value == 0 ? "1" : "2");
        }
        default: return value == 0 ? "up" : "dn";
    }
}

}  // namespace

std::string format_ket(const PureState& state) {
    // group subsystems by owner in first-appearance order
    std::vector<std::string> owners;
    for (const auto& s : state.subsystems())
        if (std::find(owners.begin(), owners.end(), s.owner) == owners.end())
            owners.push_back(s.owner);

    std::ostringstream os;
    bool first_term = true;
    for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
        const cx a = state.amplitudes()[idx];
        if (std::abs(a) <= 1e-12) continue;
        if (!first_term) os << " + ";
        first_term = false;
        os << format_amplitude(a);
        for (const auto& owner : owners) {
            os << "|";
            bool first_sym = true;
            for (std::size_t i = 0; i < state.num_subsystems(); ++i) {
                const auto& s = state.subsystems()[i];
                if (s.owner != owner) continue;
                const int v = static_cast<int>((idx >> state.bit_position(i)) & 1);
                if (!first_sym) os << " ";
                first_sym = false;
                os << subsystem_symbol(s, v);
            }
            os << ">";
        }
    }
    if (first_term) os << "0";
    return os.str();
}

}  // namespace hyperghz
