#include "hyperghz/hgsa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hyperghz/optics.hpp"

namespace hyperghz {

namespace {

std::vector<std::string> generic_owners(int n) {
    std::vector<std::string> owners;
    for (int i = 0; i < n; ++i) owners.push_back(std::string(1, static_cast<char>('A' + i)));
    return owners;
}

// photon part of the contract: (i,p,j,s) -> (j,-s,i,-p), spin flips to |->
// on a |+> input exactly when p == s.
struct ContractImage {
    HyperLabel out;
    bool spin_minus_on_plus_input;
};

ContractImage contract_image(const HyperLabel& in) {
    ContractImage im;
    im.out = {in.spat_index, -in.spat_sign, in.pol_index, -in.pol_sign};
    im.spin_minus_on_plus_input = (in.pol_sign == in.spat_sign);
    return im;
}

JointMap build_stage1_contract(int n) {
    const auto owners = generic_owners(n);
    const int idx_count = 1 << (n - 1);
    const std::size_t pho_dim = std::size_t{1} << (2 * n);
    JointMap u(2 * n + 1);

    const double s = 1.0 / std::sqrt(2.0);
    const cx plus[2] = {s, s};
    const cx minus[2] = {s, -s};

    for (int i = 1; i <= idx_count; ++i)
        for (int p : {+1, -1})
            for (int j = 1; j <= idx_count; ++j)
                for (int sg : {+1, -1}) {
                    const HyperLabel in{i, p, j, sg};
                    const auto im = contract_image(in);
                    const PureState vin = make_hyper_ghz(in, owners);
                    const PureState vout = make_hyper_ghz(im.out, owners);
                    // two spin sectors: |+> input and |-> input
                    for (int b = 0; b < 2; ++b) {
                        const cx* bin = (b == 0) ? plus : minus;
                        const bool to_minus = (b == 0) ? im.spin_minus_on_plus_input
                                                       : !im.spin_minus_on_plus_input;
                        const cx* bout = to_minus ? minus : plus;
                        for (std::size_t r = 0; r < pho_dim; ++r) {
                            const cx vr = vout.amplitudes()[r];
                            if (vr == cx{}) continue;
                            for (std::size_t c = 0; c < pho_dim; ++c) {
                                const cx vc = vin.amplitudes()[c];
                                if (vc == cx{}) continue;
                                for (int rb = 0; rb < 2; ++rb)
                                    for (int cb = 0; cb < 2; ++cb)
                                        u.at((r << 1) | rb, (c << 1) | cb) +=
                                            vr * bout[rb] * std::conj(vc) * std::conj(bin[cb]);
                            }
                        }
                    }
                }
    return u;
}

std::vector<SubsystemLabel> stage1_targets(std::span<const std::string> photons,
                                           const std::string& spin1_owner) {
    std::vector<SubsystemLabel> targets;
    for (const auto& o : photons) targets.push_back(pol(o));
    for (const auto& o : photons) targets.push_back(path(o));
    targets.push_back(spin(spin1_owner));
    return targets;
}

void require_spin_plus(const PureState& state, const std::string& owner) {
    // overlap of the reduced spin with |->: project and compare against tolerance
    const SubsystemLabel s = spin(owner);
    PureState minus = PureState::qubit(s, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0));
    const SubsystemLabel targets[] = {s};
    const auto [p_minus, rest] = project(state, targets, minus);
    (void)rest;
    const double tol = std::max(state.norm_tolerance(), 1e-12);
    if (p_minus > tol)
        throw std::invalid_argument("spin " + owner + " must be prepared in |+> (found |-> weight " +
                                    std::to_string(p_minus) + ")");
}

}  // namespace

std::string to_string(const AnalysisRecord& r) {
    std::ostringstream os;
    const bool primed = (r.pol.size() % 2) == 1;
    os << "spin1=" << (r.spin1 > 0 ? "+" : "-");
    os << " spin2=" << (r.spin2 > 0 ? "+" : "-") << (primed ? "'" : "");
    os << " pol=";
    for (int v : r.pol) os << (v == 0 ? 'R' : 'L');
    os << " path=";
    for (int v : r.path) os << (v == 0 ? '1' : '2');
    return os.str();
}

const JointMap& stage1_contract_map(int n) {
    static std::map<int, JointMap> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_stage1_contract(n)).first;
    return it->second;
}

PureState stage1_swap(const PureState& state, std::span<const std::string> photons,
                      const std::string& spin1_owner) {
    require_spin_plus(state, spin1_owner);
    const auto targets = stage1_targets(photons, spin1_owner);
    return apply_joint(stage1_contract_map(static_cast<int>(photons.size())), targets, state);
}

PureState stage1_swap_composed(const PureState& state, std::span<const std::string> photons,
                               const std::string& spin1_owner) {
    require_spin_plus(state, spin1_owner);
    // ports: the path qubit enters the cavity with path 1 mapped to the
    // backward direction, so basis value 0 is not the "forward" port
    PureState out = state;
    for (const auto& photon : photons) {
        const SubsystemLabel targets[] = {pol(photon), path(photon), spin(spin1_owner)};
        out = apply_joint(ideal_double_sided_map(/*path1_forward=*/false), targets, out);
    }
    return out;
}

PureState stage2_phase(const PureState& state, std::span<const std::string> photons,
                       const std::string& spin2_owner) {
    require_spin_plus(state, spin2_owner);
    PureState out = state;
    for (const auto& photon : photons) {
        out = wp(out, photon);
        out = ideal_single_sided_interaction(out, photon, spin2_owner, SpinCoupling::UpCouplesL);
    }
    return out;
}

Basis spin2_basis(int n) {
    return (n % 2 == 1) ? Basis::PlusMinusPrime : Basis::PlusMinus;
}

namespace {

// outcome of spin 2 heralding the Hadamard-form sign +, by photon count mod 4
int psi_plus_outcome(int n) {
    switch (n % 4) {
        case 3: return +1;  // |+'>
        case 1: return -1;  // |-'>
        case 2: return -1;  // |->
        default: return +1; // |+>
    }
}

HyperLabel decode_rule(const AnalysisRecord& r) {
    const int n = static_cast<int>(r.pol.size());
    std::uint32_t polbits = 0, pathbits = 0;
    for (int v : r.pol) polbits = (polbits << 1) | static_cast<std::uint32_t>(v);
    for (int v : r.path) pathbits = (pathbits << 1) | static_cast<std::uint32_t>(v);
    HyperLabel label;
    label.spat_index = ghz_pattern_index(n, polbits);   // stage 1 interchanged the DOFs
    label.pol_index = ghz_pattern_index(n, pathbits);
    // spin 2 reads the post-swap polarization phase, which is the negated
    // initial spatial sign; spin 1 says whether the two initial signs agreed
    const int post_pol_sign = (r.spin2 == psi_plus_outcome(n)) ? +1 : -1;
    label.spat_sign = -post_pol_sign;
    label.pol_sign = (r.spin1 < 0) ? label.spat_sign : -label.spat_sign;
    return label;
}

}  // namespace

const std::vector<HyperLabel>& decode_table(int n) {
    static std::map<int, std::vector<HyperLabel>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<HyperLabel> table(std::size_t{1} << (2 * n + 2));
        for (std::size_t key = 0; key < table.size(); ++key) {
            AnalysisRecord r;
            r.spin1 = ((key >> (2 * n + 1)) & 1) ? -1 : +1;
            r.spin2 = ((key >> (2 * n)) & 1) ? -1 : +1;
            for (int b = n - 1; b >= 0; --b) r.pol.push_back(static_cast<int>((key >> (n + b)) & 1));
            for (int b = n - 1; b >= 0; --b) r.path.push_back(static_cast<int>((key >> b) & 1));
            table[key] = decode_rule(r);
        }
        it = cache.emplace(n, std::move(table)).first;
    }
    return it->second;
}

HyperLabel decode(const AnalysisRecord& record) {
    const int n = static_cast<int>(record.pol.size());
    if (record.path.size() != record.pol.size())
        throw std::invalid_argument("decode: record needs one path outcome per photon");
    std::size_t pb = 0;
    for (int v : record.pol) pb = (pb << 1) | static_cast<std::size_t>(v);
    std::size_t qb = 0;
    for (int v : record.path) qb = (qb << 1) | static_cast<std::size_t>(v);
    std::size_t key = (pb << n) | qb;
    key |= std::size_t{record.spin1 < 0 ? 1u : 0u} << (2 * n + 1);
    key |= std::size_t{record.spin2 < 0 ? 1u : 0u} << (2 * n);
    return decode_table(n)[key];
}

std::vector<std::string> photon_owners(const PureState& state) {
    std::vector<std::string> owners;
    for (const auto& s : state.subsystems())
        if (s.kind == Kind::Polarization) owners.push_back(s.owner);
    for (const auto& o : owners)
        if (!state.find(path(o)))
            throw std::invalid_argument("photon " + o + " is missing its path qubit");
    return owners;
}

namespace {

struct PipelineEnd {
    PureState state;       // after both stages and final Hadamards
    std::string spin1_owner, spin2_owner;
};

PipelineEnd run_pipeline(const PureState& input, std::vector<std::string>* trace) {
    const auto owners = photon_owners(input);
    const std::string s1 = "1", s2 = "2";
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

    PureState st = tensor(input, PureState::qubit(spin(s1), inv_sqrt2, inv_sqrt2));
    if (trace) trace->push_back("input + spin1 |+>: " + format_ket(st));

    st = stage1_swap(st, owners, s1);
    if (trace) trace->push_back("after swap stage: " + format_ket(st));

    for (const auto& o : owners) st = qwp(st, o);
    if (trace) trace->push_back("after QWPs: " + format_ket(st));

    st = tensor(st, PureState::qubit(spin(s2), inv_sqrt2, inv_sqrt2));
    st = stage2_phase(st, owners, s2);
    if (trace) trace->push_back("after phase stage: " + format_ket(st));

    for (const auto& o : owners) st = qwp(st, o);
    if (trace) trace->push_back("after final Hadamards: " + format_ket(st));
    return {std::move(st), s1, s2};
}

}  // namespace

HgsaResult run_hgsa(const PureState& input, std::uint64_t seed, std::vector<std::string>* trace) {
    const auto owners = photon_owners(input);
    const int n = static_cast<int>(owners.size());
    auto end = run_pipeline(input, trace);

    std::mt19937_64 rng(seed);
    AnalysisRecord rec;
    auto o1 = measure(end.state, spin(end.spin1_owner), Basis::PlusMinus, rng);
    rec.spin1 = (o1.result == 0) ? +1 : -1;
    auto o2 = measure(o1.post_state, spin(end.spin2_owner), spin2_basis(n), rng);
    rec.spin2 = (o2.result == 0) ? +1 : -1;
    PureState st = o2.post_state;
    for (const auto& o : owners) {
        auto m = measure(st, pol(o), Basis::Computational, rng);
        rec.pol.push_back(m.result);
        st = m.post_state;
    }
    for (const auto& o : owners) {
        auto m = measure(st, path(o), Basis::Computational, rng);
        rec.path.push_back(m.result);
        st = m.post_state;
    }
    if (trace) trace->push_back("record: " + to_string(rec));
    return {rec, decode(rec)};
}

std::vector<HgsaBranch> run_hgsa_branches(const PureState& input) {
    const auto owners = photon_owners(input);
    const int n = static_cast<int>(owners.size());
    auto end = run_pipeline(input, nullptr);

    std::vector<SubsystemLabel> meas;
    std::vector<Basis> bases;
    meas.push_back(spin(end.spin1_owner));
    bases.push_back(Basis::PlusMinus);
    meas.push_back(spin(end.spin2_owner));
    bases.push_back(spin2_basis(n));
    for (const auto& o : owners) {
        meas.push_back(pol(o));
        bases.push_back(Basis::Computational);
    }
    for (const auto& o : owners) {
        meas.push_back(path(o));
        bases.push_back(Basis::Computational);
    }

    std::vector<HgsaBranch> out;
    for (auto& br : enumerate_outcomes(end.state, meas, bases)) {
        AnalysisRecord rec;
        rec.spin1 = (br.results[0] == 0) ? +1 : -1;
        rec.spin2 = (br.results[1] == 0) ? +1 : -1;
        for (int i = 0; i < n; ++i) rec.pol.push_back(br.results[2 + i]);
        for (int i = 0; i < n; ++i) rec.path.push_back(br.results[2 + n + i]);
        out.push_back({rec, decode(rec), br.probability});
    }
    return out;
}

}  // namespace hyperghz
