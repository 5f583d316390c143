#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hyperghz/cavity.hpp"
#include "hyperghz/ghz.hpp"
#include "hyperghz/state.hpp"

namespace hyperghz {

/// Terminal measurement outcomes of one analyzer run. Spin outcomes are
/// +1/-1 in their readout bases ({+,-} for spin 1; the primed basis for
/// spin 2 when the photon number is odd, {+,-} when it is even).
/// Photon outcomes are 0/1 in the fixed basis orders (R/L, path 1/2).
struct AnalysisRecord {
    int spin1 = +1;
    int spin2 = +1;
    std::vector<int> pol;
    std::vector<int> path;
};

std::string to_string(const AnalysisRecord& r);

/// The n-photon swap-stage contract as an explicit unitary on the
/// 2^(2n+1)-dimensional (photons x spin-1) space:
///   |Psi_i^p Phi_j^s>|+>  ->  |Psi_j^{-s} Phi_i^{-p}>|- if p==s else +>
///   |Psi_i^p Phi_j^s>|->  ->  |Psi_j^{-s} Phi_i^{-p}>|+ if p==s else ->
/// The minus-sector rule is the one induced by the underlying cavity pass;
/// the whole map is then an involution. Qubit order: pol 1..n, path 1..n,
/// spin.
const JointMap& stage1_contract_map(int n);

/// Applies the contract unitary. Requires spin 1 prepared in |+> within the
/// state's norm tolerance.
PureState stage1_swap(const PureState& state, std::span<const std::string> photons,
                      const std::string& spin1_owner);

/// Exploratory primitive-level stage 1: one ideal double-sided cavity pass
/// per photon, the photon's path qubit wired onto the cavity ports. Equals
/// the contract map up to a per-class sign (see the equivalence test).
PureState stage1_swap_composed(const PureState& state, std::span<const std::string> photons,
                               const std::string& spin1_owner);

/// Stage 2: wave plate then single-sided cavity reflection for each photon,
/// with spin 2 prepared in |+>. On the Hadamard-transformed GHZ states this
/// realizes the eight phase-readout mappings exactly.
PureState stage2_phase(const PureState& state, std::span<const std::string> photons,
                       const std::string& spin2_owner);

/// Spin-2 readout basis: primed for odd photon number, plain for even.
Basis spin2_basis(int n);

/// Total decoding map from a measurement record to the input class.
HyperLabel decode(const AnalysisRecord& record);

/// The decode table for n photons, keyed by
/// (spin1-bit << 2n+1) | (spin2-bit << 2n) | (pol bits << n) | path bits,
/// where spin bits are 0 for the + outcome. 256 entries for n = 3.
const std::vector<HyperLabel>& decode_table(int n);

struct HgsaResult {
    AnalysisRecord record;
    HyperLabel classification;
};

/// One sampled analyzer run over a state of n photons carrying polarization
/// and path qubits. Spins 1 and 2 are created internally in |+>.
/// `trace`, when set, receives one formatted line per pipeline stage.
HgsaResult run_hgsa(const PureState& input, std::uint64_t seed,
                    std::vector<std::string>* trace = nullptr);

struct HgsaBranch {
    AnalysisRecord record;
    HyperLabel classification;
    double probability;
};

/// Deterministic enumeration of every outcome branch with probability above
/// 1e-12. Branch probabilities sum to the input norm.
std::vector<HgsaBranch> run_hgsa_branches(const PureState& input);

/// Photon owners of a dual-DOF state, in subsystem order.
std::vector<std::string> photon_owners(const PureState& state);

}  // namespace hyperghz
