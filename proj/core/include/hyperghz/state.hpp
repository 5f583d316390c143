#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace hyperghz {

using cx = std::complex<double>;

/// Kind of two-level subsystem carried by a photon or a stationary spin.
enum class Kind : std::uint8_t { Polarization, Path, Spin };

/// A named two-level subsystem. Basis order is fixed globally:
/// polarization (R, L), path (1, 2), spin (up, down); basis value 0 is
/// always the first element.
struct SubsystemLabel {
    Kind kind;
    std::string owner;

    friend bool operator==(const SubsystemLabel&, const SubsystemLabel&) = default;
    friend auto operator<=>(const SubsystemLabel&, const SubsystemLabel&) = default;
};

inline SubsystemLabel pol(std::string owner) { return {Kind::Polarization, std::move(owner)}; }
inline SubsystemLabel path(std::string owner) { return {Kind::Path, std::move(owner)}; }
inline SubsystemLabel spin(std::string owner) { return {Kind::Spin, std::move(owner)}; }

std::string to_string(const SubsystemLabel& label);

/// Dense complex linear map on `arity` adjacent qubits, row-major 2^k x 2^k.
/// Need not be unitary; physical scattering maps are contractions.
struct JointMap {
    int arity = 0;
    std::vector<cx> m;

    JointMap() = default;
    explicit JointMap(int k) : arity(k), m(std::size_t{1} << (2 * k)) {}

    std::size_t dim() const { return std::size_t{1} << arity; }
    cx& at(std::size_t row, std::size_t col) { return m[row * dim() + col]; }
    const cx& at(std::size_t row, std::size_t col) const { return m[row * dim() + col]; }

    static JointMap identity(int k);
    JointMap composed_with(const JointMap& first) const;  // this * first
    bool is_unitary(double tol = 1e-12) const;
};

/// Measurement basis for a single subsystem.
/// PlusMinus      : {(0 + 1)/sqrt2, (0 - 1)/sqrt2}
/// PlusMinusPrime : {(0 + i1)/sqrt2, (0 - i1)/sqrt2}
enum class Basis : std::uint8_t { Computational, PlusMinus, PlusMinusPrime };

/// Normalized (or, after lossy scattering, sub-normalized) state vector over
/// an ordered list of labeled two-level subsystems. The first subsystem is
/// the most significant bit of the amplitude index. Immutable by convention:
/// all operations return new states.
class PureState {
public:
    /// The empty tensor factor: no subsystems, single amplitude 1.
    PureState() : amps_{cx(1)}, norm_tol_(1e-10) {}
    PureState(std::vector<SubsystemLabel> subsystems, std::vector<cx> amplitudes,
              double norm_tolerance = 1e-10);

    /// Basis ket |index> over the given subsystems.
    static PureState basis_state(std::vector<SubsystemLabel> subsystems, std::size_t index);
    /// Single qubit a0|0> + a1|1>.
    static PureState qubit(SubsystemLabel label, cx a0, cx a1);

    std::size_t num_subsystems() const { return subs_.size(); }
    std::size_t dimension() const { return amps_.size(); }
    const std::vector<SubsystemLabel>& subsystems() const { return subs_; }
    const std::vector<cx>& amplitudes() const { return amps_; }
    std::vector<cx>& amplitudes() { return amps_; }
    double norm_tolerance() const { return norm_tol_; }

    std::optional<std::size_t> find(const SubsystemLabel& label) const;
    /// Index of `label` or throws std::invalid_argument.
    std::size_t require(const SubsystemLabel& label) const;
    /// Bit position of subsystem i in an amplitude index (first = MSB).
    int bit_position(std::size_t subsystem_index) const {
        return static_cast<int>(subs_.size() - 1 - subsystem_index);
    }

    double norm_squared() const;
    double norm() const;
    PureState normalized() const;

    cx inner_product(const PureState& other) const;  // <this|other>, same subsystem order
    /// |<a|b>|^2 with normalization, the global-phase-insensitive equality test.
    double fidelity(const PureState& other) const;

private:
    std::vector<SubsystemLabel> subs_;
    std::vector<cx> amps_;
    double norm_tol_;
};

/// Tensor product; subsystem order is a's followed by b's.
/// Throws std::invalid_argument on duplicate labels.
PureState tensor(const PureState& a, const PureState& b);

/// Apply `map` to the named subsystems (identity elsewhere).
PureState apply_joint(const JointMap& map, std::span<const SubsystemLabel> targets,
                      const PureState& state);
PureState apply_joint(const JointMap& map, const SubsystemLabel& target, const PureState& state);

struct MeasurementOutcome {
    SubsystemLabel subsystem;
    Basis basis;
    int result;          // 0 or 1, index into the basis
    double probability;  // squared norm of the projected component
    PureState post_state;
};

/// Projective measurement of one subsystem, sampled with Born probabilities
/// from the given generator. The measured subsystem stays in the state,
/// collapsed onto the outcome.
MeasurementOutcome measure(const PureState& state, const SubsystemLabel& subsystem,
                           Basis basis, std::mt19937_64& rng);
MeasurementOutcome measure(const PureState& state, const SubsystemLabel& subsystem,
                           Basis basis, std::uint64_t seed);

struct OutcomeBranch {
    std::vector<int> results;  // one per measured subsystem
    double probability;
    PureState post_state;
};

/// Deterministic enumeration of all measurement branches with probability
/// above 1e-12, measuring the listed subsystems in the listed bases.
/// Branch probabilities sum to the squared norm of the input.
std::vector<OutcomeBranch> enumerate_outcomes(const PureState& state,
                                              std::span<const SubsystemLabel> subsystems,
                                              std::span<const Basis> bases);

/// Project the named subsystems onto `target` (a state over exactly those
/// labels, in that order). Returns the branch probability and the
/// renormalized remainder state over the remaining subsystems.
std::pair<double, PureState> project(const PureState& state,
                                     std::span<const SubsystemLabel> targets,
                                     const PureState& target);

/// Same state with subsystems permuted into `new_order`.
PureState reordered(const PureState& state, std::span<const SubsystemLabel> new_order);

/// Ket pretty-printer, e.g. "0.5|R a1>|R b1>|up>".
std::string format_ket(const PureState& state);

}  // namespace hyperghz
