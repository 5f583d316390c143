#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperghz/state.hpp"

namespace hyperghz {

/// Decoded hyperentangled GHZ class: polarization pattern index and sign,
/// spatial pattern index and sign. Signs are +1 / -1.
struct HyperLabel {
    int pol_index = 1;
    int pol_sign = +1;
    int spat_index = 1;
    int spat_sign = +1;

    friend bool operator==(const HyperLabel&, const HyperLabel&) = default;
};

std::string to_string(const HyperLabel& label);

/// Representative bit patterns of the 2^(n-1) GHZ classes for n qubits,
/// 1-based index order. Index 1 is the all-zero pattern; indices 2..n+1 flip
/// one position starting from the last qubit, matching the published
/// three-photon enumeration (RRR, RRL, RLR, LRR). Any classes beyond that
/// (n >= 4) follow in increasing numeric order of their representative.
std::vector<std::uint32_t> ghz_class_representatives(int n);

/// 1-based class index of a basis pattern (the pattern or its complement
/// matches the class representative).
int ghz_pattern_index(int n, std::uint32_t bits);

/// (|rep> + sign |~rep>)/sqrt2 over n subsystems of the given kind.
PureState make_ghz(Kind kind, int index, int sign, std::span<const std::string> owners);

PureState make_pol_ghz(int index, int sign, std::span<const std::string> owners);
PureState make_spatial_ghz(int index, int sign, std::span<const std::string> owners);

/// Tensor of polarization and spatial GHZ states; subsystem order is all
/// polarization qubits then all path qubits.
PureState make_hyper_ghz(const HyperLabel& label, std::span<const std::string> owners);

}  // namespace hyperghz
