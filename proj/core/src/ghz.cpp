#include "hyperghz/ghz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyperghz {

std::string to_string(const HyperLabel& l) {
    auto sgn = [](int s) { return s >= 0 ? "+" : "-"; };
    return std::to_string(l.pol_index) + ":" + sgn(l.pol_sign) + ":" +
           std::to_string(l.spat_index) + ":" + sgn(l.spat_sign);
}

std::vector<std::uint32_t> ghz_class_representatives(int n) {
    if (n < 2 || n > 12) throw std::invalid_argument("ghz: n must be in [2, 12]");
    std::vector<std::uint32_t> reps;
    reps.push_back(0);
    for (int pos = n - 1; pos >= 0 && reps.size() < (std::size_t{1} << (n - 1)); --pos)
        reps.push_back(std::uint32_t{1} << (n - 1 - pos));
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    for (std::uint32_t v = 0; reps.size() < (std::size_t{1} << (n - 1)) && v <= mask; ++v) {
        const std::uint32_t rep = std::min(v, static_cast<std::uint32_t>(~v & mask));
        bool known = false;
        for (std::uint32_t r : reps)
            if (std::min(r, static_cast<std::uint32_t>(~r & mask)) == rep) { known = true; break; }
        if (!known) reps.push_back(rep);
    }
    return reps;
}

int ghz_pattern_index(int n, std::uint32_t bits) {
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    const auto reps = ghz_class_representatives(n);
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (bits == reps[i] || (~bits & mask) == reps[i]) return static_cast<int>(i + 1);
    throw std::logic_error("ghz_pattern_index: unreachable, classes cover every pattern");
}

PureState make_ghz(Kind kind, int index, int sign, std::span<const std::string> owners) {
    const int n = static_cast<int>(owners.size());
    const auto reps = ghz_class_representatives(n);
    if (index < 1 || index > static_cast<int>(reps.size()))
        throw std::out_of_range("ghz index must be in [1, " + std::to_string(reps.size()) + "]");
    if (sign != 1 && sign != -1) throw std::invalid_argument("ghz sign must be +1 or -1");

    std::vector<SubsystemLabel> subs;
    subs.reserve(owners.size());
    for (const auto& o : owners) subs.push_back({kind, o});

    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    const std::uint32_t rep = reps[index - 1];
    std::vector<cx> amps(std::size_t{1} << n);
    const double s = 1.0 / std::sqrt(2.0);
    amps[rep] = s;
    amps[~rep & mask] = sign * s;
    return PureState(std::move(subs), std::move(amps));
}

PureState make_pol_ghz(int index, int sign, std::span<const std::string> owners) {
    return make_ghz(Kind::Polarization, index, sign, owners);
}

PureState make_spatial_ghz(int index, int sign, std::span<const std::string> owners) {
    return make_ghz(Kind::Path, index, sign, owners);
}

PureState make_hyper_ghz(const HyperLabel& label, std::span<const std::string> owners) {
    return tensor(make_pol_ghz(label.pol_index, label.pol_sign, owners),
                  make_spatial_ghz(label.spat_index, label.spat_sign, owners));
}

}  // namespace hyperghz
