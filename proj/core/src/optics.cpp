#include "hyperghz/optics.hpp"

#include <cmath>

namespace hyperghz {

JointMap qwp_map() {
    JointMap m(1);
    const double s = 1.0 / std::sqrt(2.0);
    m.at(0, 0) = s;
    m.at(0, 1) = s;
    m.at(1, 0) = s;
    m.at(1, 1) = -s;
    return m;
}

JointMap qwp1_map() {
    JointMap m(1);
    const double s = 1.0 / std::sqrt(2.0);
    m.at(0, 0) = s;
    m.at(0, 1) = s;
    m.at(1, 0) = -s;
    m.at(1, 1) = s;
    return m;
}

JointMap wp_map() {
    JointMap m(1);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = cx(0, 1);
    return m;
}

PureState qwp(const PureState& state, const std::string& photon) {
    return apply_joint(qwp_map(), pol(photon), state);
}

PureState qwp1(const PureState& state, const std::string& photon) {
    return apply_joint(qwp1_map(), pol(photon), state);
}

PureState wp(const PureState& state, const std::string& photon) {
    return apply_joint(wp_map(), pol(photon), state);
}

PureState cpbs_route(const PureState& state, const std::string& photon) {
    JointMap m(2);  // |pol, path>
    m.at(0b00, 0b00) = 1.0;  // R passes
    m.at(0b01, 0b01) = 1.0;
    m.at(0b11, 0b10) = 1.0;  // L toggles path
    m.at(0b10, 0b11) = 1.0;
    const SubsystemLabel targets[] = {pol(photon), path(photon)};
    return apply_joint(m, targets, state);
}

}  // namespace hyperghz
