#include <cmath>

#include "doctest.h"
#include "hyperghz/ghz.hpp"
#include "test_helpers.hpp"

using namespace hyperghz;
using namespace hyperghz::testing;

namespace {
const std::vector<std::string> kABC = {"A", "B", "C"};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("polarization class 1,+ is (RRR + LLL)/sqrt2") {
    PureState st = make_pol_ghz(1, +1, kABC);
    CHECK(close(st.amplitudes()[0b000], kInvSqrt2));
    CHECK(close(st.amplitudes()[0b111], kInvSqrt2));
    CHECK(st.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("polarization class 4,- is (LRR - RLL)/sqrt2") {
    PureState st = make_pol_ghz(4, -1, kABC);
    CHECK(close(st.amplitudes()[0b100], kInvSqrt2));
    CHECK(close(st.amplitudes()[0b011], -kInvSqrt2));
}

TEST_CASE("spatial classes follow the same patterns") {
    PureState st = make_spatial_ghz(1, +1, kABC);
    CHECK(close(st.amplitudes()[0b000], kInvSqrt2));  // a1 b1 c1
    CHECK(close(st.amplitudes()[0b111], kInvSqrt2));  // a2 b2 c2
    PureState st3 = make_spatial_ghz(3, -1, kABC);
    CHECK(close(st3.amplitudes()[0b010], kInvSqrt2));   // a1 b2 c1
    CHECK(close(st3.amplitudes()[0b101], -kInvSqrt2));  // a2 b1 c2
}

TEST_CASE("the 8 polarization classes are orthonormal") {
    for (int i = 1; i <= 4; ++i)
        for (int si : {+1, -1})
            for (int j = 1; j <= 4; ++j)
                for (int sj : {+1, -1}) {
                    PureState a = make_pol_ghz(i, si, kABC);
                    PureState b = make_pol_ghz(j, sj, kABC);
                    const cx ip = a.inner_product(b);
                    const cx want = (i == j && si == sj) ? cx(1) : cx(0);
                    CHECK(close(ip, want));
                }
}

TEST_CASE("the 64 hyperentangled classes form an orthonormal basis") {
    std::vector<PureState> basis;
    for (int i = 1; i <= 4; ++i)
        for (int p : {+1, -1})
            for (int j = 1; j <= 4; ++j)
                for (int s : {+1, -1}) basis.push_back(make_hyper_ghz({i, p, j, s}, kABC));
    for (std::size_t a = 0; a < basis.size(); ++a) {
        CHECK(basis[a].norm() == doctest::Approx(1.0).epsilon(1e-12));
        for (std::size_t b = a; b < basis.size(); ++b) {
            const cx ip = basis[a].inner_product(basis[b]);
            CHECK(close(ip, a == b ? cx(1) : cx(0)));
        }
    }
}

TEST_CASE("hyper class (1,+,1,+) has weight 1/2 on the four expected kets") {
    PureState st = make_hyper_ghz({1, +1, 1, +1}, kABC);
    // order: pol A,B,C then path A,B,C
    CHECK(close(st.amplitudes()[0b000000], 0.5));
    CHECK(close(st.amplitudes()[0b000111], 0.5));
    CHECK(close(st.amplitudes()[0b111000], 0.5));
    CHECK(close(st.amplitudes()[0b111111], 0.5));
}

TEST_CASE("class index range is validated") {
    CHECK_THROWS_AS(make_pol_ghz(5, +1, kABC), std::out_of_range);
    CHECK_THROWS_AS(make_pol_ghz(0, +1, kABC), std::out_of_range);
    CHECK_THROWS_AS(make_pol_ghz(1, 2, kABC), std::invalid_argument);
}

TEST_CASE("pattern index inverts the class representatives") {
    CHECK(ghz_pattern_index(3, 0b000) == 1);
    CHECK(ghz_pattern_index(3, 0b111) == 1);
    CHECK(ghz_pattern_index(3, 0b001) == 2);
    CHECK(ghz_pattern_index(3, 0b110) == 2);
    CHECK(ghz_pattern_index(3, 0b010) == 3);
    CHECK(ghz_pattern_index(3, 0b100) == 4);
    CHECK(ghz_pattern_index(3, 0b011) == 4);
    CHECK(ghz_pattern_index(2, 0b00) == 1);
    CHECK(ghz_pattern_index(2, 0b01) == 2);
    CHECK(ghz_pattern_index(2, 0b10) == 2);
}

TEST_CASE("two-photon classes give the four Bell patterns") {
    const std::vector<std::string> ab = {"A", "B"};
    PureState bell = make_pol_ghz(2, -1, ab);
    CHECK(close(bell.amplitudes()[0b01], kInvSqrt2));
    CHECK(close(bell.amplitudes()[0b10], -kInvSqrt2));
}

TEST_CASE("computational readout of class 1,+ gives the two kets at 1/2") {
    PureState st = make_pol_ghz(1, +1, kABC);
    const SubsystemLabel subs[] = {pol("A"), pol("B"), pol("C")};
    const Basis bases[] = {Basis::Computational, Basis::Computational, Basis::Computational};
    auto branches = enumerate_outcomes(st, subs, bases);
    REQUIRE(branches.size() == 2);
    for (const auto& b : branches) {
        CHECK(b.probability == doctest::Approx(0.5).epsilon(1e-12));
        CHECK((b.results == std::vector<int>{0, 0, 0} || b.results == std::vector<int>{1, 1, 1}));
    }
}
