#include "oracle.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hyperghz::oracle {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Mat identity(std::size_t d) {
    Mat m(d * d);
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1.0;
    return m;
}

// three-photon class representatives, and {00, 01} for pairs
std::vector<std::size_t> class_reps(int n) {
    if (n == 3) return {0b000, 0b001, 0b010, 0b100};
    if (n == 2) return {0b00, 0b01};
    throw std::invalid_argument("oracle supports n = 2 or 3");
}

std::vector<cx> ghz_vector(int n, int index, int sign) {
    const auto reps = class_reps(n);
    std::vector<cx> v(std::size_t{1} << n);
    const std::size_t rep = reps[static_cast<std::size_t>(index - 1)];
    const std::size_t mask = (std::size_t{1} << n) - 1;
    v[rep] = kInvSqrt2;
    v[~rep & mask] = sign * kInvSqrt2;
    return v;
}

}  // namespace

Mat matmul(const Mat& a, const Mat& b, std::size_t d) {
    Mat out(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const cx aik = a[i * d + k];
            if (aik == cx{}) continue;
            for (std::size_t j = 0; j < d; ++j) out[i * d + j] += aik * b[k * d + j];
        }
    return out;
}

Mat kron(const Mat& a, std::size_t da, const Mat& b, std::size_t db) {
    const std::size_t d = da * db;
    Mat out(d * d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const cx aij = a[i * da + j];
            if (aij == cx{}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out[(i * db + k) * d + (j * db + l)] = aij * b[k * db + l];
        }
    return out;
}

Mat embed(const Mat& gate, const std::vector<int>& bit_positions, int nq) {
    const std::size_t d = std::size_t{1} << nq;
    const int k = static_cast<int>(bit_positions.size());
    const std::size_t ld = std::size_t{1} << k;
    std::size_t mask = 0;
    for (int b : bit_positions) mask |= std::size_t{1} << b;
    Mat out(d * d);
    for (std::size_t idx = 0; idx < d; ++idx) {
        std::size_t local = 0;
        for (int t = 0; t < k; ++t) local = (local << 1) | ((idx >> bit_positions[t]) & 1);
        const std::size_t outer = idx & ~mask;
        for (std::size_t l2 = 0; l2 < ld; ++l2) {
            const cx g = gate[l2 * ld + local];
            if (g == cx{}) continue;
            std::size_t idx2 = outer;
            for (int t = 0; t < k; ++t)
                if ((l2 >> (k - 1 - t)) & 1) idx2 |= std::size_t{1} << bit_positions[t];
            out[idx2 * d + idx] = g;
        }
    }
    return out;
}

std::vector<cx> hyper_ghz_vector(int n, int pol_index, int pol_sign, int spat_index,
                                 int spat_sign) {
    const auto p = ghz_vector(n, pol_index, pol_sign);
    const auto s = ghz_vector(n, spat_index, spat_sign);
    std::vector<cx> v(p.size() * s.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) v[i * s.size() + j] = p[i] * s[j];
    return v;
}

namespace {

// swap-stage contract on photons (x) spin1, built from outer products of the
// class vectors; see the published two-line mapping plus the minus-sector
// completion that makes it an involution
Mat stage1_matrix(int n) {
    const std::size_t pd = std::size_t{1} << (2 * n);
    const std::size_t d = pd * 2;
    Mat u(d * d);
    const int nidx = 1 << (n - 1);
    const cx plus[2] = {kInvSqrt2, kInvSqrt2};
    const cx minus[2] = {kInvSqrt2, -kInvSqrt2};
    for (int i = 1; i <= nidx; ++i)
        for (int p : {+1, -1})
            for (int j = 1; j <= nidx; ++j)
                for (int s : {+1, -1}) {
                    const auto vin = hyper_ghz_vector(n, i, p, j, s);
                    const auto vout = hyper_ghz_vector(n, j, -s, i, -p);
                    const bool minus_on_plus = (p == s);
                    for (int b = 0; b < 2; ++b) {
                        const cx* bin = b == 0 ? plus : minus;
                        const cx* bout = ((b == 0) == minus_on_plus) ? minus : plus;
                        for (std::size_t r = 0; r < pd; ++r) {
                            if (vout[r] == cx{}) continue;
                            for (std::size_t c = 0; c < pd; ++c) {
                                if (vin[c] == cx{}) continue;
                                for (int rb = 0; rb < 2; ++rb)
                                    for (int cb = 0; cb < 2; ++cb)
                                        u[((r << 1) | rb) * d + ((c << 1) | cb)] +=
                                            vout[r] * bout[rb] * std::conj(vin[c] * bin[cb]);
                            }
                        }
                    }
                }
    return u;
}

Mat hadamard() {
    return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
}

// wave plate followed by the cavity-2 reflection, as a joint map on
// (photon polarization, spin 2)
Mat stage2_photon_gate() {
    Mat g(16);
    auto set = [&](std::size_t dst, std::size_t src, cx v) { g[dst * 4 + src] = v; };
    set(0b10, 0b00, cx(0, 1));  // R,up -> i L,up
    set(0b00, 0b10, cx(0, 1));  // L,up -> i R,up
    set(0b11, 0b01, 1.0);       // R,dn -> L,dn
    set(0b01, 0b11, -1.0);      // L,dn -> -R,dn
    return g;
}

}  // namespace

const Mat& hgsa_pipeline_matrix(int n) {
    static std::map<int, Mat> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    const int nq = 2 * n + 2;  // pol, path, spin1, spin2
    const std::size_t d = std::size_t{1} << nq;

    // stage 1 acts on pol+path+spin1; spin2 is the last qubit
    Mat u = kron(stage1_matrix(n), d >> 1, identity(2), 2);

    auto apply = [&](const Mat& gate, const std::vector<int>& bits) {
        u = matmul(embed(gate, bits, nq), u, d);
    };
    const int spin2_bit = 0;
    auto pol_bit = [&](int photon) { return nq - 1 - photon; };

    for (int ph = 0; ph < n; ++ph) apply(hadamard(), {pol_bit(ph)});
    for (int ph = 0; ph < n; ++ph) apply(stage2_photon_gate(), {pol_bit(ph), spin2_bit});
    for (int ph = 0; ph < n; ++ph) apply(hadamard(), {pol_bit(ph)});

    // rotate the spins so outcomes are computational: spin1 into {+,-},
    // spin2 into the primed basis for odd n and {+,-} for even n
    apply(hadamard(), {1});
    if (n % 2 == 1) {
        Mat r{kInvSqrt2, cx(0, -kInvSqrt2), kInvSqrt2, cx(0, kInvSqrt2)};
        apply(r, {spin2_bit});
    } else {
        apply(hadamard(), {spin2_bit});
    }

    return cache.emplace(n, std::move(u)).first->second;
}

std::vector<OracleBranch> hgsa_branches(int n, const std::vector<cx>& photon_state) {
    const std::size_t pd = std::size_t{1} << (2 * n);
    if (photon_state.size() != pd)
        throw std::invalid_argument("oracle: photon state must cover 2n qubits");
    const std::size_t d = pd << 2;
    std::vector<cx> v(d);
    for (std::size_t i = 0; i < pd; ++i) {
        // spins |+>|+> = half weight on each spin ket
        for (std::size_t sbits = 0; sbits < 4; ++sbits)
            v[(i << 2) | sbits] = photon_state[i] * 0.5;
    }
    const Mat& u = hgsa_pipeline_matrix(n);
    std::vector<cx> w(d);
    for (std::size_t r = 0; r < d; ++r) {
        cx acc = 0;
        for (std::size_t c = 0; c < d; ++c) acc += u[r * d + c] * v[c];
        w[r] = acc;
    }
    std::vector<OracleBranch> out;
    for (std::size_t i = 0; i < d; ++i) {
        const double p = std::norm(w[i]);
        if (p > 1e-12) out.push_back({i, p});
    }
    return out;
}

}  // namespace hyperghz::oracle
