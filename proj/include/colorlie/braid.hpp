#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "colorlie/algebra.hpp"
#include "colorlie/cyclotomic.hpp"
#include "colorlie/gmat.hpp"

namespace colorlie::braid {

using gmat::GradedMatrix;

// s = 0 stands for the s -> infinity limit with t = -1 exactly.
inline constexpr long kInfiniteLevel = 0;

// t_s = exp(i pi (2/s - 1)) = zeta_{2s}^{2-s}; -t_s is a primitive s-th root.
inline Cyclotomic t_parameter(long s) {
    if (s == kInfiniteLevel) return Cyclotomic(-1);
    if (s < 2) throw std::domain_error("braid level requires s >= 2 (or 0 for the t = -1 limit)");
    return root_of_unity(2 * s, 2 - s);
}

inline Cyclotomic minus_t(long s) { return -t_parameter(s); }

// The 4x4 R-matrix of the Alexander-Conway polynomial.
inline GradedMatrix b_matrix(const Cyclotomic& t) {
    if (t.is_zero()) throw std::domain_error("b_matrix requires t != 0");
    GradedMatrix b(4);
    b.set(0, 0, Cyclotomic(1));
    b.set(1, 1, Cyclotomic(1) - t);
    b.set(1, 2, t);
    b.set(2, 1, Cyclotomic(1));
    b.set(3, 3, -t);
    return b;
}

// (B (x) I)(I (x) B)(B (x) I) = (I (x) B)(B (x) I)(I (x) B) at the given t.
inline bool braid_relation_holds(const Cyclotomic& t) {
    GradedMatrix b = b_matrix(t);
    GradedMatrix i2 = GradedMatrix::identity(2);
    GradedMatrix bi = gmat::tensor(b, i2);
    GradedMatrix ib = gmat::tensor(i2, b);
    return bi * ib * bi == ib * bi * ib;
}

// W_{t_s} = diag(e^{-i pi/s}, e^{i pi/s}); W gamma = (-t_s) gamma W.
inline GradedMatrix intertwiner(long s) {
    GradedMatrix w = GradedMatrix::identity(2);
    if (s == kInfiniteLevel) return w;
    if (s < 2) throw std::domain_error("intertwiner requires s >= 2");
    w.set(0, 0, root_of_unity(2 * s, -1));
    w.set(1, 1, root_of_unity(2 * s, 1));
    return w;
}

// Site operator of the N-qubit chain: W^(x)(k) (x) gamma (x) I^(x)(N-k-1),
// materialized as a 2^N matrix (small N; tests and cross-checks only).
inline GradedMatrix chain_site_operator(long n_sites, long s, long site) {
    GradedMatrix w = intertwiner(s);
    GradedMatrix g = gmat::building_block("gamma").without_grade();
    GradedMatrix i2 = GradedMatrix::identity(2);
    GradedMatrix out = GradedMatrix::identity(1);
    for (long k = 0; k < n_sites; ++k) {
        const GradedMatrix& f = k < site ? w : (k == site ? g : i2);
        out = (k == 0) ? f : gmat::tensor(out, f);
    }
    return out;
}

struct ChainSpectrum {
    std::vector<long> levels;      // energies of the nonvanishing tower states
    bool plateau = false;          // true when the top level is s-1 with N >= s
};

// Energies of g_N^n |0>_N, where g_N = sum_k W^(x)(k-1) (x) gamma (x) I...
// States live on 2^N basis masks; gamma creates on an empty site, W scales
// by e^{-+ i pi / s} depending on the occupation to its left.
inline ChainSpectrum chain_spectrum(long n_sites, long s) {
    if (n_sites < 1 || n_sites > 12)
        throw std::domain_error("chain_spectrum supports 1 <= N <= 12");
    const Cyclotomic w0 = (s == kInfiniteLevel) ? Cyclotomic(1) : root_of_unity(2 * s, -1);
    const Cyclotomic w1 = (s == kInfiniteLevel) ? Cyclotomic(1) : root_of_unity(2 * s, 1);

    std::map<uint32_t, Cyclotomic> state{{0u, Cyclotomic(1)}};
    ChainSpectrum out;
    out.levels.push_back(0);
    for (long n = 1; n <= n_sites; ++n) {
        std::map<uint32_t, Cyclotomic> next;
        for (const auto& [mask, amp] : state) {
            Cyclotomic prefix(1);
            for (long k = 0; k < n_sites; ++k) {
                const bool occupied = mask & (1u << k);
                if (!occupied) {
                    Cyclotomic& slot = next[mask | (1u << k)];
                    slot += amp * prefix;
                }
                prefix *= occupied ? w1 : w0;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second.is_zero()) it = next.erase(it);
            else ++it;
        }
        if (next.empty()) break;
        // every surviving component carries exactly n quanta, so the state is
        // an H_N eigenvector of energy n
        for (const auto& [mask, amp] : next)
            if (__builtin_popcount(mask) != n)
                throw std::logic_error("chain state left the fixed-quanta sector");
        out.levels.push_back(n);
        state = std::move(next);
    }
    const long top = out.levels.back();
    out.plateau = (s != kInfiniteLevel) && (top == s - 1) && (n_sites >= s);
    return out;
}

// Angle theta = pi * num / den, kept exact through e^{i theta} = zeta_{2 den}^num.
struct Angle {
    long num;
    long den;
    Cyclotomic phase() const {
        if (den < 1) throw std::domain_error("angle denominator must be positive");
        return root_of_unity(2 * den, num);
    }
};

inline Angle vartheta(long s) { return Angle{s + 2, 2 * s}; }

// epsilon(x, y) = -e^{-2 i theta}.
inline Cyclotomic epsilon_from_angle(const Angle& theta) {
    return -(theta.phase().pow(2).inverse());
}

// (X, Y)_theta = i sin(theta) [X, Y] + cos(theta) {X, Y}
//             = e^{i theta} (X Y + e^{-2 i theta} Y X); both routes compared.
inline GradedMatrix round_bracket(const GradedMatrix& x, const GradedMatrix& y,
                                  const Angle& theta) {
    if (x.dim() != y.dim()) throw std::domain_error("round_bracket dimension mismatch");
    const Cyclotomic e = theta.phase();
    const Cyclotomic einv = e.inverse();
    GradedMatrix direct = e * (x * y + (einv * einv) * (y * x));
    const Cyclotomic half(Rational(1, 2));
    const Cyclotomic isin = half * (e - einv);
    const Cyclotomic cos = half * (e + einv);
    GradedMatrix trig = isin * (x * y - y * x) + cos * (x * y + y * x);
    if (!(direct == trig)) throw std::logic_error("round bracket route mismatch");
    return direct;
}

struct ReconstructionReport {
    std::vector<std::string> violations;
    Cyclotomic epsilon;              // -e^{-2 i vartheta_s}
    bool epsilon_matches = false;    // j1^2 at s = 3, -j1 at s = 6
    // (G0, G_{+-i}) vanish for theta = +pi/2 and -pi/2 alike; both recorded.
    bool plus_half_pi_vanishes = false;
    bool minus_half_pi_vanishes = false;
    bool ok() const { return violations.empty() && epsilon_matches; }
};

// Rebuilds the 2-particle braided-qubit round brackets from the s = 3 or
// s = 6 color superalgebra generators and verifies every listed bracket.
inline ReconstructionReport reconstruct_color_bracket(long s) {
    if (s != 3 && s != 6) throw std::domain_error("reconstruction is defined for s in {3, 6}");
    algebra::AlgebraSpec alg = algebra::build_algebra(s == 3 ? "hpf_s3" : "hpf_s6", 0);
    // identifications: s=3 maps (P2d, P1d) to (G+1, G+2); s=6 maps (F1d, F2d).
    const GradedMatrix g0 = alg.find("C").internal;
    const GradedMatrix gp1 = alg.find(s == 3 ? "P2d" : "F1d").internal;
    const GradedMatrix gm1 = alg.find(s == 3 ? "P2" : "F1").internal;
    const GradedMatrix gp2 = alg.find(s == 3 ? "P1d" : "F2d").internal;
    const GradedMatrix gm2 = alg.find(s == 3 ? "P1" : "F2").internal;

    ReconstructionReport rep;
    const Angle th = vartheta(s);
    const Angle mth{-th.num, th.den};
    const Angle half{1, 2}, mhalf{-1, 2}, zero{0, 1};

    auto expect_zero = [&](const GradedMatrix& a, const GradedMatrix& b, const Angle& theta,
                           const std::string& label) {
        if (!round_bracket(a, b, theta).is_zero()) rep.violations.push_back(label);
    };
    auto expect_g0 = [&](const GradedMatrix& a, const GradedMatrix& b, const std::string& label) {
        if (!(round_bracket(a, b, zero) == g0)) rep.violations.push_back(label);
    };

    const std::vector<std::pair<const GradedMatrix*, const char*>> charged{
        {&gp1, "G+1"}, {&gm1, "G-1"}, {&gp2, "G+2"}, {&gm2, "G-2"}};

    // central brackets at theta = +-pi/2
    rep.plus_half_pi_vanishes = true;
    rep.minus_half_pi_vanishes = true;
    for (const auto& [g, name] : charged) {
        for (const Angle& a : {half, mhalf}) {
            bool v1 = round_bracket(g0, *g, a).is_zero();
            bool v2 = round_bracket(*g, g0, a).is_zero();
            (a.num > 0 ? rep.plus_half_pi_vanishes : rep.minus_half_pi_vanishes) &= v1 && v2;
        }
        if (!round_bracket(g0, *g, half).is_zero())
            rep.violations.push_back(std::string("(G0,") + name + ")");
    }
    expect_zero(g0, g0, half, "(G0,G0)");

    // oscillator pairs close on G0 at theta = 0
    expect_g0(gp1, gm1, "(G+1,G-1)");
    expect_g0(gm1, gp1, "(G-1,G+1)");
    expect_g0(gp2, gm2, "(G+2,G-2)");
    expect_g0(gm2, gp2, "(G-2,G+2)");
    expect_zero(gp1, gp1, zero, "(G+1,G+1)");
    expect_zero(gm1, gm1, zero, "(G-1,G-1)");
    expect_zero(gp2, gp2, zero, "(G+2,G+2)");
    expect_zero(gm2, gm2, zero, "(G-2,G-2)");

    // same-charge pairs at +-vartheta_s
    expect_zero(gp1, gp2, th, "(G+1,G+2)_th");
    expect_zero(gm1, gm2, th, "(G-1,G-2)_th");
    expect_zero(gp2, gp1, mth, "(G+2,G+1)_-th");
    expect_zero(gm2, gm1, mth, "(G-2,G-1)_-th");

    // opposite-charge pairs
    expect_zero(gp1, gm2, mth, "(G+1,G-2)_-th");
    expect_zero(gm1, gp2, mth, "(G-1,G+2)_-th");
    expect_zero(gp2, gm1, th, "(G+2,G-1)_th");
    expect_zero(gm2, gp1, th, "(G-2,G+1)_th");

    rep.epsilon = epsilon_from_angle(th);
    const Cyclotomic j1 = root_of_unity(3, 1);
    rep.epsilon_matches = (s == 3) ? (rep.epsilon == j1 * j1) : (rep.epsilon == -j1);
    return rep;
}

struct BraidedTensorReport {
    Cyclotomic ratio;  // (W (x) gamma)(gamma (x) I) = ratio * (gamma (x) I)(W (x) gamma)
    bool ok = false;
};

// The two orderings of the mapped braided product differ by exactly -t_s,
// which also witnesses W gamma = (-t_s) gamma W.
inline BraidedTensorReport braided_tensor_check(long s) {
    const GradedMatrix w = intertwiner(s);
    const GradedMatrix g = gmat::building_block("gamma").without_grade();
    const GradedMatrix i2 = GradedMatrix::identity(2);
    const GradedMatrix lhs = gmat::tensor(w, g) * gmat::tensor(g, i2);
    const GradedMatrix rhs = gmat::tensor(g, i2) * gmat::tensor(w, g);
    BraidedTensorReport rep;
    rep.ratio = minus_t(s);
    rep.ok = (lhs == rep.ratio * rhs) && (w * g == rep.ratio * (g * w));
    return rep;
}

}  // namespace colorlie::braid
