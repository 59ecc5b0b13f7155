#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "colorlie/cyclotomic.hpp"
#include "colorlie/gmat.hpp"

namespace colorlie::fock {

// Basis ket: bosonic occupations (trailing zeros for unused modes) plus the
// 9-component internal index. Coefficients follow the integer-ladder
// convention a|n> = n|n-1>, ad|n> = |n+1>, so everything upstream of the
// density is exact; the orthonormal-basis coefficient is c * sqrt(prod n_i!).
struct FockKey {
    std::array<int, 4> occ;
    int internal;
    auto operator<=>(const FockKey&) const = default;
};

class FockState {
  public:
    FockState(int modes, long n_max) : modes_(modes), n_max_(n_max) {}

    int modes() const { return modes_; }
    long n_max() const { return n_max_; }
    const std::map<FockKey, Cyclotomic>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const FockKey& key, const Cyclotomic& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    // <state|state> in the physical inner product; exact and rational for
    // root-of-unity-scaled rational coefficients.
    Rational norm_squared() const {
        Cyclotomic sum(0);
        for (const auto& [key, c] : coeffs_) {
            Cyclotomic term = c * c.conjugate();
            sum += term * Cyclotomic(factorial_product(key));
        }
        if (!sum.is_rational()) throw std::logic_error("norm^2 is not rational");
        return sum.rational_value();
    }

    // <a|b> with conjugation on this state.
    Cyclotomic inner(const FockState& other) const {
        Cyclotomic sum(0);
        for (const auto& [key, c] : coeffs_) {
            auto it = other.coeffs_.find(key);
            if (it == other.coeffs_.end()) continue;
            sum += c.conjugate() * it->second * Cyclotomic(factorial_product(key));
        }
        return sum;
    }

    // Global phase fixed so the coefficient of the lowest basis key is a
    // positive rational; possible whenever that coefficient is a rational
    // multiple of a root of unity, which covers every state built here.
    FockState canonical_phase() const {
        if (coeffs_.empty()) return *this;
        const Cyclotomic& lead = coeffs_.begin()->second;
        Cyclotomic mag2 = lead * lead.conjugate();
        if (!mag2.is_rational()) return *this;
        Rational q2 = mag2.rational_value();
        Int num_root = sqrt(numerator(q2));
        Int den_root = sqrt(denominator(q2));
        if (num_root * num_root != numerator(q2) || den_root * den_root != denominator(q2))
            return *this;
        Cyclotomic factor = Cyclotomic(Rational(num_root, den_root)) * lead.inverse();
        FockState out(modes_, n_max_);
        for (const auto& [key, c] : coeffs_) out.add(key, factor * c);
        return out;
    }

    static Rational factorial_product(const FockKey& key) {
        Rational f(1);
        for (int n : key.occ)
            for (int k = 2; k <= n; ++k) f *= k;
        return f;
    }

  private:
    int modes_;
    long n_max_;
    std::map<FockKey, Cyclotomic> coeffs_;
};

// The d-mode matrix oscillator: A_I = C(ann_I) a_I, A_Id = C(cre_I) a_Id,
// acting on 9-component wavefunctions. d = 2 uses the first two pairs.
class OscillatorModel {
  public:
    OscillatorModel(const Cyclotomic& j, long n_max, int modes = 2)
        : j_(j), n_max_(n_max), modes_(modes) {
        if (!(j.pow(3) == Cyclotomic(1)))
            throw std::domain_error("oscillator requires j^3 = 1");
        if (modes != 2 && modes != 4) throw std::domain_error("2 or 4 modes");
        const int cre[4][2] = {{1, 0}, {1, 1}, {1, 2}, {0, 1}};
        const int ann[4][2] = {{2, 0}, {2, 2}, {2, 1}, {0, 2}};
        for (int i = 0; i < 4; ++i) {
            cre_[static_cast<size_t>(i)] = gmat::c_matrix(cre[i][0], cre[i][1], j);
            ann_[static_cast<size_t>(i)] = gmat::c_matrix(ann[i][0], ann[i][1], j);
        }
    }

    long n_max() const { return n_max_; }
    int modes() const { return modes_; }
    const Cyclotomic& j() const { return j_; }

    FockState vacuum() const {
        FockState s(modes_, n_max_);
        s.add({{0, 0, 0, 0}, 0}, Cyclotomic(1));
        return s;
    }

    FockState apply_creation(int mode, const FockState& in) const {
        return apply_ladder(mode, in, true);
    }
    FockState apply_annihilation(int mode, const FockState& in) const {
        return apply_ladder(mode, in, false);
    }

    // H = sum_I A_Id A_I acts as the total number operator.
    FockState apply_hamiltonian(const FockState& in) const {
        FockState out(modes_, n_max_);
        for (int m = 0; m < modes_; ++m) {
            FockState term = apply_creation(m, apply_annihilation(m, in));
            for (const auto& [key, c] : term.coefficients()) out.add(key, c);
        }
        return out;
    }

    // |psi_n> proportional to (A1d + A2d)^n |vac>, unnormalized but exact.
    FockState symmetrized_state(long n) const {
        if (n > n_max_) throw std::domain_error("power exceeds the truncation level");
        FockState state = vacuum();
        for (long k = 0; k < n; ++k) {
            FockState a = apply_creation(0, state);
            FockState b = apply_creation(1, state);
            for (const auto& [key, c] : b.coefficients()) a.add(key, c);
            state = std::move(a);
            if (state.is_zero())
                throw std::domain_error("truncated to zero");  // parafermionic reuse
        }
        return state;
    }

    // (A1d)^{n1} ... (Ad)^{nd} |vac>.
    FockState occupation_state(const std::array<int, 4>& occ) const {
        FockState state = vacuum();
        for (int m = 0; m < modes_; ++m)
            for (int k = 0; k < occ[static_cast<size_t>(m)]; ++k)
                state = apply_creation(m, state);
        return state;
    }

  private:
    FockState apply_ladder(int mode, const FockState& in, bool create) const {
        if (mode < 0 || mode >= modes_) throw std::domain_error("mode out of range");
        const gmat::GradedMatrix& mat =
            create ? cre_[static_cast<size_t>(mode)] : ann_[static_cast<size_t>(mode)];
        FockState out(modes_, n_max_);
        for (const auto& [key, c] : in.coefficients()) {
            long total = key.occ[0] + key.occ[1] + key.occ[2] + key.occ[3];
            FockKey nk = key;
            Cyclotomic coeff = c;
            if (create) {
                if (total >= n_max_) continue;  // truncation edge
                nk.occ[static_cast<size_t>(mode)] += 1;
            } else {
                int n = key.occ[static_cast<size_t>(mode)];
                if (n == 0) continue;
                nk.occ[static_cast<size_t>(mode)] -= 1;
                coeff *= Cyclotomic(n);
            }
            for (auto& [row, val] : mat.column(key.internal)) {
                nk.internal = static_cast<int>(row);
                out.add(nk, coeff * val);
            }
        }
        return out;
    }

    Cyclotomic j_;
    long n_max_;
    int modes_;
    std::array<gmat::GradedMatrix, 4> cre_, ann_;
};

namespace detail {

// Coefficients of the physicists' Hermite polynomial H_n.
inline std::vector<double> hermite_coefficients(int n) {
    std::vector<double> hm1{1.0};
    if (n == 0) return hm1;
    std::vector<double> h{0.0, 2.0};
    for (int k = 1; k < n; ++k) {
        std::vector<double> next(static_cast<size_t>(k) + 2, 0.0);
        for (size_t i = 0; i < h.size(); ++i) next[i + 1] += 2.0 * h[i];
        for (size_t i = 0; i < hm1.size(); ++i) next[i] -= 2.0 * k * hm1[i];
        hm1 = std::move(h);
        h = std::move(next);
    }
    return h;
}

// Normalized Hermite functions psi_0..psi_top evaluated at u (no Gaussian).
inline std::vector<double> hermite_functions(int top, double u) {
    std::vector<double> psi(static_cast<size_t>(top) + 1);
    psi[0] = std::pow(M_PI, -0.25);
    if (top >= 1) psi[1] = std::sqrt(2.0) * u * psi[0];
    for (int n = 1; n < top; ++n)
        psi[static_cast<size_t>(n) + 1] = std::sqrt(2.0 / (n + 1)) * u * psi[static_cast<size_t>(n)] -
                                          std::sqrt(double(n) / (n + 1)) * psi[static_cast<size_t>(n) - 1];
    return psi;
}

struct GaussHermite {
    std::vector<double> nodes, weights;
};

// Nodes and weights for the weight e^{-x^2}: roots of H_n located by sign
// scanning of the normalized recurrence and polished by Newton;
// w_i = 1 / (n * htilde_{n-1}(x_i)^2).
inline GaussHermite gauss_hermite(int n) {
    auto htilde = [&](int deg, double u) {
        double a = std::pow(M_PI, -0.25), b = std::sqrt(2.0) * u * a;
        if (deg == 0) return a;
        for (int k = 1; k < deg; ++k) {
            double c = std::sqrt(2.0 / (k + 1)) * u * b - std::sqrt(double(k) / (k + 1)) * a;
            a = b;
            b = c;
        }
        return b;
    };
    const double top = std::sqrt(2.0 * n + 1.0) + 2.0;
    GaussHermite gh;
    double prev_u = 0.0, prev_v = htilde(n, 0.0);
    const double step = 1e-3;
    for (double u = step; u <= top; u += step) {
        double v = htilde(n, u);
        if (prev_v == 0.0 || v * prev_v < 0.0) {
            double lo = prev_u, hi = u;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                double vm = htilde(n, mid);
                if (vm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                (vm * htilde(n, lo) < 0.0 ? hi : lo) = mid;
            }
            double root = 0.5 * (lo + hi);
            double hn1 = htilde(n - 1, root);
            double w = 1.0 / (n * hn1 * hn1);
            gh.nodes.push_back(root);
            gh.weights.push_back(w);
            if (root > 1e-14) {
                gh.nodes.push_back(-root);
                gh.weights.push_back(w);
            }
        }
        prev_u = u;
        prev_v = v;
    }
    if (n % 2 == 1 && std::abs(htilde(n, 0.0)) < 1e-12) {
        double hn1 = htilde(n - 1, 0.0);
        gh.nodes.push_back(0.0);
        gh.weights.push_back(1.0 / (n * hn1 * hn1));
    }
    return gh;
}

}  // namespace detail

// Real bivariate polynomial, dense coefficient grid q[a][b] for x^a y^b.
struct BivarPoly {
    std::vector<std::vector<double>> q;

    double operator()(double x, double y) const {
        double v = 0.0;
        double xa = 1.0;
        for (const auto& row : q) {
            double yb = 1.0, acc = 0.0;
            for (double c : row) {
                acc += c * yb;
                yb *= y;
            }
            v += xa * acc;
            xa *= x;
        }
        return v;
    }

    BivarPoly dx() const {
        BivarPoly d;
        if (q.size() <= 1) return d;
        d.q.assign(q.size() - 1, {});
        for (size_t a = 1; a < q.size(); ++a) {
            d.q[a - 1] = q[a];
            for (double& c : d.q[a - 1]) c *= static_cast<double>(a);
        }
        return d;
    }
    BivarPoly dy() const {
        BivarPoly d;
        d.q.assign(q.size(), {});
        for (size_t a = 0; a < q.size(); ++a) {
            if (q[a].size() <= 1) continue;
            d.q[a].assign(q[a].size() - 1, 0.0);
            for (size_t b = 1; b < q[a].size(); ++b)
                d.q[a][b - 1] = q[a][b] * static_cast<double>(b);
        }
        return d;
    }
};

// p(x, y) = e^{-(x^2+y^2)} Q(x, y): the probability density of a 2-mode
// state, together with its analytic gradient and Hessian. The polynomial
// prefactor is assembled exactly from the state and embedded into floats
// only here.
class DensityField {
  public:
    explicit DensityField(const FockState& state) {
        if (state.modes() != 2) throw std::domain_error("densities are for 2-mode states");
        // per-internal-component complex polynomials sum c sqrt(n!m!) htilde
        const int top = static_cast<int>(state.n_max());
        std::vector<std::vector<double>> hermite;
        for (int k = 0; k <= top; ++k) {
            auto h = detail::hermite_coefficients(k);
            double fact = 1.0;
            for (int i = 2; i <= k; ++i) fact *= i;
            double scale = 1.0 / std::sqrt(std::pow(2.0, k) * fact * std::sqrt(M_PI));
            for (double& c : h) c *= scale;
            hermite.push_back(std::move(h));
        }
        using CPoly = std::vector<std::vector<std::complex<double>>>;
        std::array<CPoly, 9> comp;
        double norm2 = static_cast<double>(state.norm_squared().convert_to<double>());
        normalized_ = norm2 > 0.0;
        for (const auto& [key, c] : state.coefficients()) {
            const int n = key.occ[0], m = key.occ[1];
            double fact = 1.0;
            for (int i = 2; i <= n; ++i) fact *= i;
            for (int i = 2; i <= m; ++i) fact *= i;
            std::complex<double> amp = c.embed() * std::sqrt(fact);
            CPoly& target = comp[static_cast<size_t>(key.internal)];
            if (target.size() < hermite[static_cast<size_t>(n)].size())
                target.resize(hermite[static_cast<size_t>(n)].size());
            for (auto& row : target)
                if (row.size() < hermite[static_cast<size_t>(m)].size())
                    row.resize(hermite[static_cast<size_t>(m)].size());
            for (size_t a = 0; a < hermite[static_cast<size_t>(n)].size(); ++a) {
                if (hermite[static_cast<size_t>(n)][a] == 0.0) continue;
                for (size_t b = 0; b < hermite[static_cast<size_t>(m)].size(); ++b) {
                    if (hermite[static_cast<size_t>(m)][b] == 0.0) continue;
                    target[a][b] += amp * hermite[static_cast<size_t>(n)][a] *
                                    hermite[static_cast<size_t>(m)][b];
                }
            }
        }
        // Q = sum |P_i|^2 / norm^2
        size_t deg_x = 1, deg_y = 1;
        for (const auto& p : comp) {
            deg_x = std::max(deg_x, 2 * p.size());
            for (const auto& row : p) deg_y = std::max(deg_y, 2 * row.size());
        }
        prefactor_.q.assign(deg_x, std::vector<double>(deg_y, 0.0));
        for (const auto& p : comp) {
            for (size_t a1 = 0; a1 < p.size(); ++a1)
                for (size_t b1 = 0; b1 < p[a1].size(); ++b1) {
                    if (p[a1][b1] == std::complex<double>(0, 0)) continue;
                    for (size_t a2 = 0; a2 < p.size(); ++a2)
                        for (size_t b2 = 0; b2 < p[a2].size(); ++b2) {
                            if (p[a2][b2] == std::complex<double>(0, 0)) continue;
                            prefactor_.q[a1 + a2][b1 + b2] +=
                                (p[a1][b1] * std::conj(p[a2][b2])).real();
                        }
                }
        }
        if (normalized_)
            for (auto& row : prefactor_.q)
                for (double& c : row) c /= norm2;
        dqx_ = prefactor_.dx();
        dqy_ = prefactor_.dy();
        dqxx_ = dqx_.dx();
        dqxy_ = dqx_.dy();
        dqyy_ = dqy_.dy();

        // second path: keep the state data for Hermite-recurrence evaluation
        for (const auto& [key, c] : state.coefficients()) {
            double fact = 1.0;
            for (int i = 2; i <= key.occ[0]; ++i) fact *= i;
            for (int i = 2; i <= key.occ[1]; ++i) fact *= i;
            kets_.push_back({key.occ[0], key.occ[1], key.internal, c.embed() * std::sqrt(fact)});
        }
        norm2_ = norm2;
        top_ = top;
    }

    double operator()(double x, double y) const {
        return std::exp(-(x * x + y * y)) * prefactor_(x, y);
    }

    // Independent route: Hermite functions by recurrence at the point.
    double hermite_path(double x, double y) const {
        if (!normalized_) return 0.0;
        auto px = detail::hermite_functions(top_, x);
        auto py = detail::hermite_functions(top_, y);
        std::array<std::complex<double>, 9> comp{};
        for (const auto& k : kets_)
            comp[static_cast<size_t>(k.internal)] +=
                k.amp * px[static_cast<size_t>(k.n)] * py[static_cast<size_t>(k.m)];
        double sum = 0.0;
        for (const auto& v : comp) sum += std::norm(v);
        return sum * std::exp(-(x * x + y * y)) / norm2_;
    }

    std::array<double, 2> gradient(double x, double y) const {
        const double g = std::exp(-(x * x + y * y));
        const double q = prefactor_(x, y);
        return {g * (dqx_(x, y) - 2 * x * q), g * (dqy_(x, y) - 2 * y * q)};
    }

    std::array<std::array<double, 2>, 2> hessian(double x, double y) const {
        const double g = std::exp(-(x * x + y * y));
        const double q = prefactor_(x, y);
        const double qx = dqx_(x, y), qy = dqy_(x, y);
        double pxx = g * (dqxx_(x, y) - 4 * x * qx + (4 * x * x - 2) * q);
        double pyy = g * (dqyy_(x, y) - 4 * y * qy + (4 * y * y - 2) * q);
        double pxy = g * (dqxy_(x, y) - 2 * y * qx - 2 * x * qy + 4 * x * y * q);
        return {{{pxx, pxy}, {pxy, pyy}}};
    }

    // integral over the plane via exact Gaussian moments of the prefactor
    double integral_moments() const {
        auto moment = [](size_t k) {
            if (k % 2 == 1) return 0.0;
            double v = std::sqrt(M_PI);
            for (size_t i = 1; i < k; i += 2) v *= static_cast<double>(i) / 2.0;
            return v;
        };
        double sum = 0.0;
        for (size_t a = 0; a < prefactor_.q.size(); ++a)
            for (size_t b = 0; b < prefactor_.q[a].size(); ++b)
                if (prefactor_.q[a][b] != 0.0)
                    sum += prefactor_.q[a][b] * moment(a) * moment(b);
        return sum;
    }

    // integral via tensorized Gauss-Hermite (exact through degree 2n-1)
    double integral_gauss_hermite(int nodes = 64) const {
        auto gh = detail::gauss_hermite(nodes);
        double sum = 0.0;
        for (size_t i = 0; i < gh.nodes.size(); ++i)
            for (size_t k = 0; k < gh.nodes.size(); ++k)
                sum += gh.weights[i] * gh.weights[k] * prefactor_(gh.nodes[i], gh.nodes[k]);
        return sum;
    }

    const BivarPoly& prefactor() const { return prefactor_; }

  private:
    struct Ket {
        int n, m, internal;
        std::complex<double> amp;
    };
    BivarPoly prefactor_, dqx_, dqy_, dqxx_, dqxy_, dqyy_;
    std::vector<Ket> kets_;
    double norm2_ = 0.0;
    bool normalized_ = false;
    int top_ = 0;
};

struct GridPoint {
    double x, y, p;
};

// row-major grid over [-r, r]^2 with `resolution` points per axis
inline std::vector<GridPoint> density_grid(const DensityField& field, double range,
                                           int resolution) {
    if (resolution < 2) throw std::domain_error("resolution must be at least 2");
    std::vector<GridPoint> out;
    out.reserve(static_cast<size_t>(resolution) * static_cast<size_t>(resolution));
    const double step = 2 * range / (resolution - 1);
    for (int i = 0; i < resolution; ++i)
        for (int k = 0; k < resolution; ++k) {
            double x = -range + step * i;
            double y = -range + step * k;
            out.push_back({x, y, field(x, y)});
        }
    return out;
}

struct Maximum {
    double x, y, value;
};

struct MaximaReport {
    std::vector<Maximum> maxima;
    std::vector<std::array<double, 2>> failed_seeds;
};

inline std::vector<std::array<double, 2>> default_seed_grid() {
    std::vector<std::array<double, 2>> seeds;
    for (double x = -3.0; x <= 3.0 + 1e-9; x += 0.5)
        for (double y = -3.0; y <= 3.0 + 1e-9; y += 0.5) seeds.push_back({x, y});
    return seeds;
}

// Newton ascent with the analytic gradient and Hessian; converged points are
// kept when the Hessian is negative definite, deduplicated at 1e-6.
inline MaximaReport find_local_maxima(const DensityField& field,
                                      const std::vector<std::array<double, 2>>& seeds) {
    MaximaReport rep;
    for (const auto& seed : seeds) {
        double x = seed[0], y = seed[1];
        bool converged = false;
        for (int it = 0; it < 200; ++it) {
            auto g = field.gradient(x, y);
            double gn = std::hypot(g[0], g[1]);
            if (gn < 1e-10) {
                converged = true;
                break;
            }
            auto h = field.hessian(x, y);
            double det = h[0][0] * h[1][1] - h[0][1] * h[0][1];
            double dx_step, dy_step;
            if (std::abs(det) > 1e-14) {
                dx_step = -(h[1][1] * g[0] - h[0][1] * g[1]) / det;
                dy_step = -(h[0][0] * g[1] - h[0][1] * g[0]) / det;
            } else {
                dx_step = g[0];
                dy_step = g[1];
            }
            // backtrack until the gradient norm decreases
            double scale = 1.0;
            bool moved = false;
            for (int bt = 0; bt < 40; ++bt) {
                double nx = x + scale * dx_step, ny = y + scale * dy_step;
                auto ng = field.gradient(nx, ny);
                if (std::hypot(ng[0], ng[1]) < gn) {
                    x = nx;
                    y = ny;
                    moved = true;
                    break;
                }
                scale *= 0.5;
            }
            if (!moved) break;
        }
        if (!converged) {
            rep.failed_seeds.push_back(seed);
            continue;
        }
        auto h = field.hessian(x, y);
        bool neg_def = h[0][0] < 0 && (h[0][0] * h[1][1] - h[0][1] * h[0][1]) > 0;
        if (!neg_def) continue;
        bool duplicate = false;
        for (const auto& m : rep.maxima)
            if (std::hypot(m.x - x, m.y - y) < 1e-6) duplicate = true;
        if (!duplicate) rep.maxima.push_back({x, y, field(x, y)});
    }
    std::sort(rep.maxima.begin(), rep.maxima.end(),
              [](const Maximum& a, const Maximum& b) { return a.value > b.value; });
    return rep;
}

enum class DensityVerdict { equal, different };

// Compares the j = 1 and j = j1 densities of |psi_n> pointwise on a dense
// grid; sup-norm below 1e-9 counts as equal.
inline DensityVerdict compare_densities(long n, long n_max = 8) {
    OscillatorModel bos(Cyclotomic(1), n_max);
    OscillatorModel pb(root_of_unity(3, 1), n_max);
    DensityField fb(bos.symmetrized_state(n));
    DensityField fp(pb.symmetrized_state(n));
    double sup = 0.0;
    for (double x = -4.0; x <= 4.0; x += 0.05)
        for (double y = -4.0; y <= 4.0; y += 0.05)
            sup = std::max(sup, std::abs(fb(x, y) - fp(x, y)));
    return sup < 1e-9 ? DensityVerdict::equal : DensityVerdict::different;
}

}  // namespace colorlie::fock
