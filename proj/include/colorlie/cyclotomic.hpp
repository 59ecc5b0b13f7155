#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace colorlie {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Mixed-order arithmetic coerces operands into Q(zeta_lcm); the lcm is capped
// so sweeps over root orders cannot blow the working field up silently.
inline constexpr long kOrderCoercionCap = 360;

namespace detail {

// Phi_M as a monic integer polynomial, low degree first.
// x^M - 1 = prod_{d | M} Phi_d, so Phi_M is obtained by exact division.
inline const std::vector<Int>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Compute iteratively so recursion never re-locks.
    for (long n = 1; n <= m; ++n) {
        if (m % n != 0 || cache.count(n)) continue;
        std::vector<Int> poly(static_cast<size_t>(n) + 1);
        poly[0] = -1;
        poly[static_cast<size_t>(n)] = 1;  // x^n - 1
        for (long d = 1; d < n; ++d) {
            if (n % d != 0) continue;
            const auto& phi_d = cache.at(d);
            // Exact division by the monic phi_d.
            std::vector<Int> quot(poly.size() - phi_d.size() + 1);
            std::vector<Int> rem = poly;
            for (size_t i = quot.size(); i-- > 0;) {
                Int c = rem[i + phi_d.size() - 1];
                quot[i] = c;
                if (c == 0) continue;
                for (size_t k = 0; k < phi_d.size(); ++k)
                    rem[i + k] -= c * phi_d[k];
            }
            poly = std::move(quot);
        }
        cache.emplace(n, std::move(poly));
    }
    return cache.at(m);
}

inline size_t totient_degree(long m) { return cyclotomic_polynomial(m).size() - 1; }

// Remainder of a rational polynomial modulo the monic Phi_M, padded to phi(M).
inline std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, long m) {
    const auto& phi = cyclotomic_polynomial(m);
    const size_t deg = phi.size() - 1;
    for (size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (size_t k = 0; k < deg; ++k)
            poly[i - deg + k] -= c * Rational(phi[k]);
    }
    poly.resize(deg);
    return poly;
}

}  // namespace detail

// An exact element of the cyclotomic field Q(zeta_M), zeta_M = exp(2*pi*i/M).
// Canonical form: coefficients over the power basis 1, zeta, ..., zeta^(phi(M)-1)
// after reduction modulo the M-th cyclotomic polynomial. The canonical vector is
// unique, so equality and zero tests are exact coefficient comparisons.
class Cyclotomic {
  public:
    Cyclotomic() : order_(1), coeffs_(1, Rational(0)) {}

    explicit Cyclotomic(const Rational& r) : order_(1), coeffs_(1, r) {}
    explicit Cyclotomic(long n) : order_(1), coeffs_(1, Rational(n)) {}

    // From power-basis coefficients c_0..c_{len-1} meaning sum c_e zeta^e.
    Cyclotomic(long order, std::vector<Rational> power_coeffs) : order_(order) {
        if (order < 1) throw std::domain_error("cyclotomic order must be >= 1");
        fold_exponents(power_coeffs);
        coeffs_ = detail::reduce_mod_phi(std::move(power_coeffs), order_);
    }

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // Power-basis coefficients padded to length M (used by the JSON form).
    std::vector<Rational> power_basis() const {
        std::vector<Rational> out(static_cast<size_t>(order_), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
        return out;
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic is not rational");
        return coeffs_[0];
    }

    bool is_one() const { return is_rational() && coeffs_[0] == 1; }

    // Re-embeds into Q(zeta_L) for M | L via zeta_M = zeta_L^(L/M).
    Cyclotomic to_order(long l) const {
        if (l == order_) return *this;
        if (l % order_ != 0) throw std::domain_error("target order must be a multiple");
        const long step = l / order_;
        std::vector<Rational> power(static_cast<size_t>(l), Rational(0));
        for (size_t e = 0; e < coeffs_.size(); ++e)
            power[(e * static_cast<size_t>(step)) % static_cast<size_t>(l)] += coeffs_[e];
        return Cyclotomic(l, std::move(power));
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = coerce(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = coerce(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.is_zero() || b.is_zero()) return Cyclotomic(0);
        // Rational scalars multiply without coercion; this is the hot path in
        // the matrix checks, where one factor is usually +-1 or a small rational.
        if (a.is_rational()) return scale(b, a.coeffs_[0]);
        if (b.is_rational()) return scale(a, b.coeffs_[0]);
        auto [x, y] = coerce(a, b);
        std::vector<Rational> conv(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (size_t k = 0; k < y.coeffs_.size(); ++k) {
                if (y.coeffs_[k] == 0) continue;
                conv[i + k] += x.coeffs_[i] * y.coeffs_[k];
            }
        }
        x.coeffs_ = detail::reduce_mod_phi(std::move(conv), x.order_);
        return x;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        auto [x, y] = coerce(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Complex conjugate: the Galois map zeta -> zeta^(M-1).
    Cyclotomic conjugate() const {
        std::vector<Rational> power(static_cast<size_t>(order_), Rational(0));
        for (size_t e = 0; e < coeffs_.size(); ++e) {
            size_t target = (e == 0) ? 0 : static_cast<size_t>(order_) - e;
            power[target] += coeffs_[e];
        }
        return Cyclotomic(order_, std::move(power));
    }

    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
        if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
        // Extended Euclid over Q[x] against the irreducible Phi_M.
        const auto& phi_int = detail::cyclotomic_polynomial(order_);
        std::vector<Rational> r0(phi_int.size());
        for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
        std::vector<Rational> r1 = coeffs_;
        trim(r1);
        std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};
        while (true) {
            // r0 = q*r1 + r2
            std::vector<Rational> rem = r0;
            std::vector<Rational> quot(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 0,
                                       Rational(0));
            for (size_t i = quot.size(); i-- > 0;) {
                Rational c = rem[i + r1.size() - 1] / r1.back();
                quot[i] = c;
                if (c == 0) continue;
                for (size_t k = 0; k < r1.size(); ++k) rem[i + k] -= c * r1[k];
            }
            trim(rem);
            // s2 = s0 - q*s1
            std::vector<Rational> s2 = s0;
            s2.resize(std::max(s2.size(), quot.size() + s1.size() - 1), Rational(0));
            for (size_t i = 0; i < quot.size(); ++i) {
                if (quot[i] == 0) continue;
                for (size_t k = 0; k < s1.size(); ++k) s2[i + k] -= quot[i] * s1[k];
            }
            trim(s2);
            if (rem.empty()) {
                // r1 is the gcd, a nonzero constant since Phi_M is irreducible.
                if (r1.size() != 1)
                    throw std::logic_error("nontrivial gcd with cyclotomic polynomial");
                for (auto& c : s1) c /= r1[0];
                s1.resize(detail::totient_degree(order_), Rational(0));
                Cyclotomic out;
                out.order_ = order_;
                out.coeffs_ = std::move(s1);
                return out;
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic acc(1);
        Cyclotomic base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Float embedding zeta_M -> exp(2*pi*i/M); long double accumulation keeps
    // products of moderate elements homomorphic to ~1e-12 absolute error.
    std::complex<double> embed() const {
        long double re = 0, im = 0;
        const long double two_pi = 6.283185307179586476925286766559L;
        for (size_t e = 0; e < coeffs_.size(); ++e) {
            if (coeffs_[e] == 0) continue;
            long double c = static_cast<long double>(coeffs_[e].convert_to<double>());
            // convert_to<double> on cpp_rational is correctly rounded; refine
            // via long double numerator/denominator for small terms.
            long double num = static_cast<long double>(numerator(coeffs_[e]).convert_to<double>());
            long double den = static_cast<long double>(denominator(coeffs_[e]).convert_to<double>());
            if (den != 0) c = num / den;
            long double ang = two_pi * static_cast<long double>(e) / static_cast<long double>(order_);
            re += c * cosl(ang);
            im += c * sinl(ang);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    // Stable text key; used for table deduplication and diagnostics.
    std::string canonical_key() const {
        std::ostringstream os;
        os << order_ << '|';
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) os << ',';
            os << coeffs_[i].str();
        }
        return os.str();
    }

    std::string to_string() const {
        if (is_rational()) return coeffs_[0].str();
        std::ostringstream os;
        bool first = true;
        for (size_t e = 0; e < coeffs_.size(); ++e) {
            if (coeffs_[e] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << coeffs_[e].str();
            if (e > 0) os << "*z" << order_ << "^" << e;
        }
        if (first) os << "0";
        return os.str();
    }

  private:
    static Cyclotomic scale(const Cyclotomic& a, const Rational& r) {
        if (r == 0) return Cyclotomic(0);
        Cyclotomic out = a;
        for (auto& c : out.coeffs_) c *= r;
        return out;
    }

    static void trim(std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    void fold_exponents(std::vector<Rational>& power) const {
        if (power.size() > static_cast<size_t>(order_)) {
            for (size_t e = power.size(); e-- > static_cast<size_t>(order_);) {
                if (power[e] != 0) power[e % static_cast<size_t>(order_)] += power[e];
            }
            power.resize(static_cast<size_t>(order_));
        }
        power.resize(static_cast<size_t>(order_), Rational(0));
    }

    static std::pair<Cyclotomic, Cyclotomic> coerce(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order_ == b.order_) return {a, b};
        long l = std::lcm(a.order_, b.order_);
        if (l > kOrderCoercionCap)
            throw std::domain_error("cyclotomic order coercion exceeds cap " +
                                    std::to_string(kOrderCoercionCap) + " (lcm " +
                                    std::to_string(l) + ")");
        return {a.to_order(l), b.to_order(l)};
    }

    long order_;
    std::vector<Rational> coeffs_;
};

// zeta_order^exponent in canonical form.
inline Cyclotomic root_of_unity(long order, long exponent) {
    if (order < 1) throw std::domain_error("root order must be >= 1");
    long e = exponent % order;
    if (e < 0) e += order;
    std::vector<Rational> power(static_cast<size_t>(order), Rational(0));
    power[static_cast<size_t>(e)] = 1;
    return Cyclotomic(order, std::move(power));
}

// Level of a root of unity: the minimal k >= 1 with x^k = 1.
struct RootLevel {
    long value;
};

inline RootLevel level(const Cyclotomic& x) {
    // Torsion units of Q(zeta_M) have order dividing lcm(2, M).
    const long bound = std::lcm<long>(2, x.order());
    if (!(x.pow(bound) == Cyclotomic(1)))
        throw std::domain_error("not a root of unity");
    for (long k = 1; k <= bound; ++k) {
        if (bound % k != 0) continue;
        if (x.pow(k) == Cyclotomic(1)) return RootLevel{k};
    }
    throw std::logic_error("level search failed");
}

// Euler totient: the number of primitive n-th roots of unity (A000010).
inline long primitive_count(long n) {
    if (n < 1) throw std::domain_error("totient requires n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace colorlie
