#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "colorlie/cyclotomic.hpp"

namespace colorlie::pascal {

// Exact element of Z[j]/(j^3 - 1), the coefficient ring of the triangle.
// Stored over {1, j, j^2}; printed over the basis {1, j, z} with z = 1+j+j^2,
// which is how the rows are usually written.
struct JZPoly {
    Int c0, c1, c2;

    JZPoly() : c0(0), c1(0), c2(0) {}
    explicit JZPoly(long n) : c0(n), c1(0), c2(0) {}
    JZPoly(Int a, Int b, Int c) : c0(std::move(a)), c1(std::move(b)), c2(std::move(c)) {}

    static JZPoly j() { return {0, 1, 0}; }
    static JZPoly z() { return {1, 1, 1}; }
    static JZPoly j_power(long e) {
        switch (((e % 3) + 3) % 3) {
            case 0: return JZPoly(1);
            case 1: return j();
            default: return {0, 0, 1};
        }
    }

    friend JZPoly operator+(const JZPoly& a, const JZPoly& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend JZPoly operator-(const JZPoly& a, const JZPoly& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    friend JZPoly operator*(const JZPoly& a, const JZPoly& b) {
        // j^3 = 1 folds the convolution back onto {1, j, j^2}
        return {a.c0 * b.c0 + a.c1 * b.c2 + a.c2 * b.c1,
                a.c0 * b.c1 + a.c1 * b.c0 + a.c2 * b.c2,
                a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
    }
    bool operator==(const JZPoly&) const = default;

    bool is_zero() const { return c0 == 0 && c1 == 0 && c2 == 0; }

    // Coefficients (A, B, C) of the unique representation A + B j + C z.
    std::array<Int, 3> jz_basis() const { return {c0 - c2, c1 - c2, c2}; }

    Cyclotomic specialize(const Cyclotomic& j) const {
        return Cyclotomic(Rational(c0)) + Cyclotomic(Rational(c1)) * j +
               Cyclotomic(Rational(c2)) * j * j;
    }

    std::string to_string() const {
        auto [a, b, c] = jz_basis();
        std::string s;
        auto append = [&](const Int& coeff, const char* sym) {
            if (coeff == 0) return;
            if (!s.empty()) s += coeff > 0 ? " + " : " - ";
            else if (coeff < 0) s += "-";
            Int mag = coeff < 0 ? Int(-coeff) : coeff;
            if (mag != 1 || sym[0] == '\0') s += mag.str();
            s += sym;
        };
        append(a, "");
        append(b, "j");
        append(c, "z");
        return s.empty() ? "0" : s;
    }
};

struct TriangleRow {
    long n;
    std::vector<JZPoly> coefficients;  // c_{n;0} .. c_{n;n}
};

// Row n of the triangle from the recursion
// c_{n+1;k} = c_{n;k} + j^{2(n-k+1)} c_{n;k-1}, c_{0;0} = 1.
inline TriangleRow triangle_row(long n) {
    if (n < 0) throw std::domain_error("triangle_row requires n >= 0");
    std::vector<JZPoly> row{JZPoly(1)};
    for (long m = 0; m < n; ++m) {
        std::vector<JZPoly> next(row.size() + 1);
        for (size_t k = 0; k < next.size(); ++k) {
            JZPoly v;
            if (k < row.size()) v = v + row[k];
            if (k >= 1) v = v + JZPoly::j_power(2 * (m - static_cast<long>(k) + 1)) * row[k - 1];
            next[k] = std::move(v);
        }
        row = std::move(next);
    }
    return {n, std::move(row)};
}

inline std::vector<Cyclotomic> specialize_row(const TriangleRow& row, const Cyclotomic& j) {
    if (!(j.pow(3) == Cyclotomic(1)))
        throw std::domain_error("specialize_row requires j^3 = 1");
    std::vector<Cyclotomic> out;
    out.reserve(row.coefficients.size());
    for (const auto& c : row.coefficients) out.push_back(c.specialize(j));
    return out;
}

// w(a,b,c) = 1 + a^-1 + b^-1 + c a^-1 + c b^-1 + c a^-1 b^-1, the scalar in
// (D1 + D2 + D3)^3 = w(a,b,c) D1 D2 D3 for nilpotent creation operators.
inline Cyclotomic w_factor(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw std::domain_error("w_factor requires nonzero arguments");
    const Cyclotomic ai = a.inverse(), bi = b.inverse();
    return Cyclotomic(1) + ai + bi + c * ai + c * bi + c * ai * bi;
}

// Ordered products of creation operators D_J with the reordering data
// D_J D_K = a(J,K) D_K D_J. The normal form is ascending site order with the
// scalar collected on the left; nilpotent systems kill repeated sites.
class WordSystem {
  public:
    WordSystem(int sites, bool nilpotent, std::vector<std::vector<Cyclotomic>> a)
        : sites_(sites), nilpotent_(nilpotent), a_(std::move(a)) {
        for (int x = 0; x < sites; ++x)
            for (int y = 0; y < sites; ++y) {
                if (x == y) continue;
                if (a_[static_cast<size_t>(x)][static_cast<size_t>(y)].is_zero())
                    throw std::domain_error("vanishing commutation datum");
                if (!(a_[static_cast<size_t>(x)][static_cast<size_t>(y)] *
                          a_[static_cast<size_t>(y)][static_cast<size_t>(x)] ==
                      Cyclotomic(1)))
                    throw std::domain_error("inconsistent commutation data: a(J,K) a(K,J) != 1");
            }
    }

    // a(J,K) = s for all J < K.
    static WordSystem uniform(int sites, const Cyclotomic& s, bool nilpotent) {
        std::vector<std::vector<Cyclotomic>> a(
            static_cast<size_t>(sites), std::vector<Cyclotomic>(static_cast<size_t>(sites), Cyclotomic(1)));
        for (int x = 0; x < sites; ++x)
            for (int y = x + 1; y < sites; ++y) {
                a[static_cast<size_t>(x)][static_cast<size_t>(y)] = s;
                a[static_cast<size_t>(y)][static_cast<size_t>(x)] = s.inverse();
            }
        return WordSystem(sites, nilpotent, std::move(a));
    }

    // D1 D2 = a D2 D1, D2 D3 = b D3 D2, D3 D1 = c D1 D3 (sites are 0-based).
    static WordSystem three_creation(const Cyclotomic& a, const Cyclotomic& b, const Cyclotomic& c,
                                     bool nilpotent) {
        std::vector<std::vector<Cyclotomic>> m(3, std::vector<Cyclotomic>(3, Cyclotomic(1)));
        m[0][1] = a;
        m[1][0] = a.inverse();
        m[1][2] = b;
        m[2][1] = b.inverse();
        m[2][0] = c;
        m[0][2] = c.inverse();
        return WordSystem(3, nilpotent, std::move(m));
    }

    int sites() const { return sites_; }
    bool nilpotent() const { return nilpotent_; }
    const Cyclotomic& a(int x, int y) const {
        return a_[static_cast<size_t>(x)][static_cast<size_t>(y)];
    }

    // Normal form of a single word: (scalar, ascending indices), or scalar 0.
    std::pair<Cyclotomic, std::vector<int>> normalize(std::vector<int> word) const {
        Cyclotomic scalar(1);
        // insertion sort; each adjacent swap of x > y picks up a(x, y)
        for (size_t i = 1; i < word.size(); ++i) {
            int x = word[i];
            size_t k = i;
            while (k > 0 && word[k - 1] > x) {
                scalar *= a(word[k - 1], x);
                word[k] = word[k - 1];
                --k;
            }
            word[k] = x;
        }
        if (nilpotent_)
            for (size_t i = 1; i < word.size(); ++i)
                if (word[i] == word[i - 1]) return {Cyclotomic(0), {}};
        return {std::move(scalar), std::move(word)};
    }

  private:
    int sites_;
    bool nilpotent_;
    std::vector<std::vector<Cyclotomic>> a_;
};

// Normal-form polynomial in the creation operators.
using WordPoly = std::map<std::vector<int>, Cyclotomic>;

inline void add_term(WordPoly& p, const std::vector<int>& w, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
}

inline WordPoly normalize_poly(const WordSystem& sys, const WordPoly& raw) {
    WordPoly out;
    for (const auto& [w, c] : raw) {
        auto [scalar, nf] = sys.normalize(w);
        if (!scalar.is_zero()) add_term(out, nf, scalar * c);
    }
    return out;
}

// Normal-form expansion of (sum_J D_J)^n.
inline WordPoly symmetrized_power(const WordSystem& sys, long n) {
    WordPoly poly;
    poly.emplace(std::vector<int>{}, Cyclotomic(1));
    for (long step = 0; step < n; ++step) {
        WordPoly next;
        for (const auto& [w, c] : poly)
            for (int site = 0; site < sys.sites(); ++site) {
                std::vector<int> ext = w;
                ext.push_back(site);
                auto [scalar, nf] = sys.normalize(std::move(ext));
                if (!scalar.is_zero()) add_term(next, nf, scalar * c);
            }
        poly = std::move(next);
        if (poly.empty()) break;
    }
    return poly;
}

enum class BraidGenerator { B12, B23 };
using PermutationGenerator = BraidGenerator;  // S12 / S23 exchange the same indices

inline std::vector<int> relabel(BraidGenerator g, std::vector<int> word) {
    int x = (g == BraidGenerator::B12) ? 0 : 1;
    for (auto& s : word) {
        if (s == x) s = x + 1;
        else if (s == x + 1) s = x;
    }
    return word;
}

// The index exchange is not an automorphism of the reordering relations
// (a(J,K) != a(K,J)), so it acts in two inequivalent ways:
//  - the permutation action relabels free word polynomials, under which
//    symmetric polynomials are fixed, and
//  - the braid action is the induced linear map on the normal-form basis,
//    B(w) = normal_form(relabel(w)) for sorted w.

// Free (unnormalized) expansion of (sum_J D_J)^n: every length-n word once.
inline WordPoly free_symmetrized_power(int sites, long n) {
    WordPoly poly;
    poly.emplace(std::vector<int>{}, Cyclotomic(1));
    for (long step = 0; step < n; ++step) {
        WordPoly next;
        for (const auto& [w, c] : poly)
            for (int site = 0; site < sites; ++site) {
                std::vector<int> ext = w;
                ext.push_back(site);
                add_term(next, ext, c);
            }
        poly = std::move(next);
    }
    return poly;
}

// Permutation action on free word polynomials: pure relabeling.
inline WordPoly permutation_action(BraidGenerator g, const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p) add_term(out, relabel(g, w), c);
    return out;
}

// Braid action on normal-form polynomials: index exchange, then reorder.
inline WordPoly braid_action(const WordSystem& sys, BraidGenerator g, const WordPoly& p) {
    WordPoly out;
    for (const auto& [w, c] : p) {
        auto [scalar, nf] = sys.normalize(relabel(g, w));
        if (!scalar.is_zero()) add_term(out, nf, scalar * c);
    }
    return out;
}

// The scalar lambda with action(word) = lambda * word, if the word is an
// eigenvector of the exchange.
inline std::pair<bool, Cyclotomic> braid_eigenvalue(const WordSystem& sys, BraidGenerator g,
                                                    const std::vector<int>& word) {
    auto [s0, nf0] = sys.normalize(word);
    WordPoly p;
    add_term(p, nf0, s0);
    WordPoly q = braid_action(sys, g, p);
    if (q.size() != 1 || p.size() != 1) return {false, Cyclotomic(0)};
    const auto& [wq, cq] = *q.begin();
    if (wq != p.begin()->first) return {false, Cyclotomic(0)};
    return {true, cq * p.begin()->second.inverse()};
}

}  // namespace colorlie::pascal
