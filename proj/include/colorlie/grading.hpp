#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "colorlie/cyclotomic.hpp"

namespace colorlie::grading {

// Element of Z2^p x Z3^q written as p bits followed by q trits.
struct GroupElement {
    std::vector<int> bits;   // values in {0,1}
    std::vector<int> trits;  // values in {0,1,2}

    static GroupElement identity(int p, int q) {
        return {std::vector<int>(static_cast<size_t>(p), 0),
                std::vector<int>(static_cast<size_t>(q), 0)};
    }

    GroupElement operator+(const GroupElement& o) const {
        GroupElement r = *this;
        for (size_t i = 0; i < r.bits.size(); ++i) r.bits[i] = (r.bits[i] + o.bits[i]) % 2;
        for (size_t i = 0; i < r.trits.size(); ++i) r.trits[i] = (r.trits[i] + o.trits[i]) % 3;
        return r;
    }

    GroupElement operator-() const {
        GroupElement r = *this;
        for (auto& b : r.bits) b = (2 - b) % 2;
        for (auto& t : r.trits) t = (3 - t) % 3;
        return r;
    }

    bool is_identity() const {
        for (int b : bits)
            if (b) return false;
        for (int t : trits)
            if (t) return false;
        return true;
    }

    bool operator==(const GroupElement& o) const = default;

    // "1_10" = one bit, two trits; the underscore is dropped when either
    // part is empty, and the identity of the trivial group prints as "e".
    std::string label() const {
        std::string s;
        for (int b : bits) s += static_cast<char>('0' + b);
        if (!bits.empty() && !trits.empty()) s += '_';
        for (int t : trits) s += static_cast<char>('0' + t);
        return s.empty() ? "e" : s;
    }
};

inline GroupElement concat(const GroupElement& a, const GroupElement& b) {
    GroupElement r = a;
    r.bits.insert(r.bits.end(), b.bits.begin(), b.bits.end());
    r.trits.insert(r.trits.end(), b.trits.begin(), b.trits.end());
    return r;
}

// Enumeration index: bits are the most significant digits, then trits.
inline long group_order(int p, int q) {
    long n = 1;
    for (int i = 0; i < p; ++i) n *= 2;
    for (int i = 0; i < q; ++i) n *= 3;
    return n;
}

inline long element_index(const GroupElement& g) {
    long idx = 0;
    for (int b : g.bits) idx = idx * 2 + b;
    for (int t : g.trits) idx = idx * 3 + t;
    return idx;
}

inline GroupElement element_at(int p, int q, long idx) {
    GroupElement g = GroupElement::identity(p, q);
    for (int i = q - 1; i >= 0; --i) {
        g.trits[static_cast<size_t>(i)] = static_cast<int>(idx % 3);
        idx /= 3;
    }
    for (int i = p - 1; i >= 0; --i) {
        g.bits[static_cast<size_t>(i)] = static_cast<int>(idx % 2);
        idx /= 2;
    }
    return g;
}

inline GroupElement parse_label(int p, int q, const std::string& label) {
    GroupElement g = GroupElement::identity(p, q);
    std::string digits;
    for (char c : label)
        if (c != '_') digits += c;
    if (label == "e") digits.clear();
    if (digits.size() != static_cast<size_t>(p + q))
        throw std::domain_error("sector label '" + label + "' does not fit group shape");
    for (int i = 0; i < p; ++i) g.bits[static_cast<size_t>(i)] = digits[static_cast<size_t>(i)] - '0';
    for (int i = 0; i < q; ++i)
        g.trits[static_cast<size_t>(i)] = digits[static_cast<size_t>(p + i)] - '0';
    return g;
}

struct AxiomViolation {
    int axiom;  // 1: eps(a,b)eps(b,a)=1, 2: eps(a,b+c)=eps(a,b)eps(a,c),
                // 3: eps(a+b,c)=eps(a,c)eps(b,c), 0: zero entry
    GroupElement alpha, beta;
    std::optional<GroupElement> gamma;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

enum class ColorClass { lie_algebra, lie_superalgebra };

// Commutation factor table eps : Gamma x Gamma -> C*.
// Entry lookup is by the enumeration index of (row alpha, column beta).
class FactorTable {
  public:
    FactorTable(int p, int q)
        : p_(p), q_(q), n_(group_order(p, q)),
          entries_(static_cast<size_t>(n_ * n_), Cyclotomic(1)) {}

    int p() const { return p_; }
    int q() const { return q_; }
    long size() const { return n_; }

    const Cyclotomic& at(const GroupElement& a, const GroupElement& b) const {
        return entries_[static_cast<size_t>(element_index(a) * n_ + element_index(b))];
    }
    const Cyclotomic& at(long i, long k) const {
        return entries_[static_cast<size_t>(i * n_ + k)];
    }
    void set(const GroupElement& a, const GroupElement& b, Cyclotomic v) {
        entries_[static_cast<size_t>(element_index(a) * n_ + element_index(b))] = std::move(v);
    }
    void set(long i, long k, Cyclotomic v) {
        entries_[static_cast<size_t>(i * n_ + k)] = std::move(v);
    }

    GroupElement element(long idx) const { return element_at(p_, q_, idx); }

    ColorClass classify() const {
        for (long i = 0; i < n_; ++i)
            if (at(i, i) == Cyclotomic(-1)) return ColorClass::lie_superalgebra;
        return ColorClass::lie_algebra;
    }

    std::string canonical_key() const {
        std::string s;
        for (const auto& e : entries_) {
            s += e.canonical_key();
            s += ';';
        }
        return s;
    }

    bool operator==(const FactorTable& o) const {
        return p_ == o.p_ && q_ == o.q_ && entries_ == o.entries_;
    }

  private:
    int p_, q_;
    long n_;
    std::vector<Cyclotomic> entries_;
};

inline ValidationReport validate_table(const FactorTable& t) {
    ValidationReport rep;
    const long n = t.size();
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k)
            if (t.at(i, k).is_zero()) {
                rep.violations.push_back({0, t.element(i), t.element(k), std::nullopt});
                return rep;  // zero entries poison every product; stop here
            }
    const Cyclotomic one(1);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k)
            if (!(t.at(i, k) * t.at(k, i) == one))
                rep.violations.push_back({1, t.element(i), t.element(k), std::nullopt});
    for (long i = 0; i < n; ++i) {
        GroupElement a = t.element(i);
        for (long k = 0; k < n; ++k) {
            GroupElement b = t.element(k);
            for (long l = 0; l < n; ++l) {
                GroupElement c = t.element(l);
                if (!(t.at(a, b + c) == t.at(i, k) * t.at(i, l)))
                    rep.violations.push_back({2, a, b, c});
                if (!(t.at(a + b, c) == t.at(i, l) * t.at(k, l)))
                    rep.violations.push_back({3, a, b, c});
            }
        }
    }
    return rep;
}

// Z2 x Gamma iteration: the block scheme [[U, U], [U, dU]] with d = +-1.
// The new bit is prepended, so rows/columns run 0|Gamma then 1|Gamma.
inline FactorTable iterate_z2(const FactorTable& t, const Cyclotomic& delta) {
    if (!(delta == Cyclotomic(1) || delta == Cyclotomic(-1)))
        throw std::domain_error("iterate_z2 requires delta in {+1,-1}");
    FactorTable out(t.p() + 1, t.q());
    const long n = t.size();
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long i = 0; i < n; ++i)
                for (long k = 0; k < n; ++k) {
                    Cyclotomic v = t.at(i, k);
                    if (a == 1 && b == 1) v = v * delta;
                    out.set(a * n + i, b * n + k, std::move(v));
                }
    return out;
}

// Z3 x Gamma iteration: nine copies of U. The new trit is prepended.
inline FactorTable iterate_z3(const FactorTable& t) {
    FactorTable out(t.p(), t.q() + 1);
    // The new trit changes nothing: every block holds a copy of U.
    for (long i = 0; i < out.size(); ++i) {
        GroupElement a0 = out.element(i);
        a0.trits.erase(a0.trits.begin());
        for (long k = 0; k < out.size(); ++k) {
            GroupElement b0 = out.element(k);
            b0.trits.erase(b0.trits.begin());
            out.set(i, k, t.at(element_index(a0), element_index(b0)));
        }
    }
    return out;
}

// The 9x9 Z3 x Z3 commutation factor array: eps(a, b) = j^(a1*b2 - a2*b1).
inline FactorTable canonical_z3z3(const Cyclotomic& j) {
    if (!(j.pow(3) == Cyclotomic(1)))
        throw std::domain_error("canonical_z3z3 requires j^3 = 1");
    FactorTable t(0, 2);
    for (long i = 0; i < 9; ++i) {
        GroupElement a = t.element(i);
        for (long k = 0; k < 9; ++k) {
            GroupElement b = t.element(k);
            long e = a.trits[0] * b.trits[1] - a.trits[1] * b.trits[0];
            t.set(i, k, j.pow(((e % 3) + 3) % 3));
        }
    }
    return t;
}

// The 18x18 Z2 x Z3 x Z3 array, i.e. the Z2 iteration of the 9x9 array.
inline FactorTable canonical_z2z3z3(const Cyclotomic& j, const Cyclotomic& delta) {
    return iterate_z2(canonical_z3z3(j), delta);
}

// Builds the full table from the values on a generating set by bilinearity:
// eps(sum m_a g_a, sum n_b g_b) = prod eps(g_a, g_b)^(m_a n_b).
inline FactorTable table_from_generator_entries(int p, int q,
                                                const std::vector<std::vector<Cyclotomic>>& gen) {
    FactorTable t(p, q);
    const int r = p + q;
    const long n = t.size();
    for (long i = 0; i < n; ++i) {
        GroupElement a = t.element(i);
        std::vector<int> ma(a.bits.begin(), a.bits.end());
        ma.insert(ma.end(), a.trits.begin(), a.trits.end());
        for (long k = 0; k < n; ++k) {
            GroupElement b = t.element(k);
            std::vector<int> nb(b.bits.begin(), b.bits.end());
            nb.insert(nb.end(), b.trits.begin(), b.trits.end());
            Cyclotomic v(1);
            for (int x = 0; x < r; ++x) {
                if (ma[static_cast<size_t>(x)] == 0) continue;
                for (int y = 0; y < r; ++y) {
                    if (nb[static_cast<size_t>(y)] == 0) continue;
                    v *= gen[static_cast<size_t>(x)][static_cast<size_t>(y)].pow(
                        ma[static_cast<size_t>(x)] * nb[static_cast<size_t>(y)]);
                }
            }
            t.set(i, k, std::move(v));
        }
    }
    return t;
}

// Exhaustive determination of every consistent commutation factor table.
// Bilinearity reduces the unknowns to the generator entries; the generator
// pair (g_a, g_b) entry must be a root of unity of level dividing
// gcd(ord g_a, ord g_b), and diagonal entries must additionally be +-1.
inline std::vector<FactorTable> search_tables(int p, int q, long max_order,
                                              long budget = 1000000) {
    if (group_order(p, q) > 18)
        throw std::domain_error("search_tables limited to |Gamma| <= 18");
    const int r = p + q;
    auto gen_order = [&](int x) { return x < p ? 2L : 3L; };

    // Choice list per (a, b) with a <= b; the transpose entry is the inverse.
    struct Slot {
        int a, b;
        std::vector<Cyclotomic> choices;
    };
    std::vector<Slot> slots;
    long space = 1;
    for (int a = 0; a < r; ++a) {
        for (int b = a; b < r; ++b) {
            long g = std::gcd(gen_order(a), gen_order(b));
            std::vector<Cyclotomic> choices;
            for (long k = 1; k <= g; ++k) {
                if (g % k != 0 || k > max_order) continue;
                for (long e = 0; e < k; ++e) {
                    Cyclotomic root = root_of_unity(k, e);
                    if (level(root).value != k) continue;
                    if (a == b && !(root == Cyclotomic(1) || root == Cyclotomic(-1))) continue;
                    choices.push_back(std::move(root));
                }
            }
            space *= static_cast<long>(choices.size());
            if (space > budget || space <= 0)
                throw std::domain_error("search space exceeds budget " + std::to_string(budget));
            slots.push_back({a, b, std::move(choices)});
        }
    }

    std::vector<FactorTable> found;
    std::set<std::string> seen;
    std::vector<size_t> pick(slots.size(), 0);
    while (true) {
        std::vector<std::vector<Cyclotomic>> gen(
            static_cast<size_t>(r), std::vector<Cyclotomic>(static_cast<size_t>(r), Cyclotomic(1)));
        for (size_t s = 0; s < slots.size(); ++s) {
            const auto& slot = slots[s];
            const Cyclotomic& v = slot.choices[pick[s]];
            gen[static_cast<size_t>(slot.a)][static_cast<size_t>(slot.b)] = v;
            gen[static_cast<size_t>(slot.b)][static_cast<size_t>(slot.a)] = v.inverse();
        }
        FactorTable t = table_from_generator_entries(p, q, gen);
        if (validate_table(t).ok()) {
            auto key = t.canonical_key();
            if (seen.insert(key).second) found.push_back(std::move(t));
        }
        // advance the mixed-radix counter
        size_t s = 0;
        for (; s < slots.size(); ++s) {
            if (++pick[s] < slots[s].choices.size()) break;
            pick[s] = 0;
        }
        if (s == slots.size()) break;
    }
    return found;
}

namespace detail {

// All invertible matrices over F2 (size p) and F3 (size q), columns = images
// of the standard generators.
inline std::vector<std::vector<std::vector<int>>> invertible_matrices(int n, int mod) {
    std::vector<std::vector<std::vector<int>>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    long total = 1;
    for (int i = 0; i < n * n; ++i) total *= mod;
    for (long code = 0; code < total; ++code) {
        long c = code;
        std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
        for (auto& row : m)
            for (auto& x : row) {
                x = static_cast<int>(c % mod);
                c /= mod;
            }
        // Gaussian elimination mod a prime to test invertibility.
        auto a = m;
        bool inv = true;
        for (int col = 0; col < n && inv; ++col) {
            int piv = -1;
            for (int row = col; row < n; ++row)
                if (a[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                    piv = row;
                    break;
                }
            if (piv < 0) {
                inv = false;
                break;
            }
            std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
            int lead = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
            int lead_inv = 1;
            while ((lead * lead_inv) % mod != 1) ++lead_inv;
            for (int row = col + 1; row < n; ++row) {
                int f = (a[static_cast<size_t>(row)][static_cast<size_t>(col)] * lead_inv) % mod;
                if (f == 0) continue;
                for (int cc = 0; cc < n; ++cc)
                    a[static_cast<size_t>(row)][static_cast<size_t>(cc)] =
                        ((a[static_cast<size_t>(row)][static_cast<size_t>(cc)] -
                          f * a[static_cast<size_t>(col)][static_cast<size_t>(cc)]) % mod + mod) % mod;
            }
        }
        if (inv) out.push_back(std::move(m));
    }
    return out;
}

inline GroupElement apply_automorphism(const std::vector<std::vector<int>>& bit_mat,
                                       const std::vector<std::vector<int>>& trit_mat,
                                       const GroupElement& g) {
    GroupElement r = g;
    for (size_t i = 0; i < r.bits.size(); ++i) {
        int v = 0;
        for (size_t k = 0; k < r.bits.size(); ++k) v += bit_mat[i][k] * g.bits[k];
        r.bits[i] = v % 2;
    }
    for (size_t i = 0; i < r.trits.size(); ++i) {
        int v = 0;
        for (size_t k = 0; k < r.trits.size(); ++k) v += trit_mat[i][k] * g.trits[k];
        r.trits[i] = v % 3;
    }
    return r;
}

}  // namespace detail

// Tables related by a grading-group automorphism (a relabeling of sectors)
// are merged into one class. The class representative is the table whose
// serialized form is lexicographically minimal over the automorphism orbit.
inline std::vector<std::vector<FactorTable>> classify_inequivalent(
    const std::vector<FactorTable>& tables) {
    std::vector<std::vector<FactorTable>> classes;
    if (tables.empty()) return classes;
    const int p = tables.front().p();
    const int q = tables.front().q();
    for (const auto& t : tables)
        if (t.p() != p || t.q() != q)
            throw std::domain_error("classify_inequivalent requires one common group");

    auto bit_mats = detail::invertible_matrices(p, 2);
    auto trit_mats = detail::invertible_matrices(q, 3);

    std::map<std::string, size_t> class_of;
    for (const auto& t : tables) {
        std::string best;
        for (const auto& bm : bit_mats) {
            for (const auto& tm : trit_mats) {
                FactorTable mapped(p, q);
                for (long i = 0; i < t.size(); ++i) {
                    GroupElement a = detail::apply_automorphism(bm, tm, t.element(i));
                    for (long k = 0; k < t.size(); ++k) {
                        GroupElement b = detail::apply_automorphism(bm, tm, t.element(k));
                        mapped.set(i, k, t.at(a, b));
                    }
                }
                std::string key = mapped.canonical_key();
                if (best.empty() || key < best) best = std::move(key);
            }
        }
        auto it = class_of.find(best);
        if (it == class_of.end()) {
            class_of.emplace(std::move(best), classes.size());
            classes.push_back({t});
        } else {
            classes[it->second].push_back(t);
        }
    }
    return classes;
}

}  // namespace colorlie::grading
