#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "colorlie/cyclotomic.hpp"
#include "colorlie/gmat.hpp"
#include "colorlie/grading.hpp"

namespace colorlie::algebra {

using gmat::GradedMatrix;
using grading::FactorTable;
using grading::GroupElement;

// <A, B> = AB - eps(alpha, beta) BA, computed both directly and through the
// commutator/anticommutator interpolation; the two routes must agree.
inline GradedMatrix graded_bracket(const GradedMatrix& a, const GradedMatrix& b,
                                   const FactorTable& t) {
    if (!a.grade() || !b.grade())
        throw std::domain_error("graded_bracket requires homogeneous operands");
    const Cyclotomic eps = t.at(*a.grade(), *b.grade());
    GradedMatrix direct = a * b - eps * (b * a);
    const Cyclotomic half(Rational(1, 2));
    GradedMatrix comm = a * b - b * a;
    GradedMatrix anti = a * b + b * a;
    GradedMatrix mixed = half * (Cyclotomic(1) + eps) * comm + half * (Cyclotomic(1) - eps) * anti;
    if (!(direct == mixed)) throw std::logic_error("bracket interpolation mismatch");
    return direct.with_grade(*a.grade() + *b.grade());
}

// Truncated one-mode ladder matrices in the integer normalization
// a|n> = n|n-1>, ad|n> = |n+1>; [a, ad] = 1 holds below the truncation edge.
struct OscillatorRep {
    long n_max;
    GradedMatrix lower, raise;

    explicit OscillatorRep(long n) : n_max(n), lower(n + 1), raise(n + 1) {
        for (long k = 0; k < n; ++k) {
            raise.set(k + 1, k, Cyclotomic(1));
            lower.set(k, k + 1, Cyclotomic(k + 1));
        }
    }
};

enum class Ladder { none, create, annihilate };

struct Generator {
    std::string label;
    GroupElement grade;
    GradedMatrix internal;  // finite matrix factor (includes any fermion part)
    Ladder ladder = Ladder::none;
    int mode = -1;  // bosonic mode index when ladder != none
};

// Expected value of <X, Y> as a linear combination of generators.
struct BracketExpectation {
    std::string x, y;
    std::vector<std::pair<Cyclotomic, std::string>> value;  // empty = zero
};

// A named set of graded generators together with its commutation factor
// table and the declared structure constants. Bosonic generators act as
// internal matrix (x) truncated ladder; identities are asserted only on
// basis states far enough from the truncation edge.
struct AlgebraSpec {
    std::string name;
    FactorTable table{0, 0};
    std::vector<Generator> generators;
    std::vector<BracketExpectation> expectations;
    int boson_modes = 0;
    long n_max = 0;

    const Generator& find(const std::string& label) const {
        for (const auto& g : generators)
            if (g.label == label) return g;
        throw std::domain_error("unknown generator '" + label + "'");
    }
};

struct CheckReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

struct MinimalReport {
    std::map<std::string, int> sector_counts;
    std::vector<std::string> empty_sectors;
    bool minimal = false;
};

// Worker count for the triple-loop checks; COLORLIE_THREADS overrides.
inline int thread_budget() {
    if (const char* env = std::getenv("COLORLIE_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

template <typename Fn>
void parallel_for(long count, Fn&& fn) {
    const int workers = std::min<long>(thread_budget(), count);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

struct Term {
    long col;
    Cyclotomic coeff;
};
using Terms = std::vector<Term>;

inline void merge_terms(Terms& t) {
    if (t.empty()) return;
    if (t.size() == 1) {
        if (t.front().coeff.is_zero()) t.clear();
        return;
    }
    std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) { return a.col < b.col; });
    Terms out;
    out.reserve(t.size());
    for (auto& x : t) {
        if (!out.empty() && out.back().col == x.col)
            out.back().coeff += x.coeff;
        else
            out.push_back(std::move(x));
    }
    t.clear();
    for (auto& x : out)
        if (!x.coeff.is_zero()) t.push_back(std::move(x));
}

// Column-wise evaluator over the composite basis
// (internal index) x (bosonic occupation kets with total quanta <= n_max).
class Evaluator {
  public:
    explicit Evaluator(const AlgebraSpec& alg) : alg_(alg) {
        internal_dim_ = alg.generators.empty() ? 1 : alg.generators.front().internal.dim();
        if (alg.boson_modes > 0) {
            std::array<int, 4> occ{0, 0, 0, 0};
            enumerate(occ, 0, alg.boson_modes, alg.n_max);
        } else {
            kets_.push_back({0, 0, 0, 0});
        }
        for (size_t r = 0; r < kets_.size(); ++r) rank_[pack(kets_[r])] = static_cast<long>(r);
        // generator columns over the internal factor, cached once
        for (const auto& g : alg.generators) {
            std::vector<Terms> cols(static_cast<size_t>(internal_dim_));
            for (long c = 0; c < internal_dim_; ++c)
                for (auto& [row, val] : g.internal.column(c))
                    cols[static_cast<size_t>(c)].push_back({row, val});
            internal_cols_.push_back(std::move(cols));
        }
    }

    long dim() const { return internal_dim_ * static_cast<long>(kets_.size()); }

    // Columns whose bosonic total leaves `margin` quanta of headroom, so a
    // product of `margin` creation operators cannot reach the edge.
    std::vector<long> protected_columns(long margin) const {
        std::vector<long> out;
        for (long c = 0; c < dim(); ++c) {
            if (alg_.boson_modes == 0) {
                out.push_back(c);
                continue;
            }
            const auto& occ = kets_[static_cast<size_t>(c % static_cast<long>(kets_.size()))];
            long total = occ[0] + occ[1] + occ[2] + occ[3];
            if (total <= alg_.n_max - margin) out.push_back(c);
        }
        return out;
    }

    Terms apply(size_t gen, long col) const {
        const long nk = static_cast<long>(kets_.size());
        const long internal_col = col / nk;
        const long ket_rank = col % nk;
        const Generator& g = alg_.generators[gen];
        Terms out;
        for (const auto& [irow, ival] : internal_cols_[gen][static_cast<size_t>(internal_col)]) {
            if (g.ladder == Ladder::none) {
                out.push_back({irow * nk + ket_rank, ival});
                continue;
            }
            auto occ = kets_[static_cast<size_t>(ket_rank)];
            if (g.ladder == Ladder::create) {
                long total = occ[0] + occ[1] + occ[2] + occ[3];
                if (total >= alg_.n_max) continue;  // truncation edge
                occ[static_cast<size_t>(g.mode)] += 1;
                out.push_back({irow * nk + rank(occ), ival});
            } else {
                int n = occ[static_cast<size_t>(g.mode)];
                if (n == 0) continue;
                occ[static_cast<size_t>(g.mode)] -= 1;
                out.push_back({irow * nk + rank(occ), ival * Cyclotomic(n)});
            }
        }
        return out;
    }

    Terms apply(size_t gen, const Terms& in) const {
        Terms out;
        for (const auto& t : in)
            for (auto& r : apply(gen, t.col)) out.push_back({r.col, r.coeff * t.coeff});
        merge_terms(out);
        return out;
    }

    // <G_i, G_k> applied to a basis column.
    Terms bracket(size_t i, size_t k, long col) const {
        const Cyclotomic eps =
            alg_.table.at(alg_.generators[i].grade, alg_.generators[k].grade);
        Terms out = apply(i, apply(k, col));
        for (auto& t : apply(k, apply(i, col))) out.push_back({t.col, -(eps * t.coeff)});
        merge_terms(out);
        return out;
    }

    // Nested bracket <G_i, <G_k, G_l>>; the inner bracket carries the grade
    // sum of its arguments.
    Terms nested(size_t i, size_t k, size_t l, long col) const {
        const GroupElement inner_grade = alg_.generators[k].grade + alg_.generators[l].grade;
        const Cyclotomic eps = alg_.table.at(alg_.generators[i].grade, inner_grade);
        Terms out = apply(i, bracket(k, l, col));
        for (auto& t : bracket(k, l, apply(i, col))) out.push_back({t.col, -(eps * t.coeff)});
        merge_terms(out);
        return out;
    }

    // True when <G_i, G_k> vanishes on every column with the given headroom.
    bool bracket_is_zero(size_t i, size_t k, long margin) const {
        for (long col : protected_columns(margin))
            if (!bracket(i, k, col).empty()) return false;
        return true;
    }

  private:
    static uint32_t pack(const std::array<int, 4>& occ) {
        return static_cast<uint32_t>(occ[0]) | (static_cast<uint32_t>(occ[1]) << 8) |
               (static_cast<uint32_t>(occ[2]) << 16) | (static_cast<uint32_t>(occ[3]) << 24);
    }
    long rank(const std::array<int, 4>& occ) const { return rank_.at(pack(occ)); }

    void enumerate(std::array<int, 4>& occ, int mode, int modes, long budget) {
        if (mode == modes) {
            kets_.push_back(occ);
            return;
        }
        for (long n = 0; n <= budget; ++n) {
            occ[static_cast<size_t>(mode)] = static_cast<int>(n);
            enumerate(occ, mode + 1, modes, budget - n);
        }
        occ[static_cast<size_t>(mode)] = 0;
    }

    const AlgebraSpec& alg_;
    long internal_dim_;
    std::vector<std::array<int, 4>> kets_;
    std::unordered_map<uint32_t, long> rank_;
    std::vector<std::vector<Terms>> internal_cols_;
};

}  // namespace detail

// eps-skew symmetry: <A,B> + eps(alpha,beta) <B,A> = 0 for all pairs.
inline CheckReport check_epsilon_skew(const AlgebraSpec& alg) {
    detail::Evaluator ev(alg);
    CheckReport rep;
    std::mutex mtx;
    auto cols = ev.protected_columns(2);
    const long n = static_cast<long>(alg.generators.size());
    detail::parallel_for(n * n, [&](long idx) {
        const size_t i = static_cast<size_t>(idx / n), k = static_cast<size_t>(idx % n);
        const Cyclotomic eps = alg.table.at(alg.generators[i].grade, alg.generators[k].grade);
        for (long col : cols) {
            detail::Terms sum = ev.bracket(i, k, col);
            for (auto& t : ev.bracket(k, i, col)) sum.push_back({t.col, eps * t.coeff});
            detail::merge_terms(sum);
            if (!sum.empty()) {
                std::lock_guard<std::mutex> lock(mtx);
                rep.violations.push_back("skew: <" + alg.generators[i].label + "," +
                                         alg.generators[k].label + ">");
                break;
            }
        }
    });
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

// eps-Jacobi: eps(c,a)<A,<B,C>> + eps(a,b)<B,<C,A>> + eps(b,c)<C,<A,B>> = 0.
// Terms whose inner bracket vanishes identically are skipped; the inner
// statuses are precomputed per ordered pair.
inline CheckReport check_epsilon_jacobi(const AlgebraSpec& alg) {
    detail::Evaluator ev(alg);
    CheckReport rep;
    std::mutex mtx;
    const size_t n = alg.generators.size();
    std::vector<std::vector<bool>> zero(n, std::vector<bool>(n));
    detail::parallel_for(static_cast<long>(n * n), [&](long idx) {
        const size_t i = static_cast<size_t>(idx) / n, k = static_cast<size_t>(idx) % n;
        zero[i][k] = ev.bracket_is_zero(i, k, 2);
    });

    auto cols = ev.protected_columns(3);
    auto eps = [&](size_t i, size_t k) {
        return alg.table.at(alg.generators[i].grade, alg.generators[k].grade);
    };
    detail::parallel_for(static_cast<long>(n * n * n), [&](long idx) {
        const size_t a = static_cast<size_t>(idx) / (n * n);
        const size_t b = (static_cast<size_t>(idx) / n) % n;
        const size_t c = static_cast<size_t>(idx) % n;
        if (zero[b][c] && zero[c][a] && zero[a][b]) return;
        bool bad = false;
        for (long col : cols) {
            detail::Terms sum;
            if (!zero[b][c]) {
                const Cyclotomic f = eps(c, a);
                for (auto& t : ev.nested(a, b, c, col)) sum.push_back({t.col, f * t.coeff});
            }
            if (!zero[c][a]) {
                const Cyclotomic f = eps(a, b);
                for (auto& t : ev.nested(b, c, a, col)) sum.push_back({t.col, f * t.coeff});
            }
            if (!zero[a][b]) {
                const Cyclotomic f = eps(b, c);
                for (auto& t : ev.nested(c, a, b, col)) sum.push_back({t.col, f * t.coeff});
            }
            detail::merge_terms(sum);
            if (!sum.empty()) {
                bad = true;
                break;
            }
        }
        if (bad) {
            std::lock_guard<std::mutex> lock(mtx);
            rep.violations.push_back("jacobi: (" + alg.generators[a].label + "," +
                                     alg.generators[b].label + "," + alg.generators[c].label +
                                     ")");
        }
    });
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

// Declared structure constants: <X, Y> equals the listed combination.
inline CheckReport check_structure(const AlgebraSpec& alg) {
    detail::Evaluator ev(alg);
    CheckReport rep;
    auto cols = ev.protected_columns(2);
    auto index_of = [&](const std::string& label) {
        for (size_t i = 0; i < alg.generators.size(); ++i)
            if (alg.generators[i].label == label) return i;
        throw std::domain_error("expectation references unknown generator " + label);
    };
    std::mutex mtx;
    detail::parallel_for(static_cast<long>(alg.expectations.size()), [&](long idx) {
        const auto& ex = alg.expectations[static_cast<size_t>(idx)];
        size_t i = index_of(ex.x), k = index_of(ex.y);
        bool bad = false;
        for (long col : cols) {
            detail::Terms sum = ev.bracket(i, k, col);
            for (const auto& [coeff, label] : ex.value)
                for (auto& t : ev.apply(index_of(label), col))
                    sum.push_back({t.col, -(coeff * t.coeff)});
            detail::merge_terms(sum);
            if (!sum.empty()) {
                bad = true;
                break;
            }
        }
        if (bad) {
            std::lock_guard<std::mutex> lock(mtx);
            rep.violations.push_back("structure: <" + ex.x + "," + ex.y + ">");
        }
    });
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

// Graded metaabelianess: <X, <Y, Z>> = 0 for every generator triple.
inline CheckReport check_metaabelian(const AlgebraSpec& alg) {
    detail::Evaluator ev(alg);
    CheckReport rep;
    std::mutex mtx;
    const size_t n = alg.generators.size();
    std::vector<std::vector<bool>> zero(n, std::vector<bool>(n));
    detail::parallel_for(static_cast<long>(n * n), [&](long idx) {
        const size_t i = static_cast<size_t>(idx) / n, k = static_cast<size_t>(idx) % n;
        zero[i][k] = ev.bracket_is_zero(i, k, 2);
    });
    auto cols = ev.protected_columns(3);
    detail::parallel_for(static_cast<long>(n * n * n), [&](long idx) {
        const size_t x = static_cast<size_t>(idx) / (n * n);
        const size_t y = (static_cast<size_t>(idx) / n) % n;
        const size_t z = static_cast<size_t>(idx) % n;
        if (zero[y][z]) return;
        for (long col : cols) {
            if (ev.nested(x, y, z, col).empty()) continue;
            std::lock_guard<std::mutex> lock(mtx);
            rep.violations.push_back("metaabelian: <" + alg.generators[x].label + ",<" +
                                     alg.generators[y].label + "," + alg.generators[z].label +
                                     ">>");
            break;
        }
    });
    std::sort(rep.violations.begin(), rep.violations.end());
    return rep;
}

// Per-sector generator counts; minimal means one generator in every sector.
inline MinimalReport check_minimal(const AlgebraSpec& alg) {
    MinimalReport rep;
    for (long i = 0; i < alg.table.size(); ++i) rep.sector_counts[alg.table.element(i).label()] = 0;
    for (const auto& g : alg.generators) rep.sector_counts[g.grade.label()] += 1;
    rep.minimal = true;
    for (const auto& [label, count] : rep.sector_counts) {
        if (count == 0) rep.empty_sectors.push_back(label);
        if (count != 1) rep.minimal = false;
    }
    return rep;
}

// The printed A4 assignment in the parabosonic algebra multiplies C_02 by a1;
// that breaks <A4, A4d> = C, so the a4 reading is the default and the printed
// variant stays constructible for comparison.
enum class A4Convention { a4, printed_a1 };

namespace detail {

inline GroupElement bits_trits(std::initializer_list<int> bits, std::initializer_list<int> trits) {
    return GroupElement{std::vector<int>(bits), std::vector<int>(trits)};
}

// 8x8 string realization of three fermionic oscillators:
// f1d = gamma(x)I(x)I, f2d = X(x)gamma(x)I, f3d = X(x)X(x)gamma.
inline GradedMatrix fermion_string(int site, int sites, bool dagger) {
    using gmat::building_block;
    using gmat::tensor;
    GradedMatrix m = GradedMatrix::identity(1);
    for (int k = 0; k < sites; ++k) {
        GradedMatrix factor = k < site   ? building_block("X")
                              : k == site ? building_block(dagger ? "gamma" : "beta")
                                          : building_block("I2");
        m = (k == 0) ? factor : tensor(m, factor);
    }
    return m.without_grade();
}

// 8x8 realization of three commuting parafermionic oscillators:
// p_id = I(x)..(x)gamma(x)..(x)I with no parity string.
inline GradedMatrix plain_string(int site, int sites, bool dagger) {
    using gmat::building_block;
    using gmat::tensor;
    GradedMatrix m = GradedMatrix::identity(1);
    for (int k = 0; k < sites; ++k) {
        GradedMatrix factor = k == site ? building_block(dagger ? "gamma" : "beta")
                                        : building_block("I2");
        m = (k == 0) ? factor : tensor(m, factor);
    }
    return m.without_grade();
}

inline void expect_pairs(AlgebraSpec& alg, const std::vector<std::string>& ann,
                         const std::vector<std::string>& cre, const std::string& central,
                         const Cyclotomic& reversed_coeff) {
    // <X_I, X_Jd> = delta_IJ central; the reversed order picks up the stated
    // coefficient; everything else vanishes.
    std::vector<std::string> all;
    for (const auto& g : alg.generators) all.push_back(g.label);
    for (const auto& x : all)
        for (const auto& y : all) {
            BracketExpectation ex{x, y, {}};
            for (size_t i = 0; i < ann.size(); ++i) {
                if (x == ann[i] && y == cre[i]) ex.value = {{Cyclotomic(1), central}};
                if (x == cre[i] && y == ann[i]) ex.value = {{reversed_coeff, central}};
            }
            alg.expectations.push_back(std::move(ex));
        }
}

}  // namespace detail

// The six concrete instances. Bosonic ones require n_max >= 2; the matrix
// ones ignore n_max.
inline AlgebraSpec build_algebra(const std::string& name, long n_max,
                                 A4Convention a4conv = A4Convention::a4) {
    using detail::bits_trits;
    using gmat::building_block;
    using gmat::c_matrix;
    using gmat::tensor;
    const Cyclotomic j = root_of_unity(3, 1);
    const Cyclotomic minus(-1);
    AlgebraSpec alg;
    alg.name = name;

    auto c_grade = [&](int a, int b) { return bits_trits({}, {a, b}); };

    if (name == "hpb4" || name == "hpf44") {
        if (n_max < 2) throw std::domain_error("bosonic instances require n_max >= 2");
        alg.boson_modes = 4;
        alg.n_max = n_max;
    }

    if (name == "hpb4") {
        alg.table = grading::canonical_z3z3(j);
        // creation sector pairs: (20,10), (22,11), (21,12), (02,01)
        const int sectors[4][2][2] = {{{2, 0}, {1, 0}}, {{2, 2}, {1, 1}}, {{2, 1}, {1, 2}}, {{0, 2}, {0, 1}}};
        alg.generators.push_back({"C", c_grade(0, 0), c_matrix(0, 0), Ladder::none, -1});
        for (int i = 0; i < 4; ++i) {
            const auto& s = sectors[i];
            int ann_mode = (i == 3 && a4conv == A4Convention::printed_a1) ? 0 : i;
            alg.generators.push_back({"A" + std::to_string(i + 1), c_grade(s[0][0], s[0][1]),
                                      c_matrix(s[0][0], s[0][1]), Ladder::annihilate, ann_mode});
            alg.generators.push_back({"A" + std::to_string(i + 1) + "d", c_grade(s[1][0], s[1][1]),
                                      c_matrix(s[1][0], s[1][1]), Ladder::create, i});
        }
        detail::expect_pairs(alg, {"A1", "A2", "A3", "A4"}, {"A1d", "A2d", "A3d", "A4d"}, "C",
                             minus);
        return alg;
    }

    if (name == "hfer3") {
        alg.table = grading::iterate_z2(FactorTable(0, 0), minus);
        alg.generators.push_back(
            {"c", bits_trits({0}, {}), GradedMatrix::identity(8), Ladder::none, -1});
        for (int i = 0; i < 3; ++i) {
            alg.generators.push_back({"f" + std::to_string(i + 1), bits_trits({1}, {}),
                                      detail::fermion_string(i, 3, false), Ladder::none, -1});
            alg.generators.push_back({"f" + std::to_string(i + 1) + "d", bits_trits({1}, {}),
                                      detail::fermion_string(i, 3, true), Ladder::none, -1});
        }
        detail::expect_pairs(alg, {"f1", "f2", "f3"}, {"f1d", "f2d", "f3d"}, "c", Cyclotomic(1));
        return alg;
    }

    if (name == "hpf44") {
        alg.table = grading::canonical_z2z3z3(j, minus);
        const GradedMatrix i2 = GradedMatrix::identity(2);
        const GradedMatrix i16 = GradedMatrix::identity(16);
        const GradedMatrix y = building_block("Y").without_grade();
        auto bos_internal = [&](int a, int b) { return tensor(tensor(i2, c_matrix(a, b)), i16); };
        auto fer_internal = [&](int a, int b, int site, bool dag) {
            return tensor(tensor(y, c_matrix(a, b)), detail::fermion_string(site, 4, dag));
        };
        alg.generators.push_back({"C", bits_trits({0}, {0, 0}), bos_internal(0, 0), Ladder::none, -1});
        const int sectors[4][2][2] = {{{2, 0}, {1, 0}}, {{2, 2}, {1, 1}}, {{2, 1}, {1, 2}}, {{0, 2}, {0, 1}}};
        for (int i = 0; i < 4; ++i) {
            const auto& s = sectors[i];
            int ann_mode = (i == 3 && a4conv == A4Convention::printed_a1) ? 0 : i;
            alg.generators.push_back({"A" + std::to_string(i + 1), bits_trits({0}, {s[0][0], s[0][1]}),
                                      bos_internal(s[0][0], s[0][1]), Ladder::annihilate, ann_mode});
            alg.generators.push_back({"A" + std::to_string(i + 1) + "d",
                                      bits_trits({0}, {s[1][0], s[1][1]}),
                                      bos_internal(s[1][0], s[1][1]), Ladder::create, i});
            alg.generators.push_back({"F" + std::to_string(i + 1), bits_trits({1}, {s[0][0], s[0][1]}),
                                      fer_internal(s[0][0], s[0][1], i, false), Ladder::none, -1});
            alg.generators.push_back({"F" + std::to_string(i + 1) + "d",
                                      bits_trits({1}, {s[1][0], s[1][1]}),
                                      fer_internal(s[1][0], s[1][1], i, true), Ladder::none, -1});
        }
        alg.expectations.clear();
        // one ledger covering both oscillator families
        std::vector<std::string> all;
        for (const auto& g : alg.generators) all.push_back(g.label);
        for (const auto& x : all)
            for (const auto& y2 : all) {
                BracketExpectation ex{x, y2, {}};
                for (int i = 1; i <= 4; ++i) {
                    std::string ai = "A" + std::to_string(i), fi = "F" + std::to_string(i);
                    if (x == ai && y2 == ai + "d") ex.value = {{Cyclotomic(1), "C"}};
                    if (x == ai + "d" && y2 == ai) ex.value = {{minus, "C"}};
                    if (x == fi && y2 == fi + "d") ex.value = {{Cyclotomic(1), "C"}};
                    if (x == fi + "d" && y2 == fi) ex.value = {{Cyclotomic(1), "C"}};
                }
                alg.expectations.push_back(std::move(ex));
            }
        return alg;
    }

    if (name == "hpf_s6") {
        alg.table = grading::canonical_z2z3z3(j, minus);
        auto internal = [&](int a, int b, int site, int dag) {
            GradedMatrix f = dag < 0 ? GradedMatrix::identity(8)
                                     : detail::fermion_string(site, 3, dag != 0);
            return tensor(f, c_matrix(a, b));
        };
        alg.generators.push_back({"C", bits_trits({0}, {0, 0}), internal(0, 0, 0, -1), Ladder::none, -1});
        const int sectors[3][2][2] = {{{2, 0}, {1, 0}}, {{2, 2}, {1, 1}}, {{0, 2}, {0, 1}}};
        for (int i = 0; i < 3; ++i) {
            const auto& s = sectors[i];
            alg.generators.push_back({"F" + std::to_string(i + 1), bits_trits({1}, {s[0][0], s[0][1]}),
                                      internal(s[0][0], s[0][1], i, 0), Ladder::none, -1});
            alg.generators.push_back({"F" + std::to_string(i + 1) + "d",
                                      bits_trits({1}, {s[1][0], s[1][1]}),
                                      internal(s[1][0], s[1][1], i, 1), Ladder::none, -1});
        }
        detail::expect_pairs(alg, {"F1", "F2", "F3"}, {"F1d", "F2d", "F3d"}, "C", Cyclotomic(1));
        return alg;
    }

    if (name == "hpf_star3") {
        FactorTable t(0, 0);
        for (int i = 0; i < 3; ++i) t = grading::iterate_z2(t, minus);
        alg.table = t;
        alg.generators.push_back(
            {"c", bits_trits({0, 0, 0}, {}), GradedMatrix::identity(8), Ladder::none, -1});
        for (int i = 0; i < 3; ++i) {
            std::vector<int> bits{0, 0, 0};
            bits[static_cast<size_t>(i)] = 1;
            alg.generators.push_back({"p" + std::to_string(i + 1), GroupElement{bits, {}},
                                      detail::plain_string(i, 3, false), Ladder::none, -1});
            alg.generators.push_back({"p" + std::to_string(i + 1) + "d", GroupElement{bits, {}},
                                      detail::plain_string(i, 3, true), Ladder::none, -1});
        }
        detail::expect_pairs(alg, {"p1", "p2", "p3"}, {"p1d", "p2d", "p3d"}, "c", Cyclotomic(1));
        return alg;
    }

    if (name == "hpf_s3") {
        FactorTable t = grading::canonical_z3z3(j);
        for (int i = 0; i < 3; ++i) t = grading::iterate_z2(t, minus);
        alg.table = t;
        auto internal = [&](int a, int b, int site, int dag) {
            GradedMatrix f = dag < 0 ? GradedMatrix::identity(8)
                                     : detail::plain_string(site, 3, dag != 0);
            return tensor(f, c_matrix(a, b));
        };
        alg.generators.push_back(
            {"C", bits_trits({0, 0, 0}, {0, 0}), internal(0, 0, 0, -1), Ladder::none, -1});
        const int sectors[3][2][2] = {{{2, 0}, {1, 0}}, {{2, 2}, {1, 1}}, {{0, 2}, {0, 1}}};
        for (int i = 0; i < 3; ++i) {
            const auto& s = sectors[i];
            std::vector<int> bits{0, 0, 0};
            bits[static_cast<size_t>(i)] = 1;
            alg.generators.push_back({"P" + std::to_string(i + 1),
                                      GroupElement{bits, {s[0][0], s[0][1]}},
                                      internal(s[0][0], s[0][1], i, 0), Ladder::none, -1});
            alg.generators.push_back({"P" + std::to_string(i + 1) + "d",
                                      GroupElement{bits, {s[1][0], s[1][1]}},
                                      internal(s[1][0], s[1][1], i, 1), Ladder::none, -1});
        }
        detail::expect_pairs(alg, {"P1", "P2", "P3"}, {"P1d", "P2d", "P3d"}, "C", Cyclotomic(1));
        return alg;
    }

    throw std::domain_error("unknown algebra instance '" + name + "'");
}

inline AlgebraSpec build_algebra(const std::string& name) { return build_algebra(name, 6); }

// Energies of the 2^k distinguishable multi-parafermion states
// (F1d)^{n1} (F2d)^{n2} (F3d)^{n3} |vac> with n_i in {0,1}, as a map
// energy -> degeneracy. The vacuum is the first basis column.
inline std::map<long, long> distinguishable_spectrum(const AlgebraSpec& alg) {
    if (alg.boson_modes != 0) throw std::domain_error("matrix instances only");
    std::vector<const Generator*> cre, ann;
    for (const auto& g : alg.generators) {
        if (g.label == "C" || g.label == "c") continue;
        if (g.label.back() == 'd')
            cre.push_back(&g);
        else
            ann.push_back(&g);
    }
    const long dim = alg.generators.front().internal.dim();
    GradedMatrix h(dim);
    for (size_t i = 0; i < cre.size(); ++i) h = h + cre[i]->internal * ann[i]->internal;

    std::map<long, long> degeneracy;
    const size_t k = cre.size();
    for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
        GradedMatrix op = GradedMatrix::identity(dim);
        long energy = 0;
        for (size_t i = 0; i < k; ++i)
            if (mask & (size_t{1} << i)) {
                op = cre[i]->internal * op;
                ++energy;
            }
        // state = op * v1; verify H state = energy * state and state != 0
        std::vector<Cyclotomic> state(static_cast<size_t>(dim), Cyclotomic(0));
        for (auto& [row, val] : op.column(0)) state[static_cast<size_t>(row)] = val;
        bool zero = true;
        for (const auto& v : state) zero &= v.is_zero();
        if (zero) throw std::logic_error("distinguishable basis state vanished");
        for (long r = 0; r < dim; ++r) {
            Cyclotomic hv(0);
            for (long c2 = 0; c2 < dim; ++c2) {
                if (h.at(r, c2).is_zero() || state[static_cast<size_t>(c2)].is_zero()) continue;
                hv += h.at(r, c2) * state[static_cast<size_t>(c2)];
            }
            if (!(hv == Cyclotomic(energy) * state[static_cast<size_t>(r)]))
                throw std::logic_error("not an energy eigenstate");
        }
        degeneracy[energy] += 1;
    }
    return degeneracy;
}

// Energies of the indistinguishable tower (F1d + F2d + F3d)^n |vac>,
// following powers until the state vanishes exactly.
inline std::vector<long> indistinguishable_levels(const AlgebraSpec& alg) {
    if (alg.boson_modes != 0) throw std::domain_error("matrix instances only");
    const long dim = alg.generators.front().internal.dim();
    GradedMatrix sum(dim);
    for (const auto& g : alg.generators) {
        if (g.label == "C" || g.label == "c" || g.label.back() != 'd') continue;
        sum = sum + g.internal;
    }
    std::vector<Cyclotomic> state(static_cast<size_t>(dim), Cyclotomic(0));
    state[0] = Cyclotomic(1);
    std::vector<long> levels{0};
    for (long n = 1; n <= dim; ++n) {
        std::vector<Cyclotomic> next(static_cast<size_t>(dim), Cyclotomic(0));
        bool nonzero = false;
        for (long c = 0; c < dim; ++c) {
            if (state[static_cast<size_t>(c)].is_zero()) continue;
            for (auto& [row, val] : sum.column(c)) {
                next[static_cast<size_t>(row)] += val * state[static_cast<size_t>(c)];
            }
        }
        for (const auto& v : next) nonzero |= !v.is_zero();
        if (!nonzero) break;
        levels.push_back(n);
        state = std::move(next);
    }
    return levels;
}

}  // namespace colorlie::algebra
