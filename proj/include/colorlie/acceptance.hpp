#pragma once

#include <chrono>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "colorlie/algebra.hpp"
#include "colorlie/braid.hpp"
#include "colorlie/cyclotomic.hpp"
#include "colorlie/fock.hpp"
#include "colorlie/gmat.hpp"
#include "colorlie/grading.hpp"
#include "colorlie/pascal.hpp"

namespace colorlie::acceptance {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

namespace detail {

struct Scope {
    CriterionResult& res;
    std::ostringstream msg;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    explicit Scope(CriterionResult& r) : res(r) {}
    void require(bool ok, const std::string& what) {
        if (!ok) {
            res.passed = false;
            if (!msg.str().empty()) msg << "; ";
            msg << what;
        }
    }
    ~Scope() {
        res.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        res.detail = res.passed ? "ok" : msg.str();
    }
};

inline Cyclotomic j1() { return root_of_unity(3, 1); }

}  // namespace detail

// 1. Exhaustive classification: 3 tables / 2 classes over Z3^2 and
//    6 tables / 4 classes over Z2 x Z3^2, within 60 s.
inline CriterionResult criterion_classification() {
    CriterionResult res{1, "classification of commutation factor tables", true, "", 0};
    detail::Scope sc(res);
    auto z3z3 = grading::search_tables(0, 2, 3);
    sc.require(z3z3.size() == 3, "expected 3 tables over Z3xZ3");
    sc.require(grading::classify_inequivalent(z3z3).size() == 2,
               "expected 2 classes over Z3xZ3");
    auto z2z3z3 = grading::search_tables(1, 2, 6);
    sc.require(z2z3z3.size() == 6, "expected 6 tables over Z2xZ3xZ3");
    sc.require(grading::classify_inequivalent(z2z3z3).size() == 4,
               "expected 4 classes over Z2xZ3xZ3");
    std::set<std::string> keys;
    for (const auto& t : z3z3) keys.insert(t.canonical_key());
    for (const Cyclotomic& j : {Cyclotomic(1), detail::j1(), detail::j1().pow(2)})
        sc.require(keys.count(grading::canonical_z3z3(j).canonical_key()) == 1,
                   "search output differs from the canonical tables");
    sc.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - sc.start)
                       .count() < 60.0,
               "runtime exceeded 60 s");
    return res;
}

// 2. Table fidelity: canonical tables validate with zero violations and ten
//    hand-transcribed entries of each printed array match exactly.
inline CriterionResult criterion_table_fidelity() {
    CriterionResult res{2, "canonical table fidelity", true, "", 0};
    detail::Scope sc(res);
    const Cyclotomic j = detail::j1(), d(-1);
    grading::FactorTable t9 = grading::canonical_z3z3(j);
    grading::FactorTable t18 = grading::canonical_z2z3z3(j, d);
    sc.require(grading::validate_table(t9).ok(), "9x9 table violates the axioms");
    sc.require(grading::validate_table(t18).ok(), "18x18 table violates the axioms");

    auto e9 = [&](const char* a, const char* b) {
        return t9.at(grading::parse_label(0, 2, a), grading::parse_label(0, 2, b));
    };
    const std::vector<std::tuple<const char*, const char*, Cyclotomic>> spots9{
        {"01", "10", j.pow(2)}, {"02", "11", j},          {"11", "12", j},
        {"12", "21", Cyclotomic(1)}, {"21", "02", j},     {"22", "20", j.pow(2)},
        {"10", "22", j.pow(2)}, {"20", "11", j.pow(2)},   {"11", "11", Cyclotomic(1)},
        {"00", "22", Cyclotomic(1)}};
    for (const auto& [a, b, v] : spots9)
        sc.require(e9(a, b) == v, std::string("9x9 entry (") + a + "," + b + ")");

    auto e18 = [&](const char* a, const char* b) {
        return t18.at(grading::parse_label(1, 2, a), grading::parse_label(1, 2, b));
    };
    const std::vector<std::tuple<const char*, const char*, Cyclotomic>> spots18{
        {"1_10", "1_01", d * j},  {"1_01", "0_10", j.pow(2)}, {"1_01", "1_20", d * j},
        {"1_11", "1_22", d},      {"1_11", "0_21", j.pow(2)}, {"0_21", "1_12", Cyclotomic(1)},
        {"1_00", "0_12", Cyclotomic(1)}, {"1_00", "1_21", d}, {"0_22", "1_11", Cyclotomic(1)},
        {"1_20", "1_10", d}};
    for (const auto& [a, b, v] : spots18)
        sc.require(e18(a, b) == v, std::string("18x18 entry (") + a + "," + b + ")");
    return res;
}

// 3. Exact axiom checks for the two 72x72 parafermionic models, within 120 s.
inline CriterionResult criterion_algebra_axioms() {
    CriterionResult res{3, "eps-skew, eps-Jacobi, metaabelianess for s=3 and s=6", true, "", 0};
    detail::Scope sc(res);
    for (const char* name : {"hpf_s3", "hpf_s6"}) {
        algebra::AlgebraSpec alg = algebra::build_algebra(name, 0);
        sc.require(algebra::check_epsilon_skew(alg).ok(), std::string(name) + " skew");
        sc.require(algebra::check_epsilon_jacobi(alg).ok(), std::string(name) + " jacobi");
        sc.require(algebra::check_metaabelian(alg).ok(), std::string(name) + " metaabelian");
    }
    sc.require(std::chrono::duration<double>(std::chrono::steady_clock::now() - sc.start)
                       .count() < 120.0,
               "runtime exceeded 120 s");
    return res;
}

// 4. Structure constants of the parabosonic and mixed algebras at n_max = 6.
inline CriterionResult criterion_structure_constants() {
    CriterionResult res{4, "Heisenberg structure constants at n_max = 6", true, "", 0};
    detail::Scope sc(res);
    algebra::AlgebraSpec pb = algebra::build_algebra("hpb4", 6);
    sc.require(algebra::check_structure(pb).ok(), "hpb4 bracket ledger");
    sc.require(algebra::check_epsilon_skew(pb).ok(), "hpb4 skew");
    algebra::AlgebraSpec pf = algebra::build_algebra("hpf44", 6);
    sc.require(algebra::check_structure(pf).ok(), "hpf44 bracket ledger");
    return res;
}

// 5. Nilpotent creation operators and the w cancellations.
inline CriterionResult criterion_nilpotency() {
    CriterionResult res{5, "nilpotency and the w(a,b,c) cancellation", true, "", 0};
    detail::Scope sc(res);
    const Cyclotomic j = detail::j1();
    for (const auto& [name, labels] :
         std::vector<std::pair<const char*, std::vector<std::string>>>{
             {"hpf44", {"F1d", "F2d", "F3d", "F4d"}},
             {"hpf_s6", {"F1d", "F2d", "F3d"}},
             {"hpf_s3", {"P1d", "P2d", "P3d"}},
             {"hpf_star3", {"p1d", "p2d", "p3d"}}}) {
        algebra::AlgebraSpec alg = algebra::build_algebra(name, 2);
        for (const auto& label : labels) {
            const auto& m = alg.find(label).internal;
            sc.require((m * m).is_zero(), std::string(name) + ": " + label + " not nilpotent");
        }
    }
    sc.require(pascal::w_factor(j, j, j.pow(2)).is_zero(), "w(j1,j1,j1^2) != 0");
    sc.require(pascal::w_factor(-j, -j, -j) == Cyclotomic(3) * (Cyclotomic(1) - j.pow(2)),
               "w(-j1,-j1,-j1) != 3(1-j1^2)");
    return res;
}

// 6. Spectra: distinguishable degeneracies (1,3,3,1); indistinguishable
//    towers of 4 (s=6) and 3 (s=3) levels; chain spectra 0..min(N, s-1).
inline CriterionResult criterion_spectra() {
    CriterionResult res{6, "multi-particle spectra and truncations", true, "", 0};
    detail::Scope sc(res);
    const std::map<long, long> expected{{0, 1}, {1, 3}, {2, 3}, {3, 1}};
    algebra::AlgebraSpec s6 = algebra::build_algebra("hpf_s6", 0);
    algebra::AlgebraSpec s3 = algebra::build_algebra("hpf_s3", 0);
    sc.require(algebra::distinguishable_spectrum(s6) == expected, "s=6 degeneracies");
    sc.require(algebra::distinguishable_spectrum(s3) == expected, "s=3 degeneracies");
    sc.require(algebra::indistinguishable_levels(s6) == std::vector<long>{0, 1, 2, 3},
               "s=6 indistinguishable levels");
    sc.require(algebra::indistinguishable_levels(s3) == std::vector<long>{0, 1, 2},
               "s=3 indistinguishable levels");
    for (long n = 1; n <= 8; ++n) {
        for (long s = 2; s <= 8; ++s) {
            std::vector<long> want;
            for (long e = 0; e <= std::min(n, s - 1); ++e) want.push_back(e);
            sc.require(braid::chain_spectrum(n, s).levels == want, "chain spectrum N=" +
                           std::to_string(n) + " s=" + std::to_string(s));
        }
        std::vector<long> full;
        for (long e = 0; e <= n; ++e) full.push_back(e);
        sc.require(braid::chain_spectrum(n, braid::kInfiniteLevel).levels == full,
                   "chain spectrum N=" + std::to_string(n) + " s=inf");
    }
    return res;
}

// 7. The symbolic triangle rows and their specializations.
inline CriterionResult criterion_triangle() {
    CriterionResult res{7, "noncommutative Pascal triangle", true, "", 0};
    detail::Scope sc(res);
    using pascal::JZPoly;
    auto N = [](long n) { return JZPoly(n); };
    const JZPoly J = JZPoly::j(), Z = JZPoly::z();
    const std::vector<std::vector<JZPoly>> printed = {
        {N(1)},
        {N(1), N(1)},
        {N(1), Z - J, N(1)},
        {N(1), Z, Z, N(1)},
        {N(1), Z + N(1), Z * (J + N(1)), Z + N(1), N(1)},
        {N(1), N(2) * Z - J, Z * (N(2) * J + N(1)) + N(1), Z * (N(2) * J + N(1)) + N(1),
         N(2) * Z - J, N(1)},
        {N(1), N(2) * Z, Z * (N(2) * Z - J), Z * Z + Z * (J + N(2)) + N(2), Z * (N(2) * Z - J),
         N(2) * Z, N(1)},
    };
    for (size_t n = 0; n < printed.size(); ++n) {
        pascal::TriangleRow row = pascal::triangle_row(static_cast<long>(n));
        for (size_t k = 0; k <= n; ++k)
            sc.require(row.coefficients[k] == printed[n][k],
                       "row " + std::to_string(n) + " entry " + std::to_string(k));
    }
    for (long n = 0; n <= 8; ++n) {
        auto row = pascal::specialize_row(pascal::triangle_row(n), Cyclotomic(1));
        Rational c(1);
        for (long k = 0; k <= n; ++k) {
            sc.require(row[static_cast<size_t>(k)] == Cyclotomic(c),
                       "binomial specialization failed");
            c = c * Rational(n - k) / Rational(k + 1);
        }
    }
    auto row2 = pascal::specialize_row(pascal::triangle_row(2), detail::j1());
    sc.require(row2[1] == -detail::j1(), "row 2 middle entry at (j1, z=0)");
    return res;
}

// 8. Densities: closed-form values, maxima, normalization, two paths, verdicts.
inline CriterionResult criterion_densities() {
    CriterionResult res{8, "parabosonic probability densities", true, "", 0};
    detail::Scope sc(res);
    fock::OscillatorModel bos(Cyclotomic(1), 8), pb(detail::j1(), 8);
    fock::DensityField fb(bos.symmetrized_state(2)), fp(pb.symmetrized_state(2));

    sc.require(std::abs(fb(0, 0) - 1.0 / (4 * M_PI)) < 1e-15, "p_bos;2(0,0) != 1/(4 pi)");
    sc.require(std::abs(fp(0, 0) - 2.0 / (5 * M_PI)) < 1e-15, "p_pb;2(0,0) != 2/(5 pi)");

    auto rb = fock::find_local_maxima(fb, fock::default_seed_grid());
    sc.require(rb.maxima.size() == 5, "bosonic density must have 5 local maxima");
    if (rb.maxima.size() == 5) {
        sc.require(std::abs(rb.maxima[0].value - 0.098055) < 1e-4, "bosonic off-origin value");
        sc.require(std::abs(std::abs(rb.maxima[0].x) - 1.05244) < 1e-4 &&
                       std::abs(std::abs(rb.maxima[0].y) - 1.05244) < 1e-4,
                   "bosonic off-origin position");
    }
    auto rp = fock::find_local_maxima(fp, fock::default_seed_grid());
    sc.require(rp.maxima.size() == 5, "parabosonic density must have 5 local maxima");
    if (rp.maxima.size() == 5) {
        sc.require(std::abs(rp.maxima[0].value - 2.0 / (5 * M_PI)) < 1e-9,
                   "parabosonic origin value");
        sc.require(std::abs(rp.maxima[1].value - 0.089194) < 1e-4, "parabosonic axis value");
        double r = std::hypot(rp.maxima[1].x, rp.maxima[1].y);
        sc.require(std::abs(r - 1.53819) < 1e-4, "parabosonic axis position");
    }

    for (const auto* f : {&fb, &fp}) {
        sc.require(std::abs(f->integral_gauss_hermite(64) - 1.0) < 1e-9,
                   "Gauss-Hermite normalization");
        sc.require(std::abs(f->integral_moments() - 1.0) < 1e-9, "moment normalization");
    }
    for (long n = 0; n <= 6; ++n) {
        fock::DensityField f(pb.symmetrized_state(n));
        sc.require(std::abs(f.integral_gauss_hermite(64) - 1.0) < 1e-9,
                   "normalization at n = " + std::to_string(n));
    }

    bool paths_agree = true;
    for (int i = 0; i < 100; ++i)
        for (int k = 0; k < 100; ++k) {
            double x = -3.0 + 6.0 * i / 99.0, y = -3.0 + 6.0 * k / 99.0;
            paths_agree &= std::abs(fb(x, y) - fb.hermite_path(x, y)) < 1e-12;
            paths_agree &= std::abs(fp(x, y) - fp.hermite_path(x, y)) < 1e-12;
        }
    sc.require(paths_agree, "closed form and Hermite expansion disagree beyond 1e-12");

    sc.require(fock::compare_densities(0) == fock::DensityVerdict::equal, "n=0 verdict");
    sc.require(fock::compare_densities(1) == fock::DensityVerdict::equal, "n=1 verdict");
    sc.require(fock::compare_densities(2) == fock::DensityVerdict::different, "n=2 verdict");
    return res;
}

// 9. Braid machinery: relation, powers, levels, intertwiner, reconstruction.
inline CriterionResult criterion_braid() {
    CriterionResult res{9, "braided Majorana qubit reconstruction", true, "", 0};
    detail::Scope sc(res);
    // five distinct exact points settle a degree <= 3 polynomial identity
    for (const Cyclotomic& t : {Cyclotomic(1), Cyclotomic(-1), root_of_unity(3, 1),
                                root_of_unity(4, 1), root_of_unity(5, 1)})
        sc.require(braid::braid_relation_holds(t), "braid relation at an exact point");
    const gmat::GradedMatrix gamma = gmat::building_block("gamma").without_grade();
    for (long s = 2; s <= 12; ++s) {
        sc.require(braid::b_matrix(braid::t_parameter(s)).power(s) ==
                       gmat::GradedMatrix::identity(4),
                   "B_t^s != I at s = " + std::to_string(s));
        sc.require(level(braid::minus_t(s)).value == s, "level(-t_s) != s");
        gmat::GradedMatrix w = braid::intertwiner(s);
        sc.require(w * gamma == braid::minus_t(s) * (gamma * w), "intertwiner relation");
    }
    auto r3 = braid::reconstruct_color_bracket(3);
    sc.require(r3.ok() && r3.epsilon == detail::j1().pow(2), "s=3 reconstruction");
    auto r6 = braid::reconstruct_color_bracket(6);
    sc.require(r6.ok() && r6.epsilon == -detail::j1(), "s=6 reconstruction");
    return res;
}

// 10. Cross-module oracle: word-system truncation points equal chain levels.
inline CriterionResult criterion_cross_module() {
    CriterionResult res{10, "truncation combinatorics vs chain spectra", true, "", 0};
    detail::Scope sc(res);
    for (long n = 1; n <= 6; ++n)
        for (long s = 2; s <= 6; ++s) {
            pascal::WordSystem sys = pascal::WordSystem::uniform(
                static_cast<int>(n), braid::minus_t(s).inverse(), true);
            long word_top = 0;
            for (long e = 1; e <= n + 1; ++e)
                if (!pascal::symmetrized_power(sys, e).empty()) word_top = e;
            sc.require(word_top == braid::chain_spectrum(n, s).levels.back(),
                       "mismatch at N = " + std::to_string(n) + ", s = " + std::to_string(s));
        }
    return res;
}

inline std::vector<CriterionResult> run_all() {
    return {criterion_classification(), criterion_table_fidelity(), criterion_algebra_axioms(),
            criterion_structure_constants(), criterion_nilpotency(), criterion_spectra(),
            criterion_triangle(), criterion_densities(), criterion_braid(),
            criterion_cross_module()};
}

}  // namespace colorlie::acceptance
