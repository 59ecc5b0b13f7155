#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "colorlie/fock.hpp"

using namespace colorlie;
using namespace colorlie::fock;

namespace {
Cyclotomic j1() { return root_of_unity(3, 1); }

bool states_equal(const FockState& a, const FockState& b) {
    return a.coefficients() == b.coefficients();
}

FockState scaled(const FockState& s, const Cyclotomic& c) {
    FockState out(s.modes(), s.n_max());
    for (const auto& [k, v] : s.coefficients()) out.add(k, c * v);
    return out;
}
}  // namespace

TEST_CASE("two-mode oscillator basics") {
    OscillatorModel model(j1(), 8);
    FockState vac = model.vacuum();
    CHECK(model.apply_annihilation(0, vac).is_zero());
    CHECK(model.apply_annihilation(1, vac).is_zero());
    CHECK(model.apply_hamiltonian(vac).is_zero());

    // H |2,1> = 3 |2,1>
    FockState s21 = model.occupation_state({2, 1, 0, 0});
    CHECK(states_equal(model.apply_hamiltonian(s21), scaled(s21, Cyclotomic(3))));

    // orthonormality: <n'm'|nm> = delta delta, exactly, below the edge
    for (int n = 0; n + 0 <= 7; ++n)
        for (int m = 0; n + m <= 7; ++m) {
            FockState a = model.occupation_state({n, m, 0, 0});
            for (int n2 = 0; n2 <= 7; ++n2)
                for (int m2 = 0; n2 + m2 <= 7; ++m2) {
                    FockState b = model.occupation_state({n2, m2, 0, 0});
                    Cyclotomic ip = a.inner(b);
                    if (n == n2 && m == m2) {
                        CHECK(ip == Cyclotomic(Rational(a.norm_squared())));
                        CHECK_FALSE(ip.is_zero());
                    } else {
                        CHECK(ip.is_zero());
                    }
                }
        }

    CHECK_THROWS_AS(OscillatorModel(Cyclotomic(2), 8), std::domain_error);
}

TEST_CASE("symmetrized states match the printed components") {
    OscillatorModel model(j1(), 8);

    FockState psi0 = model.symmetrized_state(0);
    REQUIRE(psi0.coefficients().size() == 1);
    CHECK(psi0.coefficients().begin()->first == FockKey{{0, 0, 0, 0}, 0});

    // |psi_1> ~ j^2 (x v7 + y v9); the canonical phase strips the j^2.
    FockState psi1 = model.symmetrized_state(1).canonical_phase();
    REQUIRE(psi1.coefficients().size() == 2);
    CHECK(psi1.coefficients().at({{1, 0, 0, 0}, 6}) == Cyclotomic(1));
    CHECK(psi1.coefficients().at({{0, 1, 0, 0}, 8}) == Cyclotomic(1));

    // |psi_2>: components on v4, v5, v6 with coefficients 1, j^2, 1 + j^2.
    FockState psi2 = model.symmetrized_state(2);
    REQUIRE(psi2.coefficients().size() == 3);
    CHECK(psi2.coefficients().at({{2, 0, 0, 0}, 3}) == Cyclotomic(1));
    CHECK(psi2.coefficients().at({{0, 2, 0, 0}, 4}) == j1() * j1());
    CHECK(psi2.coefficients().at({{1, 1, 0, 0}, 5}) == Cyclotomic(1) + j1() * j1());

    // N_j = 1 / sqrt(z + 5): norm^2 = 5 at z = 0 and 8 at z = 3.
    CHECK(psi2.norm_squared() == Rational(5));
    OscillatorModel bos(Cyclotomic(1), 8);
    CHECK(bos.symmetrized_state(2).norm_squared() == Rational(8));

    // H |psi_n> = n |psi_n> exactly through n_max - 2.
    for (const auto* m : {&model, &bos})
        for (long n = 0; n <= 6; ++n) {
            FockState s = m->symmetrized_state(n);
            CHECK(states_equal(m->apply_hamiltonian(s), scaled(s, Cyclotomic(n))));
        }

    CHECK_THROWS_AS(model.symmetrized_state(9), std::domain_error);
}

TEST_CASE("four-mode oscillator energies") {
    OscillatorModel model(j1(), 8, 4);
    for (const std::array<int, 4>& occ :
         {std::array<int, 4>{1, 1, 1, 1}, {2, 0, 1, 0}, {0, 3, 0, 2}, {1, 0, 0, 0}}) {
        FockState s = model.occupation_state(occ);
        long e = occ[0] + occ[1] + occ[2] + occ[3];
        CHECK(states_equal(model.apply_hamiltonian(s), scaled(s, Cyclotomic(e))));
    }
}

TEST_CASE("density closed form at E = 2") {
    for (const Cyclotomic& j : {Cyclotomic(1), j1()}) {
        OscillatorModel model(j, 8);
        DensityField field(model.symmetrized_state(2));
        const double z = (j == Cyclotomic(1)) ? 3.0 : 0.0;
        auto closed = [&](double x, double y) {
            double a = 2 * x * x - 1, b = 2 * y * y - 1;
            return std::exp(-(x * x + y * y)) / ((z + 5) * M_PI) *
                   (a * a + b * b + 4 * (z + 1) * x * x * y * y);
        };
        for (int i = 0; i < 100; ++i)
            for (int k = 0; k < 100; ++k) {
                double x = -3.0 + 6.0 * i / 99.0;
                double y = -3.0 + 6.0 * k / 99.0;
                CHECK(std::abs(field(x, y) - closed(x, y)) < 1e-12);
                CHECK(std::abs(field(x, y) - field.hermite_path(x, y)) < 1e-12);
            }
    }

    OscillatorModel bos(Cyclotomic(1), 8), pb(j1(), 8);
    DensityField fb(bos.symmetrized_state(2)), fp(pb.symmetrized_state(2));
    CHECK(std::abs(fb(0, 0) - 1.0 / (4 * M_PI)) < 1e-15);
    CHECK(std::abs(fp(0, 0) - 2.0 / (5 * M_PI)) < 1e-15);
}

TEST_CASE("densities normalize to one", "[quadrature]") {
    for (const Cyclotomic& j : {Cyclotomic(1), j1()}) {
        OscillatorModel model(j, 8);
        for (long n = 0; n <= 6; ++n) {
            DensityField field(model.symmetrized_state(n));
            double gh = field.integral_gauss_hermite(64);
            double mom = field.integral_moments();
            CHECK(std::abs(gh - 1.0) < 1e-9);
            CHECK(std::abs(mom - 1.0) < 1e-9);
            CHECK(std::abs(gh - mom) < 1e-12);
        }
    }
}

TEST_CASE("density grids") {
    OscillatorModel bos(Cyclotomic(1), 8), pb(j1(), 8);
    DensityField fb(bos.symmetrized_state(2)), fp(pb.symmetrized_state(2));

    auto grid_b = density_grid(fb, 2.0, 81);
    auto best = std::max_element(grid_b.begin(), grid_b.end(),
                                 [](const GridPoint& a, const GridPoint& b) { return a.p < b.p; });
    CHECK(std::abs(std::abs(best->x) - 1.05) < 0.051);
    CHECK(std::abs(std::abs(best->y) - 1.05) < 0.051);

    auto grid_p = density_grid(fp, 2.0, 81);
    auto best_p = std::max_element(grid_p.begin(), grid_p.end(),
                                   [](const GridPoint& a, const GridPoint& b) { return a.p < b.p; });
    CHECK(best_p->x == Catch::Approx(0.0).margin(1e-12));
    CHECK(best_p->y == Catch::Approx(0.0).margin(1e-12));

    // Riemann sum close to 1 on a wide grid
    double sum = 0.0;
    const int res = 400;
    const double step = 8.0 / (res - 1);
    for (const auto& pt : density_grid(fb, 4.0, res)) sum += pt.p * step * step;
    CHECK(std::abs(sum - 1.0) < 1e-3);

    // an all-zero state gives an all-zero grid
    FockState zero(2, 8);
    DensityField fz(zero);
    for (const auto& pt : density_grid(fz, 2.0, 11)) CHECK(pt.p == 0.0);

    CHECK_THROWS_AS(density_grid(fb, 2.0, 1), std::domain_error);
}

TEST_CASE("local maxima via Newton ascent") {
    OscillatorModel bos(Cyclotomic(1), 8), pb(j1(), 8);
    DensityField fb(bos.symmetrized_state(2)), fp(pb.symmetrized_state(2));

    auto rb = find_local_maxima(fb, default_seed_grid());
    REQUIRE(rb.maxima.size() == 5);
    // four equal off-origin maxima first, then the origin
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(rb.maxima[static_cast<size_t>(k)].value - 0.098055) < 1e-4);
        CHECK(std::abs(std::abs(rb.maxima[static_cast<size_t>(k)].x) - 1.05244) < 1e-4);
        CHECK(std::abs(std::abs(rb.maxima[static_cast<size_t>(k)].y) - 1.05244) < 1e-4);
    }
    CHECK(std::abs(rb.maxima[4].x) < 1e-8);
    CHECK(std::abs(rb.maxima[4].y) < 1e-8);
    CHECK(std::abs(rb.maxima[4].value - 1.0 / (4 * M_PI)) < 1e-9);

    auto rp = find_local_maxima(fp, default_seed_grid());
    REQUIRE(rp.maxima.size() == 5);
    CHECK(std::abs(rp.maxima[0].value - 2.0 / (5 * M_PI)) < 1e-9);
    CHECK(std::abs(rp.maxima[0].x) < 1e-8);
    for (int k = 1; k < 5; ++k) {
        const auto& m = rp.maxima[static_cast<size_t>(k)];
        CHECK(std::abs(m.value - 0.089194) < 1e-4);
        // on the axes at distance ~1.53819
        double r = std::hypot(m.x, m.y);
        CHECK(std::abs(r - 1.53819) < 1e-4);
        CHECK(std::min(std::abs(m.x), std::abs(m.y)) < 1e-6);
    }

    // parity symmetry: the maxima set is closed under both sign flips
    for (const auto& m : rb.maxima) {
        bool found = false;
        for (const auto& m2 : rb.maxima)
            if (std::hypot(m2.x + m.x, m2.y - m.y) < 1e-6) found = true;
        CHECK(found);
    }
}

TEST_CASE("density comparison verdicts") {
    CHECK(compare_densities(0) == DensityVerdict::equal);
    CHECK(compare_densities(1) == DensityVerdict::equal);
    CHECK(compare_densities(2) == DensityVerdict::different);
}
