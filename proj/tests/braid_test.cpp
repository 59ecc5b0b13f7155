#include <catch2/catch_amalgamated.hpp>

#include "colorlie/braid.hpp"
#include "colorlie/pascal.hpp"

using namespace colorlie;
using namespace colorlie::braid;
using gmat::GradedMatrix;

namespace {
Cyclotomic j1() { return root_of_unity(3, 1); }
}  // namespace

TEST_CASE("B_t matrix and braid relation") {
    Cyclotomic t = root_of_unity(5, 1);
    GradedMatrix b = b_matrix(t);
    CHECK(b.at(0, 0) == Cyclotomic(1));
    CHECK(b.at(1, 1) == Cyclotomic(1) - t);
    CHECK(b.at(1, 2) == t);
    CHECK(b.at(2, 1) == Cyclotomic(1));
    CHECK(b.at(3, 3) == -t);
    CHECK(b.at(2, 2).is_zero());
    CHECK_THROWS_AS(b_matrix(Cyclotomic(0)), std::domain_error);

    // Every entry of both sides is a polynomial of degree <= 3 in t, so
    // agreement at five distinct exact values proves the identity in t.
    for (const Cyclotomic& point :
         {Cyclotomic(1), Cyclotomic(-1), root_of_unity(3, 1), root_of_unity(4, 1),
          root_of_unity(5, 1)})
        CHECK(braid_relation_holds(point));
}

TEST_CASE("roots of unity t_s") {
    CHECK(t_parameter(2) == Cyclotomic(1));
    CHECK(t_parameter(kInfiniteLevel) == Cyclotomic(-1));
    CHECK_THROWS_AS(t_parameter(1), std::domain_error);

    for (long s = 2; s <= 12; ++s) {
        CHECK(b_matrix(t_parameter(s)).power(s) == GradedMatrix::identity(4));
        CHECK(level(minus_t(s)).value == s);
        CHECK(minus_t(s) == root_of_unity(2 * s, 2));
    }
}

TEST_CASE("intertwiner") {
    // s = 2: W = diag(-i, i), and -t_2 = -1 recovers anticommuting qubits.
    GradedMatrix w2 = intertwiner(2);
    CHECK(w2.at(0, 0) == root_of_unity(4, -1));
    CHECK(w2.at(1, 1) == root_of_unity(4, 1));
    CHECK_THROWS_AS(intertwiner(1), std::domain_error);

    GradedMatrix g = gmat::building_block("gamma").without_grade();
    for (long s = 2; s <= 12; ++s) {
        GradedMatrix w = intertwiner(s);
        CHECK(w * g == minus_t(s) * (g * w));
    }
    // -t_3 = j1 is the third-root case highlighted throughout.
    CHECK(minus_t(3) == j1());

    // W -> I as s grows.
    auto dist = [](long s) {
        GradedMatrix w = intertwiner(s);
        return std::abs(w.at(0, 0).embed() - std::complex<double>(1, 0));
    };
    CHECK(dist(180) < dist(12));
    CHECK(dist(180) < 2e-2);
}

TEST_CASE("chain spectra truncate at the root level") {
    CHECK(chain_spectrum(3, 6).levels == std::vector<long>{0, 1, 2, 3});
    CHECK(chain_spectrum(3, 3).levels == std::vector<long>{0, 1, 2});
    auto plateau = chain_spectrum(5, 3);
    CHECK(plateau.levels == std::vector<long>{0, 1, 2});
    CHECK(plateau.plateau);

    for (long n = 1; n <= 8; ++n) {
        for (long s = 2; s <= 8; ++s) {
            auto spec = chain_spectrum(n, s);
            std::vector<long> expected;
            for (long e = 0; e <= std::min(n, s - 1); ++e) expected.push_back(e);
            CHECK(spec.levels == expected);
        }
        // t = -1 limit: no truncation
        std::vector<long> full;
        for (long e = 0; e <= n; ++e) full.push_back(e);
        CHECK(chain_spectrum(n, kInfiniteLevel).levels == full);
    }
    CHECK_THROWS_AS(chain_spectrum(13, 3), std::domain_error);
}

TEST_CASE("single-site chain operators") {
    // F_J F_I = (-t_s) F_I F_J for I < J, and every F_I is nilpotent; the
    // same reordering datum as the uniform word system of level s.
    for (long s : {2L, 3L, 6L}) {
        std::vector<GradedMatrix> f;
        for (long k = 0; k < 3; ++k) f.push_back(chain_site_operator(3, s, k));
        for (size_t i = 0; i < 3; ++i) {
            CHECK((f[i] * f[i]).is_zero());
            for (size_t j = i + 1; j < 3; ++j)
                CHECK(f[j] * f[i] == minus_t(s) * (f[i] * f[j]));
        }
    }
}

TEST_CASE("round brackets") {
    GradedMatrix x = gmat::building_block("gamma").without_grade();
    GradedMatrix y = gmat::building_block("beta").without_grade();

    // theta = pi: minus the anticommutator; theta = pi/2: i times the commutator.
    CHECK(round_bracket(x, y, Angle{1, 1}) == Cyclotomic(-1) * (x * y + y * x));
    CHECK(round_bracket(x, y, Angle{1, 2}) == root_of_unity(4, 1) * (x * y - y * x));

    // <X, Y> = e^{-i theta} (X, Y)_theta with eps = -e^{-2 i theta}.
    for (const Angle& th : {Angle{5, 6}, Angle{2, 3}, Angle{1, 4}}) {
        Cyclotomic eps = epsilon_from_angle(th);
        GradedMatrix lhs = x * y - eps * (y * x);
        GradedMatrix rhs = th.phase().inverse() * round_bracket(x, y, th);
        CHECK(lhs == rhs);
    }

    CHECK(vartheta(2).num == vartheta(2).den);  // vartheta_2 = pi
    CHECK_THROWS_AS(round_bracket(x, GradedMatrix::identity(3), Angle{1, 2}),
                    std::domain_error);
}

TEST_CASE("reconstruction of the s=3 and s=6 braided qubits") {
    auto r3 = reconstruct_color_bracket(3);
    CHECK(r3.violations.empty());
    CHECK(r3.epsilon == j1() * j1());
    CHECK(r3.epsilon_matches);
    CHECK(r3.plus_half_pi_vanishes);
    CHECK(r3.minus_half_pi_vanishes);

    auto r6 = reconstruct_color_bracket(6);
    CHECK(r6.violations.empty());
    CHECK(r6.epsilon == -j1());
    CHECK(r6.epsilon_matches);

    CHECK_THROWS_AS(reconstruct_color_bracket(4), std::domain_error);
}

TEST_CASE("braided tensor orderings differ by -t_s") {
    CHECK(braided_tensor_check(2).ratio == Cyclotomic(-1));
    CHECK(braided_tensor_check(3).ratio == j1());
    CHECK(braided_tensor_check(6).ratio == root_of_unity(6, 1));
    for (long s = 2; s <= 12; ++s) CHECK(braided_tensor_check(s).ok);
}

TEST_CASE("chain truncation matches the word combinatorics", "[property]") {
    // Two independent routes to the same truncation points: the chain tower
    // g_N^n |0> and the normal-form expansion of (sum F_I)^n with the
    // reordering datum a(I, J) = (-t_s)^{-1}.
    for (long n = 1; n <= 6; ++n)
        for (long s = 2; s <= 6; ++s) {
            pascal::WordSystem sys =
                pascal::WordSystem::uniform(static_cast<int>(n), minus_t(s).inverse(), true);
            long word_top = -1;
            for (long e = 0; e <= n + 1; ++e)
                if (!pascal::symmetrized_power(sys, e).empty()) word_top = e;
            CHECK(word_top == chain_spectrum(n, s).levels.back());
        }
}
