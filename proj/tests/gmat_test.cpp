#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "colorlie/gmat.hpp"

using namespace colorlie;
using namespace colorlie::gmat;

namespace {
Cyclotomic j1() { return root_of_unity(3, 1); }

GradedMatrix random_matrix(long dim, std::mt19937& rng) {
    std::uniform_int_distribution<long> pick(-3, 3);
    GradedMatrix m(dim);
    for (long r = 0; r < dim; ++r)
        for (long c = 0; c < dim; ++c)
            m.set(r, c, Cyclotomic(pick(rng)) + root_of_unity(3, 1) * Cyclotomic(pick(rng)));
    return m;
}
}  // namespace

TEST_CASE("building blocks match the printed matrices") {
    GradedMatrix q3 = building_block("Q+3");
    for (long r = 0; r < 3; ++r)
        for (long c = 0; c < 3; ++c) {
            bool expected = (r == 0 && c == 1) || (r == 1 && c == 2) || (r == 2 && c == 0);
            CHECK(q3.at(r, c) == Cyclotomic(expected ? 1 : 0));
        }
    REQUIRE(q3.grade());
    CHECK(q3.grade()->trits == std::vector<int>{1});

    for (const char* name : {"Q+1", "Q+2", "Q+3"}) {
        std::string minus = name;
        minus[1] = '-';
        CHECK(building_block(name).dagger() == building_block(minus.c_str()));
        CHECK(building_block(minus.c_str()).grade()->trits == std::vector<int>{2});
    }

    CHECK(building_block("N1") * building_block("N2") == building_block("N0"));

    // The N family commutes pairwise.
    for (const char* a : {"N0", "N1", "N2"})
        for (const char* b : {"N0", "N1", "N2"})
            CHECK(building_block(a) * building_block(b) == building_block(b) * building_block(a));

    CHECK(building_block("N0p") * building_block("N0pp") == building_block("N0"));

    for (const char* name : {"N0", "N0p", "N0pp", "N1", "N2", "Q+1", "Q+2", "Q+3", "Q-1", "Q-2",
                             "Q-3", "I2", "Y", "X", "beta", "gamma"})
        CHECK(matches_grade_pattern(building_block(name)));

    CHECK_THROWS_AS(building_block("Q+4"), std::domain_error);

    GradedMatrix g = building_block("gamma");
    CHECK((g * g).is_zero());
}

TEST_CASE("tensor products") {
    GradedMatrix c00 = tensor(building_block("N0"), building_block("N0"));
    CHECK(c00 == GradedMatrix::identity(9));
    CHECK(tensor(building_block("I2"), c_matrix(0, 0)) == GradedMatrix::identity(18));

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        GradedMatrix a = random_matrix(2, rng), c = random_matrix(2, rng);
        GradedMatrix b = random_matrix(3, rng), d = random_matrix(3, rng);
        CHECK(tensor(a, b) * tensor(c, d) == tensor(a * c, b * d));
    }

    // Concatenated grade: a bit factor and a two-trit factor give one bit,
    // two trits.
    GradedMatrix f = tensor(building_block("Y"), c_matrix(1, 0));
    REQUIRE(f.grade());
    CHECK(f.grade()->label() == "1_10");
}

TEST_CASE("C matrices") {
    CHECK(c_matrix(0, 0) == GradedMatrix::identity(9));
    CHECK(c_matrix(1, 1) == tensor(building_block("Q+2"), building_block("N1")));
    CHECK(c_matrix(0, 2) == tensor(building_block("N0pp"), building_block("N2")));
    CHECK(c_matrix(0, 2, C02Convention::printed) ==
          tensor(building_block("N0pp"), building_block("N0")));
    CHECK(c_matrix(0, 2, C02Convention::printed).grade()->label() == "02");

    // Creation/annihilation pairing: dagger swaps the paired sectors.
    CHECK(c_matrix(1, 0).dagger() == c_matrix(2, 0));
    CHECK(c_matrix(1, 1).dagger() == c_matrix(2, 2));
    CHECK(c_matrix(1, 2).dagger() == c_matrix(2, 1));
    CHECK(c_matrix(0, 1).dagger() == c_matrix(0, 2));

    // Graded commutativity under the canonical Z3xZ3 factors.
    grading::FactorTable t = grading::canonical_z3z3(j1());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    GradedMatrix a = c_matrix(i, j), b = c_matrix(k, l);
                    Cyclotomic eps = t.at(*a.grade(), *b.grade());
                    CHECK((a * b - eps * (b * a)).is_zero());
                }

    CHECK_THROWS_AS(c_matrix(3, 0), std::domain_error);
}

TEST_CASE("grade additivity and matrix ops") {
    std::vector<GradedMatrix> blocks3;
    for (const char* n : {"N0", "N0p", "N0pp", "N1", "N2", "Q+1", "Q+2", "Q+3", "Q-1", "Q-2", "Q-3"})
        blocks3.push_back(building_block(n));
    for (const auto& a : blocks3)
        for (const auto& b : blocks3) {
            GradedMatrix p = a * b;
            if (p.is_zero()) continue;
            REQUIRE(p.grade());
            CHECK(*p.grade() == *a.grade() + *b.grade());
        }

    std::vector<GradedMatrix> cs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) cs.push_back(c_matrix(i, j));
    for (const auto& a : cs)
        for (const auto& b : cs) {
            GradedMatrix p = a * b;
            REQUIRE_FALSE(p.is_zero());
            CHECK(*p.grade() == *a.grade() + *b.grade());
        }

    CHECK(c_matrix(0, 1) * c_matrix(0, 2) == GradedMatrix::identity(9));
    CHECK((c_matrix(0, 1) * c_matrix(0, 2)).grade()->label() == "00");

    // Sum of unequal sectors clears the label; equal sectors keep it.
    GradedMatrix s1 = c_matrix(0, 1) + c_matrix(1, 1);
    CHECK_FALSE(s1.grade());
    GradedMatrix s2 = c_matrix(0, 1) + c_matrix(0, 1);
    REQUIRE(s2.grade());
    CHECK(s2.grade()->label() == "01");

    CHECK_THROWS_AS(c_matrix(0, 0) * building_block("I2"), std::domain_error);

    CHECK(c_matrix(1, 0).power(2) == c_matrix(1, 0) * c_matrix(1, 0));
    CHECK(c_matrix(1, 0).power(3) == GradedMatrix::identity(9));
}
