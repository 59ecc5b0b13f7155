#include <catch2/catch_amalgamated.hpp>

#include "colorlie/grading.hpp"

using namespace colorlie;
using namespace colorlie::grading;

namespace {

Cyclotomic j1() { return root_of_unity(3, 1); }

// The printed 9x9 Z3xZ3 commutation factor array, rows and columns in the
// two-trit order 00,01,02,10,11,12,20,21,22. 0 = 1, 1 = j, 2 = j^2.
constexpr int kZ3Z3Printed[9][9] = {
    {0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 2, 2, 2, 1, 1, 1},
    {0, 0, 0, 1, 1, 1, 2, 2, 2},
    {0, 1, 2, 0, 1, 2, 0, 1, 2},
    {0, 1, 2, 2, 0, 1, 1, 2, 0},
    {0, 1, 2, 1, 2, 0, 2, 0, 1},
    {0, 2, 1, 0, 2, 1, 0, 2, 1},
    {0, 2, 1, 2, 1, 0, 1, 0, 2},
    {0, 2, 1, 1, 0, 2, 2, 1, 0},
};

GroupElement sector(const FactorTable& t, const std::string& label) {
    return parse_label(t.p(), t.q(), label);
}

}  // namespace

TEST_CASE("canonical Z3xZ3 table matches the printed array") {
    for (const Cyclotomic& j : {Cyclotomic(1), j1(), j1().pow(2)}) {
        FactorTable t = canonical_z3z3(j);
        for (long r = 0; r < 9; ++r)
            for (long c = 0; c < 9; ++c)
                CHECK(t.at(r, c) == j.pow(kZ3Z3Printed[r][c]));
        CHECK(validate_table(t).ok());
    }
    CHECK(canonical_z3z3(Cyclotomic(1)).classify() == ColorClass::lie_algebra);
    CHECK(canonical_z3z3(j1()).classify() == ColorClass::lie_algebra);
    CHECK_THROWS_AS(canonical_z3z3(Cyclotomic(-1)), std::domain_error);

    // Ten spot entries transcribed by hand from the printed array.
    FactorTable t = canonical_z3z3(j1());
    auto eps = [&](const char* a, const char* b) { return t.at(sector(t, a), sector(t, b)); };
    CHECK(eps("01", "10") == j1().pow(2));
    CHECK(eps("02", "11") == j1());
    CHECK(eps("11", "12") == j1());
    CHECK(eps("12", "21") == Cyclotomic(1));
    CHECK(eps("21", "02") == j1());
    CHECK(eps("22", "20") == j1().pow(2));
    CHECK(eps("10", "22") == j1().pow(2));
    CHECK(eps("20", "11") == j1().pow(2));
    CHECK(eps("11", "11") == Cyclotomic(1));
    CHECK(eps("00", "22") == Cyclotomic(1));

    // eps(01,11)^3 = 1 is forced by the axioms.
    CHECK(eps("01", "11").pow(3) == Cyclotomic(1));
}

TEST_CASE("canonical Z2xZ3xZ3 table matches the printed array") {
    Cyclotomic delta(-1);
    FactorTable t = canonical_z2z3z3(j1(), delta);
    CHECK(t.size() == 18);
    CHECK(validate_table(t).ok());
    CHECK(t.classify() == ColorClass::lie_superalgebra);

    auto eps = [&](const char* a, const char* b) { return t.at(sector(t, a), sector(t, b)); };
    // Ten spot entries transcribed by hand from the printed 18x18 array.
    CHECK(eps("1_10", "1_01") == delta * j1());
    CHECK(eps("1_01", "0_10") == j1().pow(2));
    CHECK(eps("1_01", "1_20") == delta * j1());
    CHECK(eps("1_11", "1_22") == delta);
    CHECK(eps("1_11", "0_21") == j1().pow(2));
    CHECK(eps("0_21", "1_12") == Cyclotomic(1));
    CHECK(eps("1_00", "0_12") == Cyclotomic(1));
    CHECK(eps("1_00", "1_21") == delta);
    CHECK(eps("0_22", "1_11") == Cyclotomic(1));
    CHECK(eps("1_20", "1_10") == delta);

    // Two full rows of the printed array against the bit-block structure:
    // row 1_01 equals row 01 of the 9x9 array in the 0-bit columns and
    // delta times it in the 1-bit columns.
    FactorTable base = canonical_z3z3(j1());
    for (long c = 0; c < 9; ++c) {
        CHECK(eps("1_01", ("0_" + base.element(c).label()).c_str()) == base.at(1, c));
        CHECK(eps("1_01", ("1_" + base.element(c).label()).c_str()) == delta * base.at(1, c));
        CHECK(eps("1_11", ("0_" + base.element(c).label()).c_str()) == base.at(4, c));
        CHECK(eps("1_11", ("1_" + base.element(c).label()).c_str()) == delta * base.at(4, c));
    }

    CHECK(canonical_z2z3z3(Cyclotomic(1), Cyclotomic(1)) ==
          iterate_z2(canonical_z3z3(Cyclotomic(1)), Cyclotomic(1)));
    CHECK_THROWS_AS(canonical_z2z3z3(j1(), Cyclotomic(2)), std::domain_error);
}

TEST_CASE("validate_table flags axiom violations") {
    FactorTable all_ones(0, 1);
    auto rep = validate_table(all_ones);
    CHECK(rep.ok());
    CHECK(all_ones.classify() == ColorClass::lie_algebra);

    FactorTable t = canonical_z3z3(j1());
    t.set(sector(t, "00"), sector(t, "11"), j1());
    auto bad = validate_table(t);
    REQUIRE_FALSE(bad.ok());
    bool has_axiom3 = false;
    for (const auto& v : bad.violations) has_axiom3 |= (v.axiom == 3);
    CHECK(has_axiom3);

    FactorTable z(0, 1);
    z.set(0, 0, Cyclotomic(0));
    auto zero_rep = validate_table(z);
    REQUIRE_FALSE(zero_rep.ok());
    CHECK(zero_rep.violations.front().axiom == 0);
}

TEST_CASE("Z2 and Z3 iterations") {
    FactorTable trivial(0, 0);

    FactorTable sup = iterate_z2(trivial, Cyclotomic(-1));
    CHECK(sup.size() == 2);
    CHECK(sup.at(0, 0) == Cyclotomic(1));
    CHECK(sup.at(0, 1) == Cyclotomic(1));
    CHECK(sup.at(1, 0) == Cyclotomic(1));
    CHECK(sup.at(1, 1) == Cyclotomic(-1));
    CHECK(sup.classify() == ColorClass::lie_superalgebra);
    CHECK(validate_table(sup).ok());

    CHECK(iterate_z2(canonical_z3z3(j1()), Cyclotomic(-1)) ==
          canonical_z2z3z3(j1(), Cyclotomic(-1)));
    CHECK_THROWS_AS(iterate_z2(trivial, j1()), std::domain_error);

    FactorTable z3 = iterate_z3(trivial);
    CHECK(z3.size() == 3);
    for (long i = 0; i < 3; ++i)
        for (long k = 0; k < 3; ++k) CHECK(z3.at(i, k) == Cyclotomic(1));
    CHECK(validate_table(z3).ok());

    // Z3 iteration of the Z2 superalgebra: the 6x6 table whose entries
    // depend only on the bits, with the delta block at (1,1).
    FactorTable six = iterate_z3(sup);
    CHECK(six.size() == 6);
    CHECK(validate_table(six).ok());
    for (long i = 0; i < 6; ++i)
        for (long k = 0; k < 6; ++k) {
            GroupElement a = six.element(i), b = six.element(k);
            Cyclotomic expected = (a.bits[0] && b.bits[0]) ? Cyclotomic(-1) : Cyclotomic(1);
            CHECK(six.at(i, k) == expected);
        }
}

TEST_CASE("exhaustive search over small groups") {
    auto z3 = search_tables(0, 1, 6);
    REQUIRE(z3.size() == 1);
    CHECK(z3.front() == FactorTable(0, 1));

    auto z2 = search_tables(1, 0, 2);
    CHECK(z2.size() == 2);

    auto z3z3 = search_tables(0, 2, 3);
    REQUIRE(z3z3.size() == 3);
    std::set<std::string> found, expected;
    for (const auto& t : z3z3) found.insert(t.canonical_key());
    for (const Cyclotomic& j : {Cyclotomic(1), j1(), j1().pow(2)})
        expected.insert(canonical_z3z3(j).canonical_key());
    CHECK(found == expected);

    auto z2z3z3 = search_tables(1, 2, 6);
    CHECK(z2z3z3.size() == 6);

    CHECK_THROWS_AS(search_tables(0, 2, 3, 2), std::domain_error);
}

TEST_CASE("classification by grading-group automorphisms") {
    auto z3z3 = search_tables(0, 2, 3);
    auto classes = classify_inequivalent(z3z3);
    REQUIRE(classes.size() == 2);

    // j1 and j2 land in one class via the second-trit relabeling k1 <-> k2.
    FactorTable a = canonical_z3z3(j1());
    FactorTable b = canonical_z3z3(j1().pow(2));
    auto two = classify_inequivalent({a, b});
    CHECK(two.size() == 1);

    auto z2z3z3 = search_tables(1, 2, 6);
    CHECK(classify_inequivalent(z2z3z3).size() == 4);

    CHECK(classify_inequivalent({a}).size() == 1);
}

TEST_CASE("iterations preserve validity over all searched tables", "[property]") {
    for (auto [p, q] : {std::pair{0, 1}, {1, 0}, {0, 2}, {1, 1}}) {
        for (const auto& t : search_tables(p, q, 6)) {
            CHECK(validate_table(iterate_z2(t, Cyclotomic(1))).ok());
            CHECK(validate_table(iterate_z2(t, Cyclotomic(-1))).ok());
            CHECK(validate_table(iterate_z3(t)).ok());
            // eps(0, beta) = 1 is forced by the axioms.
            for (long k = 0; k < t.size(); ++k)
                CHECK(t.at(0, k) == Cyclotomic(1));
        }
    }
}
