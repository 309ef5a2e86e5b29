// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <string>

#include "symbell/bell_ops.hpp"
#include "symbell/pi_notation.hpp"
#include "test_support.hpp"

using namespace symbell;

TEST_CASE("bracket parsing: canonical three-party example") {
    CoefficientGroups g = parse_pi("[0 0; 0 0 0; 1 0 -1 0]");
    CHECK(g.parties() == 3);
    CHECK(g.at(3, 0) == Rational(1));
    CHECK(g.at(3, 1) == Rational(0));
    CHECK(g.at(3, 2) == Rational(-1));
    CHECK(g.at(3, 3) == Rational(0));
    CHECK(serialize_pi(g) == "[0 0; 0 0 0; 1 0 -1 0]");
}

TEST_CASE("separators, rationals, unicode minus and padding are accepted") {
    CoefficientGroups g = parse_pi("  [ 1/2,0 ;0, 0, −3 ]\n");
    CHECK(g.parties() == 2);
    CHECK(g.at(1, 0) == Rational(1, 2));
    CHECK(g.at(2, 2) == Rational(-3));
    CHECK(serialize_pi(g) == "[1/2 0; 0 0 -3]");
}

TEST_CASE("serialize-parse is a fixed point") {
    for (const char* text :
         {"[0 0; 0 0 0; 1 0 -1 0]", "[1/2 -1; 3 0 2/7]",
          "[0 0; 0 0 0; 0 0 0 0; 1 1 -1 -1 1]"}) {
        std::string canon = serialize_pi(parse_pi(text));
        CHECK(canon == text);
        CHECK(serialize_pi(parse_pi(canon)) == canon);
    }
}

TEST_CASE("parse errors carry the group index") {
    CHECK_THROWS_WITH_AS(parse_pi("[0 0; 0 0]"),
                         "group 2: expected 3 entries, found 2", PiParseError);
    CHECK_THROWS_WITH_AS(parse_pi("[0 0; 0 0 q]"), "group 2: bad entry 'q'",
                         PiParseError);
    CHECK_THROWS_AS(parse_pi("0 0; 0 0 0"), PiParseError);
    CHECK_THROWS_AS(parse_pi("[[0 0; 0 0 0]]"), PiParseError);
    CHECK_THROWS_AS(parse_pi("[1 1]"), PiParseError);
    CHECK_THROWS_AS(parse_pi(""), PiParseError);
}

TEST_CASE("compiling the three-party bracket gives the Mermin operator") {
    CoefficientGroups g = parse_pi("[0 0; 0 0 0; 1 0 -1 0]");
    PauliSum sum = compile_pi(g, ObservableSpec::axis('x'), ObservableSpec::axis('y'));
    CHECK(sum.size() == 4);
    CHECK(sum == mermin3());
}

TEST_CASE("compiling the four-party bracket gives the MABK operator") {
    CoefficientGroups g = parse_pi("[0 0; 0 0 0; 0 0 0 0; 1 1 -1 -1 1]");
    PauliSum sum = compile_pi(g, ObservableSpec::axis('x'), ObservableSpec::axis('y'));
    CHECK(sum.size() == 16);
    CHECK(sum == mabk4());
}

TEST_CASE("all-zero groups compile to the empty operator") {
    PauliSum sum = compile_pi(parse_pi("[0 0; 0 0 0]"), ObservableSpec::axis('x'),
                              ObservableSpec::axis('y'));
    CHECK(sum.n() == 2);
    CHECK(sum.size() == 0);
}

TEST_CASE("lower-degree groups add identity-padded terms") {
    // Degree 1, first setting only: sum of X on each party.
    PauliSum sum = compile_pi(parse_pi("[1 0; 0 0 0]"), ObservableSpec::axis('x'),
                              ObservableSpec::axis('y'));
    PauliSum want(2);
    want.add_term(Rational(1), "XI");
    want.add_term(Rational(1), "IX");
    CHECK(sum == want);
}

TEST_CASE("compiled operators are permutation invariant") {
    PauliSum sum = compile_pi(parse_pi("[1 -2; 3 0 1/2]"), ObservableSpec::axis('z'),
                              ObservableSpec::axis('x'));
    CHECK(sum.is_permutation_invariant());
}

TEST_CASE("bloch-vector observables compile exactly and match the oracle") {
    double r = std::sqrt(0.5);
    auto m1 = ObservableSpec::bloch(r, 0.0, r);
    auto m2 = ObservableSpec::axis('y');
    PauliSum sum = compile_pi(parse_pi("[0 0; 1 0 -1]"), m1, m2);

    // (m1 m1) - (m2 m2) on two parties, built by hand on the oracle side.
    oracle::Mat a = r * oracle::pauli2('X') + r * oracle::pauli2('Z');
    oracle::Mat want = oracle::kron(a, a) - oracle::kron(oracle::pauli2('Y'), oracle::pauli2('Y'));
    CHECK((oracle_matrix(sum) - want).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("degenerate bloch vectors are rejected") {
    CHECK_THROWS_AS(ObservableSpec::bloch(1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ObservableSpec::axis('w'), std::invalid_argument);
}
