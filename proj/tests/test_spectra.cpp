// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "symbell/bell_ops.hpp"
#include "symbell/spectra.hpp"
#include "test_support.hpp"

using namespace symbell;

TEST_CASE("exact eigencheck: known small eigenpairs with zero residual") {
    EigenReport r = eigencheck_exact(dicke_bell(2), dicke_vector({1, 2}));
    CHECK(r.is_eigen);
    CHECK(r.eigenvalue == Rational(2));
    CHECK(r.residual_norm_sq == 0);

    r = eigencheck_exact(dicke_bell(3), dicke_vector({1, 3}));
    CHECK(r.is_eigen);
    CHECK(r.eigenvalue == Rational(4));

    r = eigencheck_exact(dicke_bell(3), dicke_vector({2, 3}));
    CHECK(r.is_eigen);
    CHECK(r.eigenvalue == Rational(-4));
}

TEST_CASE("exact eigencheck: non-eigenvectors get a positive residual and the "
          "Rayleigh quotient") {
    ExactVector v = ExactVector::basis(3, 0b001);
    EigenReport r = eigencheck_exact(dicke_bell(3), v);
    CHECK(!r.is_eigen);
    CHECK(r.residual_norm_sq > 0);
    CHECK(r.eigenvalue == expectation_exact(dicke_bell(3), v));

    // Scaling the vector must not change the verdict or the eigenvalue.
    ExactVector w(3);
    for (const auto& [idx, amp] : v.amps()) w.set(idx, amp * 7);
    EigenReport rs = eigencheck_exact(dicke_bell(3), w);
    CHECK(rs.is_eigen == r.is_eigen);
    CHECK(rs.eigenvalue == r.eigenvalue);
}

TEST_CASE("exact eigencheck handles rational coefficients by scaling") {
    PauliSum half(2);
    half.add_term(Rational(1, 2), "XX");
    half.add_term(Rational(1, 2), "YY");
    EigenReport r = eigencheck_exact(half, dicke_vector({1, 2}));
    CHECK(r.is_eigen);
    CHECK(r.eigenvalue == Rational(1));
}

TEST_CASE("mabk4 maps the ghz support exactly as computed by hand") {
    ExactVector v(4);
    v.set(0b0000, Int(1));
    v.set(0b1111, Int(1));
    GaussianVector g = apply_sum_gaussian(mabk4(), v);
    REQUIRE(g.amps.size() == 2);
    CHECK(g.amps.at(0b0000).first == 8);
    CHECK(g.amps.at(0b0000).second == -8);
    CHECK(g.amps.at(0b1111).first == 8);
    CHECK(g.amps.at(0b1111).second == 8);
}

TEST_CASE("dense spectrum of the two-qubit member") {
    SpectralReport r = dense_spectrum(dicke_bell(2));
    CHECK(r.eigenvalues.size() == 4);
    CHECK(r.eigenvalues[0] == doctest::Approx(-2).epsilon(1e-12));
    CHECK(r.eigenvalues[3] == doctest::Approx(2).epsilon(1e-12));
    CHECK(r.max_abs == doctest::Approx(2).epsilon(1e-12));
    CHECK(r.method == "dense");
}

TEST_CASE("dense spectrum matches an oracle eigensolve on a random operator") {
    PauliSum sum = random_sum(4, 9, 4242);
    SpectralReport r = dense_spectrum(sum);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle_matrix(sum));
    REQUIRE(r.eigenvalues.size() == 16);
    for (int i = 0; i < 16; ++i)
        CHECK(r.eigenvalues[i] == doctest::Approx(es.eigenvalues()[i]).epsilon(1e-10));
}

TEST_CASE("dense spectrum of the three-qubit member: extremal pair and memberships") {
    SpectralReport r = dense_spectrum(dicke_bell(3));
    CHECK(r.max_abs == doctest::Approx(4).epsilon(1e-12));
    CHECK(r.min_eigenvalue == doctest::Approx(-4).epsilon(1e-12));
    CHECK(r.max_eigenvalue == doctest::Approx(4).epsilon(1e-12));
    CHECK(r.extremal_multiplicity == 2);
    REQUIRE(r.dicke_membership.size() == 2);
    CHECK(r.dicke_membership[0].m == 1);
    CHECK(r.dicke_membership[0].residual < 1e-10);
    CHECK(r.dicke_membership[1].m == 2);
    CHECK(r.dicke_membership[1].residual < 1e-10);
}

TEST_CASE("dense spectrum of mermin3 and mabk4 attains the known quantum maxima") {
    SpectralReport m3 = dense_spectrum(mermin3());
    CHECK(m3.max_eigenvalue == doctest::Approx(4).epsilon(1e-12));
    SpectralReport m4 = dense_spectrum(mabk4());
    CHECK(m4.max_eigenvalue == doctest::Approx(8 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("alternating sum equals the closed form") {
    CHECK(alternating_sum_lambda(2) == 2);
    CHECK(alternating_sum_lambda(3) == 4);
    CHECK(alternating_sum_lambda(4) == 8);
    CHECK(alternating_sum_lambda(10) == 50);
    for (int n = 2; n <= 40; ++n)
        CHECK(alternating_sum_lambda(n) == Int(2) * (n / 2) * ((n + 1) / 2));
}

TEST_CASE("theorem checks carry the alternating sign") {
    TheoremCheck c = verify_theorem_pair(5, 2);
    CHECK(c.expected == -12);
    CHECK(c.matches);
    c = verify_theorem_pair(5, 3);
    CHECK(c.expected == 12);
    CHECK(c.matches);
    auto range = verify_theorem_range(2, 7);
    for (const auto& check : range) {
        CAPTURE(check.n);
        CAPTURE(check.m);
        CHECK(check.matches);
    }
}

TEST_CASE("iterative extremal estimates agree with dense values") {
    for (int n : {3, 4, 5, 6}) {
        PauliSum b = dicke_bell(n);
        SpectralReport dense = dense_spectrum(b);
        SpectralReport iter = extremal_eigen_iterative(b);
        CHECK(iter.converged);
        CHECK(iter.max_abs == doctest::Approx(dense.max_abs).epsilon(1e-8));
        CHECK(iter.min_eigenvalue ==
              doctest::Approx(dense.min_eigenvalue).epsilon(1e-8));
        CHECK(iter.max_eigenvalue ==
              doctest::Approx(dense.max_eigenvalue).epsilon(1e-8));
    }
}

TEST_CASE("iterative solver handles the complex path and a fixed seed reproduces") {
    SpectralReport a = extremal_eigen_iterative(mabk4(), {1e-10, 100000, 7});
    SpectralReport b = extremal_eigen_iterative(mabk4(), {1e-10, 100000, 7});
    CHECK(a.max_abs == b.max_abs);  // bitwise reproducible
    CHECK(a.iterations == b.iterations);
    CHECK(a.max_abs == doctest::Approx(8 * std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("iterative solver on the empty operator returns zero") {
    PauliSum empty(4);
    SpectralReport r = extremal_eigen_iterative(empty);
    CHECK(r.converged);
    CHECK(r.max_abs == doctest::Approx(0.0));
}

TEST_CASE("conjecture report, dense route") {
    ConjectureReport r = conjecture_report(4, {});
    CHECK(r.method == "dense");
    CHECK(r.formula == 8);
    CHECK(r.agrees);
    REQUIRE(r.central.size() == 1);
    CHECK(r.central[0].m == 2);
    CHECK(r.central[0].eigenvalue == Rational(-8));
    CHECK(r.central[0].is_eigen);
    CHECK(r.central[0].in_extremal);

    ConjectureReport r5 = conjecture_report(5, {});
    REQUIRE(r5.central.size() == 2);
    CHECK(r5.central[0].m == 2);
    CHECK(r5.central[1].m == 3);
    CHECK(r5.agrees);
}

TEST_CASE("conjecture report, iterative route") {
    ConjectureOptions opt;
    opt.method = "iterative";
    ConjectureReport r = conjecture_report(6, opt);
    CHECK(r.method == "iterative");
    CHECK(r.formula == 18);
    CHECK(r.agrees);
    CHECK(r.converged);
    REQUIRE(r.central.size() == 1);
    CHECK(r.central[0].is_eigen);
    CHECK(r.central[0].in_extremal);
    CHECK(r.central[0].eigenvalue == Rational(18));
}

TEST_CASE("published table flags: magnitudes always match, signs flip at the "
          "known rows") {
    auto rows = extremal_table(3, 6);
    REQUIRE(rows.size() == 6);  // n=3: two rows, n=4: one, n=5: two, n=6: one

    CHECK(rows[0].n == 3);
    CHECK(rows[0].m == 1);
    CHECK(rows[0].lambda == Rational(4));
    REQUIRE(rows[0].sign_matches_paper.has_value());
    CHECK(*rows[0].sign_matches_paper == false);

    CHECK(rows[1].m == 2);
    CHECK(rows[1].lambda == Rational(-4));
    CHECK(*rows[1].sign_matches_paper == false);

    CHECK(rows[2].n == 4);
    CHECK(rows[2].lambda == Rational(-8));
    CHECK(*rows[2].sign_matches_paper == true);

    CHECK(rows[3].lambda == Rational(-12));
    CHECK(*rows[3].sign_matches_paper == true);
    CHECK(rows[4].lambda == Rational(12));
    CHECK(*rows[4].sign_matches_paper == true);

    CHECK(rows[5].n == 6);
    CHECK(rows[5].lambda == Rational(18));
    CHECK(*rows[5].sign_matches_paper == false);

    for (const auto& row : rows) {
        CHECK(row.max_abs ==
              doctest::Approx(to_double(alternating_sum_lambda(row.n))).epsilon(1e-9));
        CHECK(row.membership_residual < 1e-8);
    }
}

TEST_CASE("published sign lookup covers exactly the printed rows") {
    CHECK(published_extremal_sign(3, 1) == -1);
    CHECK(published_extremal_sign(10, 5) == -1);
    CHECK(published_extremal_sign(9, 5) == 1);
    CHECK(!published_extremal_sign(11, 5).has_value());
    CHECK(!published_extremal_sign(4, 1).has_value());
}
