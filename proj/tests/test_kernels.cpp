// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstring>

#include "symbell/bell_ops.hpp"
#include "symbell/dense.hpp"
#include "symbell/kernels.hpp"
#include "test_support.hpp"

using namespace symbell;

TEST_CASE("compiled matvec equals dense multiplication on random operators") {
    for (uint64_t seed = 301; seed <= 312; ++seed) {
        int n = 2 + static_cast<int>(seed % 5);  // 2..6
        PauliSum sum = random_sum(n, 8, seed);
        FloatVector v = random_state(n, seed * 31);
        FloatVector got = apply_sum_float(sum, v);

        oracle::Vec want = oracle_matrix(sum) * oracle_vec(v);
        double worst = 0.0;
        for (uint64_t i = 0; i < v.dim(); ++i)
            worst = std::max(worst, std::abs(got.amps[i] - want[static_cast<Eigen::Index>(i)]));
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("serial and parallel kernels are bitwise identical") {
    PauliSum sum = dicke_bell(8);
    CompiledSum op = CompiledSum::from(sum);
    REQUIRE(op.real_weights());
    std::vector<double> in(op.dim()), a(op.dim()), b(op.dim());
    SplitMix64 rng(5);
    for (auto& x : in) x = rng.next_symmetric();
    apply_serial(op, in.data(), a.data());
    apply_parallel(op, in.data(), b.data());
    CHECK(std::memcmp(a.data(), b.data(), op.dim() * sizeof(double)) == 0);

    PauliSum odd = mabk4();  // odd y-count terms force the complex path
    CompiledSum opc = CompiledSum::from(odd);
    REQUIRE(!opc.real_weights());
    std::vector<std::complex<double>> inc(opc.dim()), ac(opc.dim()), bc(opc.dim());
    for (auto& x : inc) x = {rng.next_symmetric(), rng.next_symmetric()};
    apply_serial(opc, inc.data(), ac.data());
    apply_parallel(opc, inc.data(), bc.data());
    CHECK(std::memcmp(ac.data(), bc.data(), opc.dim() * sizeof(ac[0])) == 0);
}

TEST_CASE("X/Y sibling terms fuse into half-sweep entries") {
    PauliSum sum = dicke_bell(6);
    CompiledSum op = CompiledSum::from(sum);
    // 2*C(6,2) = 30 terms collapse into 15 fused entries with w_even = 0.
    CHECK(op.fused().size() == 15);
    for (const auto& f : op.fused()) {
        CHECK(f.w_even == std::complex<double>(0.0, 0.0));
        CHECK(f.w_odd == std::complex<double>(2.0, 0.0));
    }
    CHECK(op.sum_abs_weight() == 30.0);
}

TEST_CASE("fusion does not change results for mixed operators") {
    // Force fuseable and unfuseable terms in one sum.
    PauliSum sum(3);
    sum.add_term(Rational(2), "XXZ");
    sum.add_term(Rational(3), "YYZ");   // sibling of XXZ
    sum.add_term(Rational(-1), "ZZI");  // unpaired
    sum.add_term(Rational(1, 2), "XYI");
    sum.add_term(Rational(1, 2), "YXI");
    sum.canonicalize();
    FloatVector v = random_state(3, 777);
    FloatVector got = apply_sum_float(sum, v);
    oracle::Vec want = oracle_matrix(sum) * oracle_vec(v);
    for (uint64_t i = 0; i < v.dim(); ++i)
        CHECK(std::abs(got.amps[i] - want[static_cast<Eigen::Index>(i)]) < 1e-12);
}

TEST_CASE("real fast path refuses complex-weight operators") {
    CompiledSum op = CompiledSum::from(mabk4());
    std::vector<double> in(op.dim(), 1.0), out(op.dim());
    CHECK_THROWS_AS(apply_serial(op, in.data(), out.data()), std::invalid_argument);
}

TEST_CASE("empty operator maps everything to zero") {
    PauliSum sum(3);
    FloatVector v = random_state(3, 9);
    FloatVector got = apply_sum_float(sum, v);
    for (const auto& a : got.amps) CHECK(a == std::complex<double>(0.0, 0.0));
}
