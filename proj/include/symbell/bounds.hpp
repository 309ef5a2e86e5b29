// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbell/pauli.hpp"

namespace symbell {

// Deterministic-strategy view of a sum: each term becomes a monomial in the
// per-party sign variables of the axes it touches. Coefficients are scaled
// to a common integer form so assignments evaluate in int64.
struct BellPolynomial {
    int n = 0;
    std::vector<char> axes;  // axes appearing anywhere, subset of {x,y,z} in order
    struct Mono {
        int64_t c;
        uint64_t xm, ym, zm;  // per-axis participation masks, bit (n-1-p) for party p
    };
    std::vector<Mono> monos;
    Rational scale;  // value = scale * integer evaluation
};

BellPolynomial bell_polynomial(const PauliSum& sum);

// Value under the +-1 assignment encoded by per-axis negative-sign masks.
int64_t eval_assignment(const BellPolynomial& poly, uint64_t x_neg, uint64_t y_neg,
                        uint64_t z_neg);

struct BoundOptions {
    std::string method = "brute";  // "brute" or "symmetric"
    int max_n_three_axes = 6;      // brute enumeration guard, 8^n assignments
    int max_n_two_axes = 9;        // 4^n assignments
    int max_n_symmetric = 30;
};

struct BoundResult {
    Rational value;
    std::vector<char> axes;
    // Per party, one +-1 entry per axis in `axes` order. Among maximizing
    // assignments this is the lexicographically smallest (-1 before +1,
    // parties major, axes minor), which both methods agree on for
    // permutation-invariant operators.
    std::vector<std::vector<int>> assignment;
    std::string method;
};

// Maximum of the polynomial over deterministic +-1 strategies. "brute"
// enumerates all 2^(k n) assignments; "symmetric" requires a
// permutation-invariant operator and walks nondecreasing per-party type
// sequences (multisets) instead.
BoundResult classical_bound(const PauliSum& sum, const BoundOptions& opt = {});

}  // namespace symbell
