// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "symbell/pauli.hpp"

namespace symbell {

struct DickeLabel {
    int m;  // excitation count, 1 <= m < n
    int n;  // qubit count
};

// Unnormalized symmetric state: amplitude 1 on every basis state of Hamming
// weight m. Squared norm is C(n, m).
ExactVector dicke_vector(const DickeLabel& label);

// Normalized dense copy for floating-point paths.
FloatVector dicke_float(const DickeLabel& label);

// Weight-one Dicke state, |0..01> and its permutations.
inline ExactVector w_state(int n) { return dicke_vector({1, n}); }

// Basis indices of Hamming weight m in increasing order.
std::vector<uint64_t> weight_m_indices(int n, int m);

}  // namespace symbell
