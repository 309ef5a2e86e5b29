// SPDX-License-Identifier: Apache-2.0
#include "symbell/dicke.hpp"

#include <stdexcept>

namespace symbell {

std::vector<uint64_t> weight_m_indices(int n, int m) {
    if (n < 1 || n > 62 || m < 0 || m > n) throw std::invalid_argument("bad weight");
    std::vector<uint64_t> out;
    if (m == 0) {
        out.push_back(0);
        return out;
    }
    const uint64_t limit = uint64_t(1) << n;
    uint64_t v = (uint64_t(1) << m) - 1;
    while (v < limit) {
        out.push_back(v);
        // Gosper's hack: next larger integer with the same popcount.
        uint64_t c = v & -v;
        uint64_t r = v + c;
        if (r >= limit || r < v) break;
        v = r | (((v ^ r) >> 2) / c);
    }
    return out;
}

ExactVector dicke_vector(const DickeLabel& label) {
    if (label.m < 1 || label.m >= label.n)
        throw std::invalid_argument("excitation count must satisfy 1 <= m < n");
    ExactVector v(label.n);
    for (uint64_t idx : weight_m_indices(label.n, label.m)) v.set(idx, Int(1));
    return v;
}

FloatVector dicke_float(const DickeLabel& label) {
    return FloatVector::from_exact(dicke_vector(label));
}

}  // namespace symbell
