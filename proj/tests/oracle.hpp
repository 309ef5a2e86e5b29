// SPDX-License-Identifier: Apache-2.0
//
// Independent dense oracle used only by tests: operators are assembled from
// explicit 2x2 Pauli matrices with Kronecker products, never through the
// symplectic-mask code under test. Leftmost letter = first tensor factor,
// matching |001> = basis index 1.
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat pauli2(char letter) {
    Mat m(2, 2);
    const std::complex<double> i{0.0, 1.0};
    switch (letter) {
        case 'I': m << 1, 0, 0, 1; break;
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw std::invalid_argument("bad letter");
    }
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

inline Mat string_matrix(const std::string& letters) {
    Mat m = pauli2(letters.at(0));
    for (size_t q = 1; q < letters.size(); ++q) m = kron(m, pauli2(letters[q]));
    return m;
}

inline Mat sum_matrix(int n, const std::vector<std::pair<double, std::string>>& terms) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    Mat m = Mat::Zero(dim, dim);
    for (const auto& [coeff, letters] : terms) m += coeff * string_matrix(letters);
    return m;
}

// Dicke vector: 1 on every index whose binary expansion has m ones.
inline Vec dicke(int n, int m) {
    const Eigen::Index dim = Eigen::Index(1) << n;
    Vec v = Vec::Zero(dim);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        int ones = 0;
        for (int b = 0; b < n; ++b) ones += (idx >> b) & 1;
        if (ones == m) v[idx] = 1.0;
    }
    return v;
}

}  // namespace oracle
