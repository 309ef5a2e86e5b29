// SPDX-License-Identifier: Apache-2.0
#include "symbell/dense.hpp"

#include <stdexcept>

namespace symbell {

Eigen::MatrixXcd to_dense(const PauliSum& sum, int max_n) {
    if (sum.n() > max_n) throw std::invalid_argument("qubit count exceeds dense limit");
    const uint64_t dim = uint64_t(1) << sum.n();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& t : sum.terms()) {
        double c = to_double(t.coeff);
        for (uint64_t b = 0; b < dim; ++b) {
            AppliedBasis r = t.str.apply(b);
            m(r.index, b) += c * i_pow(r.phase_exp);
        }
    }
    return m;
}

Eigen::MatrixXd to_dense_real(const PauliSum& sum, int max_n) {
    if (!sum.is_real_symmetric())
        throw std::invalid_argument("operator has complex matrix entries");
    if (sum.n() > max_n) throw std::invalid_argument("qubit count exceeds dense limit");
    const uint64_t dim = uint64_t(1) << sum.n();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& t : sum.terms()) {
        double c = to_double(t.coeff);
        for (uint64_t b = 0; b < dim; ++b) {
            // Even Y count keeps the applied phase in {0, 2}.
            AppliedBasis r = t.str.apply(b);
            m(r.index, b) += (r.phase_exp == 0) ? c : -c;
        }
    }
    return m;
}

}  // namespace symbell
