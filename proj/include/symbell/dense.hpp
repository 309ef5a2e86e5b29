// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "symbell/pauli.hpp"

namespace symbell {

// Column b of the result collects i^phase_exp * coeff over P|b>. Guarded by
// max_n because the matrix is 4^n entries.
Eigen::MatrixXcd to_dense(const PauliSum& sum, int max_n = 14);

// Requires is_real_symmetric(); every entry is then real.
Eigen::MatrixXd to_dense_real(const PauliSum& sum, int max_n = 14);

}  // namespace symbell
