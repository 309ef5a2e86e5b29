// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "symbell/pauli.hpp"
#include "symbell/pi_notation.hpp"

namespace symbell {

// Sum over ordered pairs i < j of an X-X pair on (i, j) dressed with Z on
// every other qubit, plus the same with Y-Y pairs: 2*C(n,2) terms, X block
// first, pairs in lexicographic order.
PauliSum dicke_bell(int n);

// Three-qubit member of the dicke_bell family.
PauliSum w_bell();

// XXX - XYY - YXY - YYX.
PauliSum mermin3();

// Four-party two-setting operator with degree-4 coefficient pattern
// (1, 1, -1, -1, 1) over the count of second settings.
PauliSum mabk4();

// (|0..0> + e^{i pi k/4}|1..1>) / sqrt(2). The phase is an integer multiple
// of pi/4 so reference points like k = 1 need no floating literals.
FloatVector ghz_float(int n, int phase_numerator = 0);

// Single-qubit measurement direction on the Bloch sphere.
class ObservableSpec {
  public:
    static ObservableSpec axis(char which);  // 'x', 'y' or 'z'
    static ObservableSpec bloch(double x, double y, double z);

    double x() const { return x_; }
    double y() const { return y_; }
    double z() const { return z_; }

    bool is_axis() const;
    char axis_letter() const;  // valid only when is_axis()

  private:
    ObservableSpec(double x, double y, double z) : x_(x), y_(y), z_(z) {}
    double x_, y_, z_;
};

// Expands the bracket coefficients into an explicit operator: for each
// degree d with coefficient alpha at second-setting count c, every choice of
// d participating parties and c second settings contributes alpha times the
// product of the chosen observables (identity on non-participants). Bloch
// components are converted to dyadic rationals, so the result is exact.
PauliSum compile_pi(const CoefficientGroups& groups, const ObservableSpec& m1,
                    const ObservableSpec& m2);

}  // namespace symbell
