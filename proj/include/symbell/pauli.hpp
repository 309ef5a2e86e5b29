// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symbell/rational.hpp"

namespace symbell {

// Powers of the imaginary unit, exponent taken mod 4.
std::complex<double> i_pow(int k);

// Result of acting with a Pauli string on a computational basis state:
// P|b> = i^phase_exp |index>.
struct AppliedBasis {
    uint64_t index;
    int phase_exp;  // mod 4
};

// Qubit positions are 0-based from the left of the ket symbol; position p
// maps to bit (n-1-p), so |001> on three qubits is basis index 1.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation transposition(int n, int p, int q);

// n-qubit Pauli string in symplectic form. The stored operator is
// i^phase_exp * prod_q W_q with W_q in {I, X, Z, XZ}; X occupies x_mask,
// Z occupies z_mask, and a qubit present in both carries XZ = -iY.
class PauliString {
  public:
    PauliString(int n, uint64_t x_mask, uint64_t z_mask, int phase_exp);

    // Letter string over {I,X,Y,Z}, leftmost letter = qubit position 0.
    // Sets phase_exp so the stored operator equals the literal tensor
    // product of the letters (one factor i per Y).
    static PauliString from_letters(std::string_view letters);

    static PauliString identity(int n);

    int n() const { return n_; }
    uint64_t x_mask() const { return x_mask_; }
    uint64_t z_mask() const { return z_mask_; }
    int phase_exp() const { return phase_exp_; }

    char letter_at(int position) const;
    std::string letters() const;

    int y_count() const;
    int weight() const;  // non-identity positions

    // Hermitian iff the accumulated phase cancels the -i per Y factor.
    bool is_hermitian() const;

    AppliedBasis apply(uint64_t basis) const;

    PauliString permuted(const Permutation& pi) const;

    friend bool operator==(const PauliString& a, const PauliString& b) = default;

  private:
    int n_;
    uint64_t x_mask_;
    uint64_t z_mask_;
    int phase_exp_;
};

// Real-weighted sum of Hermitian Pauli strings. Term phases are folded into
// the rational coefficients on insertion, so every stored string keeps
// phase_exp = y_count mod 4 and the sum is Hermitian by construction.
class PauliSum {
  public:
    struct Term {
        Rational coeff;
        PauliString str;
    };

    explicit PauliSum(int n);

    int n() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    // Folds the string phase into the coefficient; throws if the term is not
    // Hermitian (phase_exp differing from y_count by an odd power of i).
    void add_term(const Rational& coeff, const PauliString& str);
    void add_term(const Rational& coeff, std::string_view letters);

    // Merges duplicate strings (first occurrence keeps its slot) and drops
    // zero coefficients. Idempotent.
    PauliSum& canonicalize();

    bool is_real_symmetric() const;  // every term has an even Y count
    bool is_permutation_invariant() const;

    Rational sum_abs_coeff() const;

    PauliSum permuted(const Permutation& pi) const;

    // One term per line, "<coeff> <letters>". Preserves stored order.
    std::string to_text() const;
    static PauliSum from_text(const std::string& text);

    // Terms sorted by letter string; used for hashing and equality.
    std::string canonical_text() const;
    std::string hash_hex() const;

    friend bool operator==(const PauliSum& a, const PauliSum& b);

  private:
    int n_;
    std::vector<Term> terms_;
};

// Sparse integer-amplitude vector with an exactly tracked squared norm.
class ExactVector {
  public:
    explicit ExactVector(int n);

    static ExactVector basis(int n, uint64_t index);

    int n() const { return n_; }
    uint64_t dim() const { return uint64_t(1) << n_; }

    void set(uint64_t index, const Int& value);
    const Int& norm_sq() const { return norm_sq_; }
    bool is_zero() const { return amps_.empty(); }
    size_t support_size() const { return amps_.size(); }

    Int amp(uint64_t index) const;
    const std::map<uint64_t, Int>& amps() const { return amps_; }

    Int inner(const ExactVector& other) const;

    ExactVector permuted(const Permutation& pi) const;

    friend bool operator==(const ExactVector& a, const ExactVector& b);

  private:
    int n_;
    std::map<uint64_t, Int> amps_;
    Int norm_sq_;
};

// Gaussian-integer amplitudes, needed when individual strings contribute an
// odd power of i (the imaginary parts must cancel for Hermitian sums applied
// to eigenvectors, but intermediate terms are genuinely complex).
struct GaussianVector {
    int n = 0;
    std::map<uint64_t, std::pair<Int, Int>> amps;  // index -> (re, im)

    bool imag_is_zero() const;
    ExactVector real_part() const;
};

// S|v> with integer arithmetic. Requires integer coefficients.
GaussianVector apply_sum_gaussian(const PauliSum& sum, const ExactVector& v);

// As above but throws std::domain_error if any imaginary part survives.
ExactVector apply_sum_exact(const PauliSum& sum, const ExactVector& v);

// <v|S|v> / <v|v>, exact. Rational coefficients allowed.
Rational expectation_exact(const PauliSum& sum, const ExactVector& v);

// Dense complex state for floating-point paths.
struct FloatVector {
    int n = 0;
    std::vector<std::complex<double>> amps;

    static FloatVector basis(int n, uint64_t index);
    static FloatVector from_exact(const ExactVector& v);  // normalized

    uint64_t dim() const { return uint64_t(1) << n; }
    double norm() const;
    bool is_unit(double tol = 1e-12) const;
    std::complex<double> dot(const FloatVector& other) const;  // <this|other>
};

FloatVector apply_sum_float(const PauliSum& sum, const FloatVector& v);

// <v|S|v> / <v|v>; imaginary residue beyond 1e-10 of scale throws.
double expectation_float(const PauliSum& sum, const FloatVector& v);

}  // namespace symbell
