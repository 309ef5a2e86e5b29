// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symbell/dicke.hpp"
#include "symbell/pauli.hpp"

namespace symbell {

// Exact Rayleigh data for a sum S and integer vector v. With S' = L*S scaled
// to integer coefficients, the residual is |(v.v) S'v - (v.S'v) v|^2 summed
// over real and imaginary parts: an integer that vanishes iff v is an
// eigenvector of S. The eigenvalue is the exact Rayleigh quotient.
struct EigenReport {
    bool is_eigen = false;
    Rational eigenvalue;
    Int residual_norm_sq;
};

EigenReport eigencheck_exact(const PauliSum& sum, const ExactVector& v);

struct DickeMembership {
    int m;
    double residual;  // distance of the unit Dicke vector from the extremal eigenspace
};

struct SpectralReport {
    int n = 0;
    std::string operator_family;
    std::string operator_hash;
    std::string method;  // "dense" or "iterative"
    double max_abs = 0.0;
    double min_eigenvalue = 0.0;
    double max_eigenvalue = 0.0;
    // Dense: full ascending spectrum. Iterative: the two endpoint estimates.
    std::vector<double> eigenvalues;
    int extremal_multiplicity = 0;                   // dense only
    std::vector<DickeMembership> dicke_membership;   // dense only
    bool converged = true;
    long iterations = 0;                             // iterative only
};

struct DenseOptions {
    int max_n = 12;              // 2^n x 2^n matrix; raise deliberately for n = 13, 14
    double extremal_tol = 1e-8;  // |lambda| within this of max_abs counts as extremal
};

SpectralReport dense_spectrum(const PauliSum& sum, const DenseOptions& opt = {});

struct IterOptions {
    double tol = 1e-10;  // residual-bound target, relative to the Ritz scale
    long max_iter = 400;  // step cap; one basis vector is stored per step
    uint64_t seed = 1;
};

// Lanczos with full reorthogonalization from a seeded random start vector.
// Both endpoints of the tridiagonal Ritz spectrum are tracked; the run stops
// once the residual bound |beta_k * s_end| certifies each endpoint to
// tol * scale. Deterministic for a fixed seed and any worker count.
SpectralReport extremal_eigen_iterative(const PauliSum& sum, const IterOptions& opt = {});

// 2 * sum_{j=0}^{n-2} C(n-j, 2) * (-1)^j; equals 2*floor(n/2)*ceil(n/2).
Int alternating_sum_lambda(int n);

// Exact eigenvalue check of the Dicke vector |m, n> against dicke_bell(n):
// expected eigenvalue (-1)^(m-1) * 2m(n-m).
struct TheoremCheck {
    int n = 0;
    int m = 0;
    bool is_eigen = false;
    Rational eigenvalue;
    Int expected;
    bool matches = false;
};

TheoremCheck verify_theorem_pair(int n, int m);
std::vector<TheoremCheck> verify_theorem_range(int n_min, int n_max);

struct ConjectureEntry {
    int m;
    Rational eigenvalue;  // exact Rayleigh quotient of |m, n>
    bool is_eigen;
    std::optional<double> membership_residual;  // dense eigenspace distance
    bool in_extremal;
};

struct ConjectureReport {
    int n = 0;
    std::string method;
    double max_abs = 0.0;
    Int formula;   // alternating_sum_lambda(n)
    bool agrees = false;
    std::vector<ConjectureEntry> central;  // m = floor(n/2) and, for odd n, ceil(n/2)
    bool converged = true;
    long iterations = 0;
};

struct ConjectureOptions {
    std::string method = "dense";  // "dense" or "iterative"
    DenseOptions dense;
    IterOptions iter;
    double agree_tol = 1e-8;       // dense max_abs vs formula
    double iter_agree_tol = 1e-6;  // iterative max_abs vs formula and membership
    double membership_tol = 1e-8;
};

ConjectureReport conjecture_report(int n, const ConjectureOptions& opt = {});

// Extremal-table row for dicke_bell(n). Published reference rows exist for
// n = 3..10; sign_matches_paper compares the oracle sign of lambda against
// the published sign and is empty outside that range.
struct TableRow {
    int n = 0;
    int m = 0;
    Rational lambda;
    double max_abs = 0.0;
    double membership_residual = 0.0;
    std::optional<bool> sign_matches_paper;
};

std::vector<TableRow> extremal_table(int n_min, int n_max, const DenseOptions& opt = {});

// Published sign of the extremal eigenvalue associated with |m, n>, if a
// published row exists (n = 3..10, central m only).
std::optional<int> published_extremal_sign(int n, int m);

}  // namespace symbell
