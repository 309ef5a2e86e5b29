// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "symbell/pauli.hpp"

namespace symbell {

// Matvec-ready form of a PauliSum. Terms sharing an X mask whose Z masks
// differ exactly by that X mask are fused into one sweep: with b = j ^ x,
//
//   out[j] += (-1)^popcount(b & z) * (popcount(b & x) odd ? w_odd : w_even) * in[b]
//
// where w_even = w1 + w2 and w_odd = w1 - w2. An unfused term stores
// w_even = w_odd = w. For X/Y sibling pairs (equal coefficients, opposite
// weights) w_even vanishes and half the sweep is skipped.
class CompiledSum {
  public:
    struct Fused {
        uint64_t x = 0;
        uint64_t z = 0;
        std::complex<double> w_even{0.0, 0.0};
        std::complex<double> w_odd{0.0, 0.0};
    };

    static CompiledSum from(const PauliSum& sum);

    int n() const { return n_; }
    uint64_t dim() const { return uint64_t(1) << n_; }
    bool real_weights() const { return real_weights_; }
    double sum_abs_weight() const { return sum_abs_weight_; }
    const std::vector<Fused>& fused() const { return fused_; }

  private:
    int n_ = 1;
    bool real_weights_ = true;
    double sum_abs_weight_ = 0.0;
    std::vector<Fused> fused_;
};

// out = S * in. Both buffers must hold 2^n entries and must not alias.
// The parallel variants compute each output entry independently, so results
// are bitwise identical for any thread count.
void apply_serial(const CompiledSum& op, const std::complex<double>* in,
                  std::complex<double>* out);
void apply_parallel(const CompiledSum& op, const std::complex<double>* in,
                    std::complex<double>* out);

// Real fast path; requires real_weights().
void apply_serial(const CompiledSum& op, const double* in, double* out);
void apply_parallel(const CompiledSum& op, const double* in, double* out);

}  // namespace symbell
