// SPDX-License-Identifier: Apache-2.0
#include "symbell/kernels.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <type_traits>

namespace symbell {

CompiledSum CompiledSum::from(const PauliSum& sum) {
    CompiledSum out;
    out.n_ = sum.n();
    // weight = coeff * i^phase_exp; real iff the Y count is even.
    std::map<std::pair<uint64_t, uint64_t>, size_t> index;
    for (const auto& t : sum.terms()) {
        std::complex<double> w = to_double(t.coeff) * i_pow(t.str.phase_exp());
        out.sum_abs_weight_ += std::abs(to_double(t.coeff));
        if (t.str.y_count() & 1) out.real_weights_ = false;
        uint64_t x = t.str.x_mask(), z = t.str.z_mask();
        auto partner = index.find({x, z ^ x});
        if (x != 0 && partner != index.end()) {
            Fused& f = out.fused_[partner->second];
            // f was built from (w1, z1) with z == z1 ^ x; the incoming term
            // contributes w2 with an extra (-1)^popcount(b & x) relative to z1.
            f.w_even += w;
            f.w_odd -= w;
            index.erase(partner);
        } else {
            index[{x, z}] = out.fused_.size();
            out.fused_.push_back({x, z, w, w});
        }
    }
    return out;
}

namespace {

template <typename Scalar>
inline Scalar gather_one(const CompiledSum::Fused* terms, size_t count, uint64_t j,
                         const Scalar* in) {
    Scalar acc{};
    for (size_t t = 0; t < count; ++t) {
        const auto& f = terms[t];
        uint64_t b = j ^ f.x;
        Scalar w;
        if constexpr (std::is_same_v<Scalar, double>) {
            w = (std::popcount(b & f.x) & 1) ? f.w_odd.real() : f.w_even.real();
        } else {
            w = (std::popcount(b & f.x) & 1) ? f.w_odd : f.w_even;
        }
        if (std::popcount(b & f.z) & 1) w = -w;
        acc += w * in[b];
    }
    return acc;
}

template <typename Scalar>
void apply_impl(const CompiledSum& op, const Scalar* in, Scalar* out, bool parallel) {
    const auto* terms = op.fused().data();
    const size_t count = op.fused().size();
    const int64_t dim = static_cast<int64_t>(op.dim());
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int64_t j = 0; j < dim; ++j)
            out[j] = gather_one(terms, count, static_cast<uint64_t>(j), in);
    } else {
        for (int64_t j = 0; j < dim; ++j)
            out[j] = gather_one(terms, count, static_cast<uint64_t>(j), in);
    }
}

}  // namespace

void apply_serial(const CompiledSum& op, const std::complex<double>* in,
                  std::complex<double>* out) {
    apply_impl(op, in, out, false);
}

void apply_parallel(const CompiledSum& op, const std::complex<double>* in,
                    std::complex<double>* out) {
    apply_impl(op, in, out, true);
}

void apply_serial(const CompiledSum& op, const double* in, double* out) {
    if (!op.real_weights()) throw std::invalid_argument("operator has complex weights");
    apply_impl(op, in, out, false);
}

void apply_parallel(const CompiledSum& op, const double* in, double* out) {
    if (!op.real_weights()) throw std::invalid_argument("operator has complex weights");
    apply_impl(op, in, out, true);
}

FloatVector apply_sum_float(const PauliSum& sum, const FloatVector& v) {
    if (sum.n() != v.n) throw std::invalid_argument("qubit count mismatch");
    if (v.amps.size() != v.dim()) throw std::invalid_argument("dimension mismatch");
    CompiledSum op = CompiledSum::from(sum);
    FloatVector out;
    out.n = v.n;
    out.amps.assign(v.amps.size(), {0.0, 0.0});
    apply_parallel(op, v.amps.data(), out.amps.data());
    return out;
}

double expectation_float(const PauliSum& sum, const FloatVector& v) {
    double nrm = v.norm();
    if (nrm == 0.0) throw std::invalid_argument("zero vector");
    FloatVector w = apply_sum_float(sum, v);
    std::complex<double> val = v.dot(w);
    double scale = std::max(1.0, std::abs(val));
    if (std::abs(val.imag()) > 1e-10 * scale)
        throw std::domain_error("expectation has a nonzero imaginary part");
    return val.real() / (nrm * nrm);
}

}  // namespace symbell
