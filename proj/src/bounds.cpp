// SPDX-License-Identifier: Apache-2.0
#include "symbell/bounds.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace symbell {

BellPolynomial bell_polynomial(const PauliSum& sum) {
    BellPolynomial poly;
    poly.n = sum.n();

    Int scale(1);
    for (const auto& t : sum.terms()) scale = lcm(scale, denominator(t.coeff));

    Int abs_total(0);
    uint64_t xs = 0, ys = 0, zs = 0;
    for (const auto& t : sum.terms()) {
        Int c = numerator(Rational(t.coeff * scale));
        abs_total += abs(c);
        if (abs_total > Int(std::numeric_limits<int64_t>::max() / 2))
            throw std::invalid_argument("coefficients too large for strategy evaluation");
        uint64_t xm = t.str.x_mask() & ~t.str.z_mask();
        uint64_t zm = t.str.z_mask() & ~t.str.x_mask();
        uint64_t ym = t.str.x_mask() & t.str.z_mask();
        poly.monos.push_back({c.convert_to<int64_t>(), xm, ym, zm});
        xs |= xm;
        ys |= ym;
        zs |= zm;
    }
    if (xs) poly.axes.push_back('x');
    if (ys) poly.axes.push_back('y');
    if (zs) poly.axes.push_back('z');
    poly.scale = Rational(1, scale);
    return poly;
}

int64_t eval_assignment(const BellPolynomial& poly, uint64_t x_neg, uint64_t y_neg,
                        uint64_t z_neg) {
    int64_t acc = 0;
    for (const auto& m : poly.monos) {
        int parity = (std::popcount(m.xm & x_neg) + std::popcount(m.ym & y_neg) +
                      std::popcount(m.zm & z_neg)) & 1;
        acc += parity ? -m.c : m.c;
    }
    return acc;
}

namespace {

struct AxisMasks {
    uint64_t x_neg = 0, y_neg = 0, z_neg = 0;
};

// Per-party types are k-bit words, one bit per used axis (axes order major to
// minor), bit 0 meaning -1. Type order therefore matches the lexicographic
// order of per-party assignments.
AxisMasks masks_from_types(const BellPolynomial& poly, const std::vector<int>& types) {
    const int k = static_cast<int>(poly.axes.size());
    AxisMasks m;
    for (int p = 0; p < poly.n; ++p) {
        uint64_t party_bit = uint64_t(1) << (poly.n - 1 - p);
        for (int a = 0; a < k; ++a) {
            bool positive = (types[p] >> (k - 1 - a)) & 1;
            if (positive) continue;
            switch (poly.axes[a]) {
                case 'x': m.x_neg |= party_bit; break;
                case 'y': m.y_neg |= party_bit; break;
                default: m.z_neg |= party_bit; break;
            }
        }
    }
    return m;
}

void decode_index(uint64_t idx, int n, int k, std::vector<int>& types) {
    types.resize(n);
    for (int p = n - 1; p >= 0; --p) {
        types[p] = static_cast<int>(idx & ((uint64_t(1) << k) - 1));
        idx >>= k;
    }
}

std::vector<int> types_from_index(uint64_t idx, int n, int k) {
    std::vector<int> types;
    decode_index(idx, n, k, types);
    return types;
}

std::vector<std::vector<int>> decode_assignment(const BellPolynomial& poly,
                                                const std::vector<int>& types) {
    const int k = static_cast<int>(poly.axes.size());
    std::vector<std::vector<int>> out(poly.n);
    for (int p = 0; p < poly.n; ++p) {
        out[p].resize(k);
        for (int a = 0; a < k; ++a)
            out[p][a] = ((types[p] >> (k - 1 - a)) & 1) ? 1 : -1;
    }
    return out;
}

struct Best {
    int64_t value = std::numeric_limits<int64_t>::min();
    uint64_t index = 0;
    bool valid = false;

    void offer(int64_t v, uint64_t idx) {
        if (!valid || v > value || (v == value && idx < index)) {
            value = v;
            index = idx;
            valid = true;
        }
    }
};

Best brute_scan(const BellPolynomial& poly) {
    const int k = static_cast<int>(poly.axes.size());
    const uint64_t total = uint64_t(1) << (k * poly.n);
    int max_threads = 1;
#ifdef _OPENMP
    max_threads = omp_get_max_threads();
#endif
    std::vector<Best> per_thread(max_threads);
#pragma omp parallel num_threads(max_threads)
    {
        int tid = 0;
#ifdef _OPENMP
        tid = omp_get_thread_num();
#endif
        Best local;
        std::vector<int> types;
#pragma omp for schedule(static)
        for (int64_t idx = 0; idx < static_cast<int64_t>(total); ++idx) {
            decode_index(static_cast<uint64_t>(idx), poly.n, k, types);
            AxisMasks m = masks_from_types(poly, types);
            local.offer(eval_assignment(poly, m.x_neg, m.y_neg, m.z_neg),
                        static_cast<uint64_t>(idx));
        }
        per_thread[tid] = local;
    }
    Best best;
    for (const Best& b : per_thread)
        if (b.valid) best.offer(b.value, b.index);
    return best;
}

}  // namespace

BoundResult classical_bound(const PauliSum& sum, const BoundOptions& opt) {
    BellPolynomial poly = bell_polynomial(sum);
    const int k = static_cast<int>(poly.axes.size());
    const int n = poly.n;

    BoundResult result;
    result.axes = poly.axes;
    result.method = opt.method;

    if (k == 0) {
        // Identity terms only; every strategy gives the same value.
        result.value = poly.scale * eval_assignment(poly, 0, 0, 0);
        result.assignment.assign(n, {});
        return result;
    }

    if (opt.method == "brute") {
        int limit = (k >= 3) ? opt.max_n_three_axes : opt.max_n_two_axes;
        if (n > limit)
            throw std::invalid_argument(
                "brute-force bound limited to n <= " + std::to_string(limit) + " for " +
                std::to_string(k) + " axes; use method=symmetric");
        Best best = brute_scan(poly);
        auto types = types_from_index(best.index, n, k);
        result.value = poly.scale * best.value;
        result.assignment = decode_assignment(poly, types);
        return result;
    }

    if (opt.method == "symmetric") {
        if (n > opt.max_n_symmetric)
            throw std::invalid_argument("symmetric bound limited to n <= " +
                                        std::to_string(opt.max_n_symmetric));
        if (!sum.is_permutation_invariant())
            throw std::invalid_argument(
                "symmetric enumeration requires a permutation-invariant operator");
        const int type_count = 1 << k;
        std::vector<int> types(n, 0);
        Best best;
        uint64_t rank = 0;
        while (true) {
            AxisMasks m = masks_from_types(poly, types);
            // Encode the sequence as its brute-force index so ties resolve
            // identically in both methods.
            uint64_t idx = 0;
            for (int p = 0; p < n; ++p) idx = (idx << k) | uint64_t(types[p]);
            best.offer(eval_assignment(poly, m.x_neg, m.y_neg, m.z_neg), idx);
            ++rank;
            int i = n - 1;
            while (i >= 0 && types[i] == type_count - 1) --i;
            if (i < 0) break;
            ++types[i];
            for (int j = i + 1; j < n; ++j) types[j] = types[i];
        }
        (void)rank;
        auto best_types = types_from_index(best.index, n, k);
        result.value = poly.scale * best.value;
        result.assignment = decode_assignment(poly, best_types);
        return result;
    }

    throw std::invalid_argument("method must be brute or symmetric");
}

}  // namespace symbell
