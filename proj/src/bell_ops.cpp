// SPDX-License-Identifier: Apache-2.0
#include "symbell/bell_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace symbell {

PauliSum dicke_bell(int n) {
    if (n < 2) throw std::invalid_argument("at least two qubits required");
    PauliSum out(n);
    for (char pair_letter : {'X', 'Y'}) {
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::string letters(n, 'Z');
                letters[i] = pair_letter;
                letters[j] = pair_letter;
                out.add_term(Rational(1), letters);
            }
        }
    }
    return out.canonicalize();
}

PauliSum w_bell() { return dicke_bell(3); }

PauliSum mermin3() {
    PauliSum out(3);
    out.add_term(Rational(1), "XXX");
    out.add_term(Rational(-1), "XYY");
    out.add_term(Rational(-1), "YXY");
    out.add_term(Rational(-1), "YYX");
    return out.canonicalize();
}

PauliSum mabk4() {
    PauliSum out(4);
    out.add_term(Rational(1), "XXXX");
    out.add_term(Rational(1), "XXXY");
    out.add_term(Rational(1), "XXYX");
    out.add_term(Rational(1), "XYXX");
    out.add_term(Rational(1), "YXXX");
    out.add_term(Rational(-1), "XXYY");
    out.add_term(Rational(-1), "XYXY");
    out.add_term(Rational(-1), "XYYX");
    out.add_term(Rational(-1), "YXXY");
    out.add_term(Rational(-1), "YXYX");
    out.add_term(Rational(-1), "YYXX");
    out.add_term(Rational(-1), "XYYY");
    out.add_term(Rational(-1), "YXYY");
    out.add_term(Rational(-1), "YYXY");
    out.add_term(Rational(-1), "YYYX");
    out.add_term(Rational(1), "YYYY");
    return out.canonicalize();
}

FloatVector ghz_float(int n, int phase_numerator) {
    if (n < 2 || n > 30) throw std::invalid_argument("qubit count out of range");
    FloatVector v;
    v.n = n;
    v.amps.assign(uint64_t(1) << n, {0.0, 0.0});
    const double r = std::sqrt(0.5);
    v.amps[0] = {r, 0.0};
    int k = ((phase_numerator % 8) + 8) % 8;
    v.amps[v.dim() - 1] = (k == 0) ? std::complex<double>{r, 0.0}
                                   : std::polar(r, M_PI * k / 4.0);
    return v;
}

ObservableSpec ObservableSpec::axis(char which) {
    switch (which) {
        case 'x': case 'X': return ObservableSpec(1.0, 0.0, 0.0);
        case 'y': case 'Y': return ObservableSpec(0.0, 1.0, 0.0);
        case 'z': case 'Z': return ObservableSpec(0.0, 0.0, 1.0);
        default: throw std::invalid_argument("axis must be x, y or z");
    }
}

ObservableSpec ObservableSpec::bloch(double x, double y, double z) {
    double norm_sq = x * x + y * y + z * z;
    if (std::abs(norm_sq - 1.0) > 1e-12)
        throw std::invalid_argument("Bloch vector must have unit norm");
    return ObservableSpec(x, y, z);
}

bool ObservableSpec::is_axis() const {
    int nonzero = (x_ != 0.0) + (y_ != 0.0) + (z_ != 0.0);
    if (nonzero != 1) return false;
    return x_ == 1.0 || y_ == 1.0 || z_ == 1.0;
}

char ObservableSpec::axis_letter() const {
    if (x_ == 1.0) return 'X';
    if (y_ == 1.0) return 'Y';
    if (z_ == 1.0) return 'Z';
    throw std::logic_error("not an axis observable");
}

namespace {

struct Component {
    char letter;
    Rational weight;
};

std::vector<Component> components_of(const ObservableSpec& obs) {
    std::vector<Component> out;
    if (obs.x() != 0.0) out.push_back({'X', rational_from_double(obs.x())});
    if (obs.y() != 0.0) out.push_back({'Y', rational_from_double(obs.y())});
    if (obs.z() != 0.0) out.push_back({'Z', rational_from_double(obs.z())});
    return out;
}

// Lexicographically ordered k-subsets of {0, .., n-1}; visit(indices).
template <typename Visit>
void for_each_combination(int n, int k, Visit visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

PauliSum compile_pi(const CoefficientGroups& groups, const ObservableSpec& m1,
                    const ObservableSpec& m2) {
    const int n = groups.parties();
    PauliSum out(n);
    const auto comps1 = components_of(m1);
    const auto comps2 = components_of(m2);

    for (int d = 1; d <= n; ++d) {
        for (int c = 0; c <= d; ++c) {
            const Rational& alpha = groups.at(d, c);
            if (alpha == 0) continue;
            for_each_combination(n, d, [&](const std::vector<int>& parties) {
                for_each_combination(d, c, [&](const std::vector<int>& second) {
                    std::vector<bool> uses_second(d, false);
                    for (int s : second) uses_second[s] = true;
                    // Expand the product over each party's components.
                    std::vector<std::pair<Rational, std::string>> partial{
                        {alpha, std::string(n, 'I')}};
                    for (int slot = 0; slot < d; ++slot) {
                        const auto& comps = uses_second[slot] ? comps2 : comps1;
                        std::vector<std::pair<Rational, std::string>> next;
                        next.reserve(partial.size() * comps.size());
                        for (const auto& [coeff, letters] : partial) {
                            for (const auto& comp : comps) {
                                std::string grown = letters;
                                grown[parties[slot]] = comp.letter;
                                next.emplace_back(coeff * comp.weight, grown);
                            }
                        }
                        partial = std::move(next);
                    }
                    for (const auto& [coeff, letters] : partial)
                        out.add_term(coeff, letters);
                });
            });
        }
    }
    return out.canonicalize();
}

}  // namespace symbell
