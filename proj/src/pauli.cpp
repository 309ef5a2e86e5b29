// SPDX-License-Identifier: Apache-2.0
#include "symbell/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "symbell/util.hpp"

namespace symbell {

std::complex<double> i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

Permutation identity_permutation(int n) {
    Permutation pi(n);
    for (int p = 0; p < n; ++p) pi[p] = p;
    return pi;
}

Permutation transposition(int n, int p, int q) {
    Permutation pi = identity_permutation(n);
    pi[p] = q;
    pi[q] = p;
    return pi;
}

static void check_permutation(const Permutation& pi, int n) {
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (int v : pi) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = true;
    }
}

PauliString::PauliString(int n, uint64_t x_mask, uint64_t z_mask, int phase_exp)
    : n_(n), x_mask_(x_mask), z_mask_(z_mask), phase_exp_(((phase_exp % 4) + 4) % 4) {
    if (n < 1 || n > 62) throw std::invalid_argument("qubit count out of range");
    uint64_t allowed = (n == 64) ? ~uint64_t(0) : ((uint64_t(1) << n) - 1);
    if ((x_mask & ~allowed) || (z_mask & ~allowed))
        throw std::invalid_argument("mask exceeds qubit count");
}

PauliString PauliString::from_letters(std::string_view letters) {
    int n = static_cast<int>(letters.size());
    if (n < 1 || n > 62) throw std::invalid_argument("qubit count out of range");
    uint64_t x = 0, z = 0;
    int ys = 0;
    for (int p = 0; p < n; ++p) {
        uint64_t bit = uint64_t(1) << (n - 1 - p);
        switch (letters[p]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Z': z |= bit; break;
            case 'Y': x |= bit; z |= bit; ++ys; break;
            default: throw std::invalid_argument("invalid Pauli letter");
        }
    }
    return PauliString(n, x, z, ys & 3);
}

PauliString PauliString::identity(int n) { return PauliString(n, 0, 0, 0); }

char PauliString::letter_at(int position) const {
    if (position < 0 || position >= n_) throw std::out_of_range("qubit position");
    uint64_t bit = uint64_t(1) << (n_ - 1 - position);
    bool x = x_mask_ & bit, z = z_mask_ & bit;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

std::string PauliString::letters() const {
    std::string s(n_, 'I');
    for (int p = 0; p < n_; ++p) s[p] = letter_at(p);
    return s;
}

int PauliString::y_count() const { return std::popcount(x_mask_ & z_mask_); }

int PauliString::weight() const { return std::popcount(x_mask_ | z_mask_); }

bool PauliString::is_hermitian() const { return ((phase_exp_ - y_count()) & 1) == 0; }

AppliedBasis PauliString::apply(uint64_t basis) const {
    if (basis >> n_) throw std::out_of_range("basis index");
    int k = (phase_exp_ + 2 * (std::popcount(basis & z_mask_) & 1)) & 3;
    return {basis ^ x_mask_, k};
}

PauliString PauliString::permuted(const Permutation& pi) const {
    check_permutation(pi, n_);
    uint64_t x = 0, z = 0;
    for (int p = 0; p < n_; ++p) {
        uint64_t src = uint64_t(1) << (n_ - 1 - p);
        uint64_t dst = uint64_t(1) << (n_ - 1 - pi[p]);
        if (x_mask_ & src) x |= dst;
        if (z_mask_ & src) z |= dst;
    }
    return PauliString(n_, x, z, phase_exp_);
}

PauliSum::PauliSum(int n) : n_(n) {
    if (n < 1 || n > 62) throw std::invalid_argument("qubit count out of range");
}

void PauliSum::add_term(const Rational& coeff, const PauliString& str) {
    if (str.n() != n_) throw std::invalid_argument("qubit count mismatch");
    int d = ((str.phase_exp() - str.y_count()) % 4 + 4) % 4;
    if (d & 1) throw std::invalid_argument("term is not Hermitian");
    Rational c = (d == 2) ? Rational(-coeff) : coeff;
    terms_.push_back({c, PauliString(n_, str.x_mask(), str.z_mask(), str.y_count() & 3)});
}

void PauliSum::add_term(const Rational& coeff, std::string_view letters) {
    add_term(coeff, PauliString::from_letters(letters));
}

PauliSum& PauliSum::canonicalize() {
    std::map<std::pair<uint64_t, uint64_t>, size_t> first;
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (const Term& t : terms_) {
        auto key = std::make_pair(t.str.x_mask(), t.str.z_mask());
        auto it = first.find(key);
        if (it == first.end()) {
            first.emplace(key, merged.size());
            merged.push_back(t);
        } else {
            merged[it->second].coeff += t.coeff;
        }
    }
    terms_.clear();
    for (Term& t : merged)
        if (t.coeff != 0) terms_.push_back(std::move(t));
    return *this;
}

bool PauliSum::is_real_symmetric() const {
    for (const Term& t : terms_)
        if (t.str.y_count() & 1) return false;
    return true;
}

bool PauliSum::is_permutation_invariant() const {
    for (int p = 0; p + 1 < n_; ++p)
        if (!(permuted(transposition(n_, p, p + 1)) == *this)) return false;
    return true;
}

Rational PauliSum::sum_abs_coeff() const {
    Rational s(0);
    for (const Term& t : terms_) s += abs(t.coeff);
    return s;
}

PauliSum PauliSum::permuted(const Permutation& pi) const {
    PauliSum out(n_);
    for (const Term& t : terms_) out.add_term(t.coeff, t.str.permuted(pi));
    return out;
}

std::string PauliSum::to_text() const {
    std::string out;
    for (const Term& t : terms_) {
        out += to_string(t.coeff);
        out += ' ';
        out += t.str.letters();
        out += '\n';
    }
    return out;
}

PauliSum PauliSum::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<Rational, std::string>> parsed;
    int n = 0;
    while (std::getline(in, line)) {
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r");
        std::string body = line.substr(begin, end - begin + 1);
        size_t space = body.find_first_of(" \t");
        if (space == std::string::npos)
            throw std::invalid_argument("expected '<coeff> <letters>': " + line);
        std::string coeff = body.substr(0, space);
        size_t ls = body.find_first_not_of(" \t", space);
        std::string letters = body.substr(ls);
        if (letters.find_first_of(" \t") != std::string::npos)
            throw std::invalid_argument("trailing tokens: " + line);
        if (n == 0) {
            n = static_cast<int>(letters.size());
        } else if (static_cast<int>(letters.size()) != n) {
            throw std::invalid_argument("inconsistent qubit count: " + line);
        }
        parsed.emplace_back(parse_rational(coeff), letters);
    }
    if (n == 0) throw std::invalid_argument("empty operator text");
    PauliSum out(n);
    for (auto& [coeff, letters] : parsed) out.add_term(coeff, letters);
    return out;
}

std::string PauliSum::canonical_text() const {
    std::map<std::string, Rational> merged;
    for (const Term& t : terms_) merged[t.str.letters()] += t.coeff;
    std::string out;
    for (const auto& [letters, coeff] : merged) {
        if (coeff == 0) continue;
        out += to_string(coeff);
        out += ' ';
        out += letters;
        out += '\n';
    }
    return out;
}

std::string PauliSum::hash_hex() const { return hex64(fnv1a64(canonical_text())); }

bool operator==(const PauliSum& a, const PauliSum& b) {
    return a.n_ == b.n_ && a.canonical_text() == b.canonical_text();
}

ExactVector::ExactVector(int n) : n_(n), norm_sq_(0) {
    if (n < 1 || n > 62) throw std::invalid_argument("qubit count out of range");
}

ExactVector ExactVector::basis(int n, uint64_t index) {
    ExactVector v(n);
    v.set(index, Int(1));
    return v;
}

void ExactVector::set(uint64_t index, const Int& value) {
    if (index >> n_) throw std::out_of_range("basis index");
    auto it = amps_.find(index);
    if (it != amps_.end()) {
        norm_sq_ -= it->second * it->second;
        if (value == 0) {
            amps_.erase(it);
        } else {
            it->second = value;
            norm_sq_ += value * value;
        }
    } else if (value != 0) {
        amps_.emplace(index, value);
        norm_sq_ += value * value;
    }
}

Int ExactVector::amp(uint64_t index) const {
    auto it = amps_.find(index);
    return it == amps_.end() ? Int(0) : it->second;
}

Int ExactVector::inner(const ExactVector& other) const {
    if (n_ != other.n_) throw std::invalid_argument("qubit count mismatch");
    const auto& small = amps_.size() <= other.amps_.size() ? amps_ : other.amps_;
    const auto& large = amps_.size() <= other.amps_.size() ? other.amps_ : amps_;
    Int acc(0);
    for (const auto& [idx, a] : small) {
        auto it = large.find(idx);
        if (it != large.end()) acc += a * it->second;
    }
    return acc;
}

ExactVector ExactVector::permuted(const Permutation& pi) const {
    check_permutation(pi, n_);
    ExactVector out(n_);
    for (const auto& [idx, a] : amps_) {
        uint64_t moved = 0;
        for (int p = 0; p < n_; ++p)
            if (idx & (uint64_t(1) << (n_ - 1 - p))) moved |= uint64_t(1) << (n_ - 1 - pi[p]);
        out.set(moved, a);
    }
    return out;
}

bool operator==(const ExactVector& a, const ExactVector& b) {
    return a.n_ == b.n_ && a.amps_ == b.amps_;
}

bool GaussianVector::imag_is_zero() const {
    for (const auto& [idx, re_im] : amps)
        if (re_im.second != 0) return false;
    return true;
}

ExactVector GaussianVector::real_part() const {
    ExactVector out(n);
    for (const auto& [idx, re_im] : amps)
        if (re_im.first != 0) out.set(idx, re_im.first);
    return out;
}

GaussianVector apply_sum_gaussian(const PauliSum& sum, const ExactVector& v) {
    if (sum.n() != v.n()) throw std::invalid_argument("qubit count mismatch");
    GaussianVector out;
    out.n = sum.n();
    for (const auto& t : sum.terms()) {
        if (denominator(t.coeff) != 1)
            throw std::invalid_argument("integer coefficients required");
        Int c = numerator(t.coeff);
        for (const auto& [b, a] : v.amps()) {
            AppliedBasis r = t.str.apply(b);
            Int contrib = c * a;
            auto& slot = out.amps[r.index];
            switch (r.phase_exp) {
                case 0: slot.first += contrib; break;
                case 1: slot.second += contrib; break;
                case 2: slot.first -= contrib; break;
                default: slot.second -= contrib; break;
            }
        }
    }
    for (auto it = out.amps.begin(); it != out.amps.end();) {
        if (it->second.first == 0 && it->second.second == 0)
            it = out.amps.erase(it);
        else
            ++it;
    }
    return out;
}

ExactVector apply_sum_exact(const PauliSum& sum, const ExactVector& v) {
    GaussianVector g = apply_sum_gaussian(sum, v);
    if (!g.imag_is_zero())
        throw std::domain_error("result has a nonzero imaginary part");
    return g.real_part();
}

Rational expectation_exact(const PauliSum& sum, const ExactVector& v) {
    if (v.is_zero()) throw std::invalid_argument("zero vector");
    Int scale(1);
    for (const auto& t : sum.terms()) scale = lcm(scale, denominator(t.coeff));
    PauliSum scaled(sum.n());
    for (const auto& t : sum.terms()) scaled.add_term(t.coeff * scale, t.str);
    GaussianVector w = apply_sum_gaussian(scaled, v);
    Int re(0), im(0);
    for (const auto& [idx, re_im] : w.amps) {
        Int a = v.amp(idx);
        if (a == 0) continue;
        re += a * re_im.first;
        im += a * re_im.second;
    }
    if (im != 0) throw std::logic_error("Hermitian expectation with imaginary part");
    return Rational(re, scale * v.norm_sq());
}

FloatVector FloatVector::basis(int n, uint64_t index) {
    if (n < 1 || n > 30) throw std::invalid_argument("qubit count out of range");
    if (index >> n) throw std::out_of_range("basis index");
    FloatVector v;
    v.n = n;
    v.amps.assign(uint64_t(1) << n, {0.0, 0.0});
    v.amps[index] = {1.0, 0.0};
    return v;
}

FloatVector FloatVector::from_exact(const ExactVector& v) {
    if (v.is_zero()) throw std::invalid_argument("zero vector");
    FloatVector out;
    out.n = v.n();
    out.amps.assign(v.dim(), {0.0, 0.0});
    double inv = 1.0 / std::sqrt(to_double(v.norm_sq()));
    for (const auto& [idx, a] : v.amps()) out.amps[idx] = {to_double(a) * inv, 0.0};
    return out;
}

double FloatVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return std::sqrt(s);
}

bool FloatVector::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

std::complex<double> FloatVector::dot(const FloatVector& other) const {
    if (n != other.n || amps.size() != other.amps.size())
        throw std::invalid_argument("dimension mismatch");
    std::complex<double> s{0.0, 0.0};
    for (size_t i = 0; i < amps.size(); ++i) s += std::conj(amps[i]) * other.amps[i];
    return s;
}

}  // namespace symbell
