// SPDX-License-Identifier: Apache-2.0
#include "symbell/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace symbell {

double to_double(const Int& v) { return v.convert_to<double>(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa integral.
    Int num = Int(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(num);
    if (exp >= 0) {
        r *= Rational(Int(1) << exp);
    } else {
        r /= Rational(Int(1) << -exp);
    }
    return r;
}

Rational parse_rational(const std::string& text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty rational");
    std::string body = text.substr(begin, end - begin + 1);
    if (!body.empty() && body[0] == '+') body.erase(0, 1);

    auto check_int = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    size_t slash = body.find('/');
    if (slash == std::string::npos) {
        if (!check_int(body)) throw std::invalid_argument("bad rational: " + text);
        return Rational(Int(body));
    }
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!check_int(num) || !check_int(den) || den[0] == '-')
        throw std::invalid_argument("bad rational: " + text);
    Int d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(Int(num), d);
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int result(1);
    for (int i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

}  // namespace symbell
