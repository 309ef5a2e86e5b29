// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "symbell/rational.hpp"

namespace symbell {

// Coefficients of a permutation-invariant Bell expression in bracket form.
// Group d (1-based) covers the degree-d correlators and holds d+1 entries;
// entry index c is the coefficient applied when c of the d participating
// parties use their second setting.
class CoefficientGroups {
  public:
    explicit CoefficientGroups(std::vector<std::vector<Rational>> groups);

    int parties() const { return static_cast<int>(groups_.size()); }
    const std::vector<std::vector<Rational>>& groups() const { return groups_; }
    const Rational& at(int degree, int second_count) const;

    friend bool operator==(const CoefficientGroups& a,
                           const CoefficientGroups& b) = default;

  private:
    std::vector<std::vector<Rational>> groups_;
};

struct PiParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bracket grammar: "[" group (";" group)* "]" with whitespace- or
// comma-separated rational entries. A Unicode minus sign is accepted as '-'.
// Errors carry the 1-based group index and the reason.
CoefficientGroups parse_pi(const std::string& text);

// Canonical form: single spaces between entries, "; " between groups.
// serialize(parse(s)) is a fixed point of parse/serialize.
std::string serialize_pi(const CoefficientGroups& groups);

}  // namespace symbell
