// SPDX-License-Identifier: Apache-2.0
#include "symbell/pi_notation.hpp"

#include <stdexcept>

namespace symbell {

CoefficientGroups::CoefficientGroups(std::vector<std::vector<Rational>> groups)
    : groups_(std::move(groups)) {
    if (groups_.size() < 2) throw std::invalid_argument("at least two parties required");
    for (size_t d = 0; d < groups_.size(); ++d) {
        if (groups_[d].size() != d + 2)
            throw std::invalid_argument("group " + std::to_string(d + 1) +
                                        ": expected " + std::to_string(d + 2) +
                                        " entries, found " +
                                        std::to_string(groups_[d].size()));
    }
}

const Rational& CoefficientGroups::at(int degree, int second_count) const {
    return groups_.at(degree - 1).at(second_count);
}

static std::string normalize_minus(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        // U+2212 minus sign, UTF-8 e2 88 92.
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xe2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out += '-';
            i += 2;
        } else {
            out += text[i];
        }
    }
    return out;
}

CoefficientGroups parse_pi(const std::string& raw) {
    std::string text = normalize_minus(raw);
    size_t begin = text.find_first_not_of(" \t\r\n");
    size_t end = text.find_last_not_of(" \t\r\n");
    if (begin == std::string::npos) throw PiParseError("empty notation");
    if (text[begin] != '[' || text[end] != ']')
        throw PiParseError("notation must be enclosed in '[' and ']'");
    std::string body = text.substr(begin + 1, end - begin - 1);
    if (body.find('[') != std::string::npos || body.find(']') != std::string::npos)
        throw PiParseError("nested brackets are not allowed");

    std::vector<std::vector<Rational>> groups;
    size_t pos = 0;
    int group_index = 0;
    while (true) {
        ++group_index;
        size_t semi = body.find(';', pos);
        std::string chunk =
            body.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::vector<Rational> entries;
        size_t cur = 0;
        while (cur < chunk.size()) {
            size_t start = chunk.find_first_not_of(" \t\r\n,", cur);
            if (start == std::string::npos) break;
            size_t stop = chunk.find_first_of(" \t\r\n,", start);
            if (stop == std::string::npos) stop = chunk.size();
            std::string token = chunk.substr(start, stop - start);
            try {
                entries.push_back(parse_rational(token));
            } catch (const std::invalid_argument&) {
                throw PiParseError("group " + std::to_string(group_index) +
                                   ": bad entry '" + token + "'");
            }
            cur = stop;
        }
        size_t expected = static_cast<size_t>(group_index) + 1;
        if (entries.size() != expected)
            throw PiParseError("group " + std::to_string(group_index) + ": expected " +
                               std::to_string(expected) + " entries, found " +
                               std::to_string(entries.size()));
        groups.push_back(std::move(entries));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (groups.size() < 2) throw PiParseError("at least two groups required");
    return CoefficientGroups(std::move(groups));
}

std::string serialize_pi(const CoefficientGroups& groups) {
    std::string out = "[";
    for (size_t d = 0; d < groups.groups().size(); ++d) {
        if (d > 0) out += "; ";
        const auto& g = groups.groups()[d];
        for (size_t c = 0; c < g.size(); ++c) {
            if (c > 0) out += ' ';
            out += to_string(g[c]);
        }
    }
    out += "]";
    return out;
}

}  // namespace symbell
