/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/curie.hpp"

#include <cctype>

namespace fedkg {

namespace {

bool is_prefix_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
}

}  // namespace

std::optional<Curie> parse_curie(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
        return std::nullopt;
    }
    auto prefix = text.substr(0, colon);
    auto value = text.substr(colon + 1);
    auto first = static_cast<unsigned char>(prefix.front());
    if (!std::isalpha(first) && prefix.front() != '_') {
        return std::nullopt;
    }
    for (char c : prefix) {
        if (!is_prefix_char(c)) {
            return std::nullopt;
        }
    }
    for (char c : value) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            return std::nullopt;
        }
    }
    return Curie{std::string(prefix), std::string(value)};
}

bool is_curie(std::string_view text) { return parse_curie(text).has_value(); }

std::string_view curie_prefix(std::string_view curie) {
    auto colon = curie.find(':');
    return colon == std::string_view::npos ? std::string_view{} : curie.substr(0, colon);
}

std::string percent_encode(std::string_view text) {
    static constexpr std::string_view kKeep = "-._~:@,!$'()*+;";
    static constexpr char kHex[] = "0123456789ABCDEF";
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        auto u = static_cast<unsigned char>(c);
        if (std::isalnum(u) || kKeep.find(c) != std::string_view::npos) {
            out.push_back(c);
        } else {
            out.push_back('%');
            out.push_back(kHex[u >> 4]);
            out.push_back(kHex[u & 0x0F]);
        }
    }
    return out;
}

}  // namespace fedkg
