/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fedkg {

// A compact identifier of the form NAMESPACE:value.
struct Curie {
    std::string prefix;
    std::string value;

    std::string str() const { return prefix + ":" + value; }
    auto operator<=>(const Curie&) const = default;
};

// Prefix must start with a letter or underscore and contain only [A-Za-z0-9_.-];
// the value is non-empty and contains no whitespace.
std::optional<Curie> parse_curie(std::string_view text);
bool is_curie(std::string_view text);

std::string_view curie_prefix(std::string_view curie);

// Percent-encodes everything except unreserved characters and ":@,!$'()*+;".
std::string percent_encode(std::string_view text);

}  // namespace fedkg
