/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <string>
#include <string_view>

#include "fedkg/error.hpp"

namespace fedkg::detail {

// "http://host:8080/a/b?x=1" -> origin "http://host:8080", target "/a/b?x=1".
struct SplitUrl {
    std::string origin;
    std::string target;
};

inline SplitUrl split_url(std::string_view url) {
    auto scheme = url.find("://");
    if (scheme == std::string_view::npos) {
        throw Error("InvalidUrl", "not an absolute URL: " + std::string(url));
    }
    auto slash = url.find('/', scheme + 3);
    if (slash == std::string_view::npos) {
        return {std::string(url), "/"};
    }
    return {std::string(url.substr(0, slash)), std::string(url.substr(slash))};
}

}  // namespace fedkg::detail
