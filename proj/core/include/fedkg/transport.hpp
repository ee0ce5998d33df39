/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fedkg/registry.hpp"

namespace fedkg {

struct HttpRequestSpec {
    HttpMethod method = HttpMethod::Get;
    std::string url;  // absolute, without query string
    std::vector<std::pair<std::string, std::string>> query;  // values already encoded
    std::vector<std::pair<std::string, std::string>> headers;
    std::optional<std::string> body;
    int timeoutMs = 0;  // per-attempt deadline; 0 = transport default

    std::string full_url() const;
    json to_json() const;

    bool operator==(const HttpRequestSpec&) const = default;
};

struct HttpResponse {
    int status = 0;  // 0 = no HTTP status (connection failure or timeout)
    std::string body;
    bool timedOut = false;

    bool operator==(const HttpResponse&) const = default;
};

// The only gateway to any network, real or simulated. Implementations must be safe
// under concurrent send() calls.
class Transport {
public:
    virtual ~Transport() = default;
    virtual HttpResponse send(const HttpRequestSpec& request) = 0;
};

// Real network transport over cpp-httplib. https needs a build with FEDKG_ENABLE_TLS.
class HttpTransport final : public Transport {
public:
    HttpTransport() = default;
    HttpResponse send(const HttpRequestSpec& request) override;
};

}  // namespace fedkg
