/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include <httplib.h>

#include "fedkg/transport.hpp"
#include "http_util.hpp"

namespace fedkg {

std::string HttpRequestSpec::full_url() const {
    std::string out = url;
    for (std::size_t i = 0; i < query.size(); ++i) {
        out += i == 0 ? "?" : "&";
        out += query[i].first + "=" + query[i].second;
    }
    return out;
}

json HttpRequestSpec::to_json() const {
    json j = {{"method", to_string(method)}, {"url", full_url()}};
    if (body) {
        j["body"] = *body;
    }
    return j;
}

HttpResponse HttpTransport::send(const HttpRequestSpec& request) {
    auto parts = detail::split_url(request.full_url());
    httplib::Client client(parts.origin);
    if (request.timeoutMs > 0) {
        auto t = std::chrono::milliseconds(request.timeoutMs);
        client.set_connection_timeout(t);
        client.set_read_timeout(t);
        client.set_write_timeout(t);
    }
    httplib::Headers headers;
    for (const auto& [k, v] : request.headers) {
        headers.emplace(k, v);
    }
    httplib::Result res = request.method == HttpMethod::Post
                              ? client.Post(parts.target, headers, request.body.value_or(""),
                                            "application/x-www-form-urlencoded")
                              : client.Get(parts.target, headers);
    if (!res) {
        HttpResponse out;
        out.timedOut = res.error() == httplib::Error::Read || res.error() == httplib::Error::Write ||
                       res.error() == httplib::Error::ConnectionTimeout;
        out.body = httplib::to_string(res.error());
        return out;
    }
    return HttpResponse{res->status, res->body, false};
}

}  // namespace fedkg
