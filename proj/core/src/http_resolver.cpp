/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include <httplib.h>

#include "fedkg/error.hpp"
#include "fedkg/id_resolution.hpp"
#include "fedkg/query.hpp"
#include "http_util.hpp"

namespace fedkg {

HttpResolver::HttpResolver(std::string baseUrl, int timeoutMs)
    : baseUrl_(std::move(baseUrl)), timeoutMs_(timeoutMs) {
    while (!baseUrl_.empty() && baseUrl_.back() == '/') {
        baseUrl_.pop_back();
    }
}

std::map<std::string, EntityRecord> HttpResolver::decode_response(
    std::span<const std::string> batch, const json& body) {
    if (!body.is_object()) {
        throw ResolverUnavailable("resolver response is not an object");
    }
    std::map<std::string, EntityRecord> out;
    for (const auto& id : batch) {
        if (!body.contains(id) || body.at(id).is_null()) {
            out.emplace(id, EntityRecord::self(id));
            continue;
        }
        const auto& node = body.at(id);
        EntityRecord rec;
        const json ident = node.value("id", json::object());
        rec.canonicalId = ident.value("identifier", id);
        rec.label = ident.value("label", rec.canonicalId);
        for (const auto& eq : node.value("equivalent_identifiers", json::array())) {
            auto value = eq.is_string() ? eq.get<std::string>() : eq.value("identifier", "");
            if (!value.empty() &&
                std::find(rec.equivalentIds.begin(), rec.equivalentIds.end(), value) ==
                    rec.equivalentIds.end()) {
                rec.equivalentIds.push_back(value);
            }
        }
        if (std::find(rec.equivalentIds.begin(), rec.equivalentIds.end(), rec.canonicalId) ==
            rec.equivalentIds.end()) {
            rec.equivalentIds.insert(rec.equivalentIds.begin(), rec.canonicalId);
        }
        for (const auto& t : node.value("type", json::array())) {
            if (t.is_string()) {
                rec.semanticTypes.push_back(strip_biolink_prefix(t.get<std::string>()));
            }
        }
        out.emplace(id, std::move(rec));
    }
    return out;
}

std::map<std::string, EntityRecord> HttpResolver::resolve(
    std::span<const std::string> batch) const {
    auto parts = detail::split_url(baseUrl_ + "/get_normalized_nodes");
    httplib::Client client(parts.origin);
    client.set_connection_timeout(std::chrono::milliseconds(timeoutMs_));
    client.set_read_timeout(std::chrono::milliseconds(timeoutMs_));
    json payload = {{"curies", std::vector<std::string>(batch.begin(), batch.end())}};
    auto res = client.Post(parts.target, payload.dump(), "application/json");
    if (!res) {
        throw ResolverUnavailable(httplib::to_string(res.error()));
    }
    if (res->status != 200) {
        throw ResolverUnavailable("HTTP status " + std::to_string(res->status));
    }
    json body;
    try {
        body = json::parse(res->body);
    } catch (const json::parse_error& e) {
        throw ResolverUnavailable(std::string("unparseable response: ") + e.what());
    }
    return decode_response(batch, body);
}

}  // namespace fedkg
