/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/error.hpp"

namespace fedkg {

std::string describe(const std::vector<Violation>& violations) {
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) {
            out += "; ";
        }
        out += v.code;
        if (!v.location.empty()) {
            out += " at " + v.location;
        }
        if (!v.message.empty()) {
            out += " (" + v.message + ")";
        }
    }
    return out;
}

namespace {

std::string summarize(const std::vector<DocumentReport>& reports) {
    std::string out = "invalid annotation document(s):";
    for (const auto& r : reports) {
        out += " [" + (r.apiId.empty() ? std::string("<unnamed>") : r.apiId) + ": " +
               describe(r.violations) + "]";
    }
    return out;
}

}  // namespace

DocumentInvalid::DocumentInvalid(std::vector<DocumentReport> reports)
    : Error("DocumentInvalid", summarize(reports)), reports_(std::move(reports)) {}

TemplateSyntax::TemplateSyntax(std::size_t position, const std::string& reason)
    : Error("TemplateSyntax", "template syntax error at " + std::to_string(position) + ": " + reason),
      position_(position),
      reason_(reason) {}

}  // namespace fedkg
