/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once
// Linear scan over every meta-edge, with type subsumption decided by walking parent links
// upward (the engine expands constraints downward instead).

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fedkg/planner.hpp"

namespace fedkg::testing {

// (apiId, opId, subjectNamespace, objectNamespace, forward?)
using SpecKey = std::tuple<std::string, std::string, std::string, std::string, bool>;

inline bool is_a(const std::string& type, const std::string& category,
                 const TypeHierarchy& hierarchy) {
    std::optional<std::string> t = type;
    while (t) {
        if (*t == category) {
            return true;
        }
        t = hierarchy.parent(*t);
    }
    return false;
}

inline bool type_ok(const std::string& type, const std::optional<std::vector<std::string>>& cats,
                    const TypeHierarchy& hierarchy) {
    if (!cats) {
        return true;
    }
    for (const auto& c : *cats) {
        if (is_a(type, c, hierarchy)) {
            return true;
        }
    }
    return false;
}

inline std::set<SpecKey> brute_force_specs(const std::vector<MetaEdge>& edges, const QEdge& qe,
                                           const std::string& start, const QueryGraph& qg,
                                           const TypeHierarchy& hierarchy) {
    const std::string other = qe.subject == start ? qe.object : qe.subject;
    std::set<SpecKey> out;
    for (const auto& e : edges) {
        if (!type_ok(e.subjectType, qg.nodes.at(start).categories, hierarchy) ||
            !type_ok(e.objectType, qg.nodes.at(other).categories, hierarchy)) {
            continue;
        }
        if (qe.predicates) {
            bool hit = false;
            for (const auto& p : *qe.predicates) {
                hit = hit || p == e.predicate;
            }
            if (!hit) {
                continue;
            }
        }
        out.insert({e.apiId, e.opId, e.subjectNamespace, e.objectNamespace, qe.subject == start});
    }
    return out;
}

inline std::set<SpecKey> spec_keys(const std::vector<InvocationSpec>& specs) {
    std::set<SpecKey> out;
    for (const auto& s : specs) {
        out.insert({s.metaEdge.apiId, s.metaEdge.opId, s.metaEdge.subjectNamespace,
                    s.metaEdge.objectNamespace, s.direction == Direction::Forward});
    }
    return out;
}

}  // namespace fedkg::testing
