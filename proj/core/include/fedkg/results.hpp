/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <string>
#include <vector>

#include "fedkg/assembly.hpp"

namespace fedkg {

struct Diagnostic {
    std::string level;  // "INFO", "WARNING" or "ERROR"
    std::string code;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

json diagnostic_to_json(const Diagnostic& d);

// TRAPI-style response:
//   {"message": {"query_graph": ..., "knowledge_graph": {"nodes": ..., "edges": ...},
//                "results": [{"node_bindings": ..., "edge_bindings": ..., "score": s}]},
//    "logs": [...]}
// Knowledge-graph edges are deduplicated by (subject, predicate, object); every
// contributing API is listed under "sources". Edge keys are assigned in sorted order.
json results_document(const QueryGraph& qg, const std::vector<ResultGraph>& results,
                      const std::vector<Diagnostic>& logs = {});

}  // namespace fedkg
