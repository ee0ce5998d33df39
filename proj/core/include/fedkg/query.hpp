/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fedkg/error.hpp"
#include "fedkg/structured.hpp"

namespace fedkg {

struct QNode {
    std::string qnodeId;
    std::optional<std::vector<std::string>> ids;         // CURIEs; present => pinned
    std::optional<std::vector<std::string>> categories;  // absent => any type
    json extras = json::object();                        // unrecognized keys, kept verbatim

    bool pinned() const noexcept { return ids.has_value() && !ids->empty(); }
    bool operator==(const QNode&) const = default;
};

struct QEdge {
    std::string qedgeId;
    std::string subject;
    std::string object;
    std::optional<std::vector<std::string>> predicates;
    json extras = json::object();

    bool operator==(const QEdge&) const = default;
};

struct QueryGraph {
    std::map<std::string, QNode> nodes;
    std::map<std::string, QEdge> edges;

    std::vector<std::string> pinned_nodes() const;
    bool operator==(const QueryGraph&) const = default;
};

struct OrderedEdge {
    std::string qedgeId;
    std::string startNode;  // endpoint already bound when the edge executes

    bool operator==(const OrderedEdge&) const = default;
};

struct ExecutionOrder {
    std::vector<OrderedEdge> orderedEdges;

    bool operator==(const ExecutionOrder&) const = default;
};

namespace query_violation {
inline constexpr const char* kNoNodes = "NoNodes";
inline constexpr const char* kNoPinnedNode = "NoPinnedNode";
inline constexpr const char* kDisconnected = "Disconnected";
inline constexpr const char* kDanglingEdgeRef = "DanglingEdgeRef";
inline constexpr const char* kSelfLoop = "SelfLoop";
inline constexpr const char* kInvalidCurie = "InvalidCurie";
inline constexpr const char* kUnknownCategory = "UnknownCategory";
}  // namespace query_violation

// Strips a leading "biolink:" so categories and predicates compare against the vocabulary.
std::string strip_biolink_prefix(const std::string& term);

// Returns every invariant violation of `qg` (empty when valid).
std::vector<Violation> check_query_graph(const QueryGraph& qg);

// Reads `message.query_graph`. Throws QuerySyntax for shape errors and QueryInvalid for
// graph-level violations.
QueryGraph parse_query(const json& doc);
json serialize_query(const QueryGraph& qg);  // full `{"message":{"query_graph":...}}` document
json query_graph_document(const QueryGraph& qg);

// Multi-source breadth-first order from the pinned nodes; ties by qedgeId.
ExecutionOrder plan_order(const QueryGraph& qg);

// Checks the ExecutionOrder invariants against `qg`.
bool is_valid_order(const QueryGraph& qg, const ExecutionOrder& order);

}  // namespace fedkg
