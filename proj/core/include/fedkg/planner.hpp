/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "fedkg/metakg.hpp"
#include "fedkg/query.hpp"

namespace fedkg {

enum class Direction { Forward, Reverse };

std::string_view to_string(Direction d);

// One operation to run for one query edge. Forward: the bound start node is the query
// edge's subject. Reverse: it is the query edge's object. Either way the operation's
// input side (metaEdge.subjectType) is matched against the start node.
struct InvocationSpec {
    MetaEdge metaEdge;
    Direction direction = Direction::Forward;
    std::string inputNamespace;
    std::string qedgeId;

    bool operator==(const InvocationSpec&) const = default;
};

struct QueryPlan {
    std::map<std::string, std::vector<InvocationSpec>> perEdge;
    ExecutionOrder order;

    std::vector<std::string> unsatisfiable_edges() const;
    bool satisfiable() const { return unsatisfiable_edges().empty(); }
};

TypeSet node_categories(const QNode& node);
TypeSet edge_predicates(const QEdge& edge);

std::vector<InvocationSpec> plan_edge(const QEdge& qedge, const std::string& startNode,
                                      const QueryGraph& qg, const MetaKG& metakg,
                                      const TypeHierarchy& hierarchy = {});

QueryPlan plan_query(const QueryGraph& qg, const MetaKG& metakg,
                     const TypeHierarchy& hierarchy = {});

json plan_to_json(const QueryPlan& plan);

}  // namespace fedkg
