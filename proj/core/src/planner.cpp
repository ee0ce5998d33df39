/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/planner.hpp"

#include <algorithm>
#include <tuple>

namespace fedkg {

std::string_view to_string(Direction d) { return d == Direction::Forward ? "forward" : "reverse"; }

std::vector<std::string> QueryPlan::unsatisfiable_edges() const {
    std::vector<std::string> out;
    for (const auto& oe : order.orderedEdges) {
        auto it = perEdge.find(oe.qedgeId);
        if (it == perEdge.end() || it->second.empty()) {
            out.push_back(oe.qedgeId);
        }
    }
    return out;
}

TypeSet node_categories(const QNode& node) {
    if (!node.categories || node.categories->empty()) {
        return std::nullopt;
    }
    return std::set<std::string>(node.categories->begin(), node.categories->end());
}

TypeSet edge_predicates(const QEdge& edge) {
    if (!edge.predicates || edge.predicates->empty()) {
        return std::nullopt;
    }
    return std::set<std::string>(edge.predicates->begin(), edge.predicates->end());
}

std::vector<InvocationSpec> plan_edge(const QEdge& qedge, const std::string& startNode,
                                      const QueryGraph& qg, const MetaKG& metakg,
                                      const TypeHierarchy& hierarchy) {
    const bool forward = startNode == qedge.subject;
    const auto& otherNode = forward ? qedge.object : qedge.subject;
    auto inputs = expand_types(node_categories(qg.nodes.at(startNode)), hierarchy);
    auto outputs = expand_types(node_categories(qg.nodes.at(otherNode)), hierarchy);
    auto predicates = edge_predicates(qedge);

    std::vector<InvocationSpec> specs;
    for (const auto& e : metakg.edges()) {
        if (matches_constraints(e, inputs, predicates, outputs)) {
            specs.push_back({e, forward ? Direction::Forward : Direction::Reverse,
                             e.subjectNamespace, qedge.qedgeId});
        }
    }
    std::stable_sort(specs.begin(), specs.end(), [](const auto& a, const auto& b) {
        return std::tie(a.metaEdge.apiId, a.metaEdge.opId) < std::tie(b.metaEdge.apiId, b.metaEdge.opId);
    });
    return specs;
}

QueryPlan plan_query(const QueryGraph& qg, const MetaKG& metakg, const TypeHierarchy& hierarchy) {
    QueryPlan plan;
    plan.order = plan_order(qg);
    for (const auto& oe : plan.order.orderedEdges) {
        plan.perEdge[oe.qedgeId] =
            plan_edge(qg.edges.at(oe.qedgeId), oe.startNode, qg, metakg, hierarchy);
    }
    return plan;
}

json plan_to_json(const QueryPlan& plan) {
    json order = json::array();
    for (const auto& oe : plan.order.orderedEdges) {
        json specs = json::array();
        for (const auto& s : plan.perEdge.at(oe.qedgeId)) {
            specs.push_back({{"api_id", s.metaEdge.apiId},
                             {"op_id", s.metaEdge.opId},
                             {"subject", s.metaEdge.subjectType},
                             {"predicate", s.metaEdge.predicate},
                             {"object", s.metaEdge.objectType},
                             {"input_namespace", s.inputNamespace},
                             {"output_namespace", s.metaEdge.objectNamespace},
                             {"direction", to_string(s.direction)}});
        }
        order.push_back({{"qedge_id", oe.qedgeId}, {"start_node", oe.startNode}, {"invocations", specs}});
    }
    return json{{"plan", order},
                {"satisfiable", plan.satisfiable()},
                {"unsatisfiable_edges", plan.unsatisfiable_edges()}};
}

}  // namespace fedkg
