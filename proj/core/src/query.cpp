/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/query.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "fedkg/curie.hpp"
#include "fedkg/error.hpp"

namespace fedkg {

namespace {

constexpr std::string_view kBiolinkPrefix = "biolink:";

std::optional<std::vector<std::string>> string_list(const json& obj, const char* key,
                                                    const std::string& path, bool stripBiolink) {
    if (!obj.contains(key) || obj.at(key).is_null()) {
        return std::nullopt;
    }
    const auto& v = obj.at(key);
    std::vector<std::string> out;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string()) {
                throw QuerySyntax(path + "." + key + "[" + std::to_string(i) + "]",
                                  "expected a string");
            }
            out.push_back(v[i].get<std::string>());
        }
    } else {
        throw QuerySyntax(path + "." + key, "expected a list of strings");
    }
    if (stripBiolink) {
        for (auto& s : out) {
            s = strip_biolink_prefix(s);
        }
    }
    return out;
}

json extras_of(const json& obj, std::initializer_list<const char*> known) {
    json extras = json::object();
    for (const auto& [k, v] : obj.items()) {
        if (std::find_if(known.begin(), known.end(), [&](const char* n) { return k == n; }) ==
            known.end()) {
            extras[k] = v;
        }
    }
    return extras;
}

}  // namespace

std::string strip_biolink_prefix(const std::string& term) {
    return term.rfind(kBiolinkPrefix, 0) == 0 ? term.substr(kBiolinkPrefix.size()) : term;
}

std::vector<std::string> QueryGraph::pinned_nodes() const {
    std::vector<std::string> out;
    for (const auto& [id, n] : nodes) {
        if (n.pinned()) {
            out.push_back(id);
        }
    }
    return out;
}

std::vector<Violation> check_query_graph(const QueryGraph& qg) {
    std::vector<Violation> out;
    if (qg.nodes.empty()) {
        out.push_back({query_violation::kNoNodes, "query graph has no nodes", "nodes"});
        return out;
    }
    for (const auto& [id, n] : qg.nodes) {
        if (!n.ids) {
            continue;
        }
        for (const auto& c : *n.ids) {
            if (!is_curie(c)) {
                out.push_back({query_violation::kInvalidCurie, "'" + c + "' is not a CURIE",
                               "nodes." + id + ".ids"});
            }
        }
    }
    if (qg.pinned_nodes().empty()) {
        out.push_back({query_violation::kNoPinnedNode, "at least one node needs ids", "nodes"});
    }
    bool dangling = false;
    for (const auto& [id, e] : qg.edges) {
        for (const auto* end : {&e.subject, &e.object}) {
            if (!qg.nodes.contains(*end)) {
                out.push_back({query_violation::kDanglingEdgeRef,
                               "edge references unknown node '" + *end + "'", "edges." + id});
                dangling = true;
            }
        }
        if (e.subject == e.object) {
            out.push_back({query_violation::kSelfLoop, "subject equals object", "edges." + id});
        }
    }
    if (dangling) {
        return out;
    }
    // Weak connectivity via union-find over node ids.
    std::map<std::string, std::string> parent;
    for (const auto& [id, n] : qg.nodes) {
        parent[id] = id;
    }
    auto find = [&](std::string x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& [id, e] : qg.edges) {
        parent[find(e.subject)] = find(e.object);
    }
    std::set<std::string> roots;
    for (const auto& [id, n] : qg.nodes) {
        roots.insert(find(id));
    }
    if (roots.size() > 1) {
        out.push_back({query_violation::kDisconnected,
                       std::to_string(roots.size()) + " weakly connected components", "edges"});
    }
    return out;
}

QueryGraph parse_query(const json& doc) {
    if (!doc.is_object() || !doc.contains("message") || !doc.at("message").is_object()) {
        throw QuerySyntax("message", "missing message object");
    }
    const auto& message = doc.at("message");
    if (!message.contains("query_graph") || !message.at("query_graph").is_object()) {
        throw QuerySyntax("message.query_graph", "missing query_graph object");
    }
    const auto& graph = message.at("query_graph");
    const json nodes = graph.value("nodes", json::object());
    const json edges = graph.value("edges", json::object());
    if (!nodes.is_object()) {
        throw QuerySyntax("message.query_graph.nodes", "expected a map");
    }
    if (!edges.is_object()) {
        throw QuerySyntax("message.query_graph.edges", "expected a map");
    }
    QueryGraph qg;
    for (const auto& [id, n] : nodes.items()) {
        auto path = "message.query_graph.nodes." + id;
        if (!n.is_object()) {
            throw QuerySyntax(path, "expected a map");
        }
        QNode node;
        node.qnodeId = id;
        node.ids = string_list(n, "ids", path, false);
        node.categories = string_list(n, "categories", path, true);
        node.extras = extras_of(n, {"ids", "categories"});
        qg.nodes.emplace(id, std::move(node));
    }
    for (const auto& [id, e] : edges.items()) {
        auto path = "message.query_graph.edges." + id;
        if (!e.is_object()) {
            throw QuerySyntax(path, "expected a map");
        }
        QEdge edge;
        edge.qedgeId = id;
        for (const char* key : {"subject", "object"}) {
            if (!e.contains(key) || !e.at(key).is_string()) {
                throw QuerySyntax(path + "." + key, "expected a node id string");
            }
        }
        edge.subject = e.at("subject").get<std::string>();
        edge.object = e.at("object").get<std::string>();
        edge.predicates = string_list(e, "predicates", path, true);
        edge.extras = extras_of(e, {"subject", "object", "predicates"});
        qg.edges.emplace(id, std::move(edge));
    }
    auto violations = check_query_graph(qg);
    if (!violations.empty()) {
        throw QueryInvalid(std::move(violations));
    }
    return qg;
}

json query_graph_document(const QueryGraph& qg) {
    json nodes = json::object();
    for (const auto& [id, n] : qg.nodes) {
        json obj = n.extras;
        if (n.ids) {
            obj["ids"] = *n.ids;
        }
        if (n.categories) {
            json cats = json::array();
            for (const auto& c : *n.categories) {
                cats.push_back(std::string(kBiolinkPrefix) + c);
            }
            obj["categories"] = cats;
        }
        nodes[id] = obj;
    }
    json edges = json::object();
    for (const auto& [id, e] : qg.edges) {
        json obj = e.extras;
        obj["subject"] = e.subject;
        obj["object"] = e.object;
        if (e.predicates) {
            json preds = json::array();
            for (const auto& p : *e.predicates) {
                preds.push_back(std::string(kBiolinkPrefix) + p);
            }
            obj["predicates"] = preds;
        }
        edges[id] = obj;
    }
    return json{{"nodes", nodes}, {"edges", edges}};
}

json serialize_query(const QueryGraph& qg) {
    return json{{"message", {{"query_graph", query_graph_document(qg)}}}};
}

ExecutionOrder plan_order(const QueryGraph& qg) {
    // Incident edges per node, sorted by qedgeId (std::map iteration order).
    std::map<std::string, std::vector<const QEdge*>> incident;
    for (const auto& [id, e] : qg.edges) {
        incident[e.subject].push_back(&e);
        incident[e.object].push_back(&e);
    }
    ExecutionOrder order;
    std::set<std::string> bound;
    std::set<std::string> done;
    std::deque<std::string> frontier;
    for (const auto& id : qg.pinned_nodes()) {
        bound.insert(id);
        frontier.push_back(id);
    }
    while (!frontier.empty()) {
        auto node = frontier.front();
        frontier.pop_front();
        for (const auto* e : incident[node]) {
            if (done.contains(e->qedgeId)) {
                continue;
            }
            done.insert(e->qedgeId);
            const auto& other = e->subject == node ? e->object : e->subject;
            if (bound.contains(other)) {
                // Both ends bound: constraint edge, executed from its subject.
                order.orderedEdges.push_back({e->qedgeId, e->subject});
                continue;
            }
            order.orderedEdges.push_back({e->qedgeId, node});
            bound.insert(other);
            frontier.push_back(other);
        }
    }
    if (order.orderedEdges.size() != qg.edges.size()) {
        throw Error("Unorderable", "query graph edges are not reachable from a pinned node");
    }
    assert(is_valid_order(qg, order));
    return order;
}

bool is_valid_order(const QueryGraph& qg, const ExecutionOrder& order) {
    if (order.orderedEdges.size() != qg.edges.size()) {
        return false;
    }
    std::set<std::string> bound;
    for (const auto& id : qg.pinned_nodes()) {
        bound.insert(id);
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < order.orderedEdges.size(); ++i) {
        const auto& oe = order.orderedEdges[i];
        auto it = qg.edges.find(oe.qedgeId);
        if (it == qg.edges.end() || !seen.insert(oe.qedgeId).second) {
            return false;
        }
        const auto& e = it->second;
        if (oe.startNode != e.subject && oe.startNode != e.object) {
            return false;
        }
        if (!bound.contains(oe.startNode)) {
            return false;
        }
        if (i == 0 && !qg.nodes.at(oe.startNode).pinned()) {
            return false;
        }
        bound.insert(e.subject);
        bound.insert(e.object);
    }
    return true;
}

}  // namespace fedkg
