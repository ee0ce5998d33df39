/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/results.hpp"

#include <map>
#include <set>
#include <tuple>

namespace fedkg {

json diagnostic_to_json(const Diagnostic& d) {
    return json{{"level", d.level}, {"code", d.code}, {"message", d.message}};
}

json results_document(const QueryGraph& qg, const std::vector<ResultGraph>& results,
                      const std::vector<Diagnostic>& logs) {
    using Triple = std::tuple<std::string, std::string, std::string>;
    std::map<std::string, const EntityRecord*> nodes;
    std::map<Triple, std::vector<const RecordEdge*>> edges;
    for (const auto& r : results) {
        for (const auto& [qn, rec] : r.nodeBindings) {
            nodes.emplace(rec.canonicalId, &rec);
        }
        for (const auto& [qe, list] : r.edgeBindings) {
            for (const auto& rec : list) {
                nodes.emplace(rec.subject.canonicalId, &rec.subject);
                nodes.emplace(rec.object.canonicalId, &rec.object);
                edges[{rec.subject.canonicalId, rec.predicate, rec.object.canonicalId}].push_back(&rec);
            }
        }
    }

    json kgNodes = json::object();
    for (const auto& [id, rec] : nodes) {
        json cats = json::array();
        for (const auto& t : rec->semanticTypes) {
            cats.push_back("biolink:" + t);
        }
        kgNodes[id] = {{"name", rec->label},
                       {"categories", cats},
                       {"equivalent_identifiers", rec->equivalentIds}};
    }

    std::map<Triple, std::string> keys;
    json kgEdges = json::object();
    std::size_t next = 0;
    for (const auto& [triple, recs] : edges) {
        auto key = "e" + std::to_string(next++);
        keys.emplace(triple, key);
        std::set<std::tuple<std::string, std::string, std::string>> sources;
        json attributes = json::array();
        std::set<std::string> seenAttr;
        for (const auto* r : recs) {
            sources.emplace(r->apiId, r->opId, r->source);
            for (const auto& [name, value] : r->attributes) {
                json attr = {{"attribute_type_id", name}, {"value", value}, {"api_id", r->apiId}};
                if (seenAttr.insert(attr.dump()).second) {
                    attributes.push_back(attr);
                }
            }
        }
        json src = json::array();
        for (const auto& [api, op, source] : sources) {
            src.push_back({{"api_id", api}, {"op_id", op}, {"source", source}});
        }
        kgEdges[key] = {{"subject", std::get<0>(triple)},
                        {"predicate", "biolink:" + std::get<1>(triple)},
                        {"object", std::get<2>(triple)},
                        {"sources", src},
                        {"attributes", attributes}};
    }

    json out = json::array();
    for (const auto& r : results) {
        json nb = json::object();
        for (const auto& [qn, rec] : r.nodeBindings) {
            nb[qn] = json::array({{{"id", rec.canonicalId}}});
        }
        json eb = json::object();
        for (const auto& [qe, list] : r.edgeBindings) {
            std::set<std::string> ids;
            for (const auto& rec : list) {
                ids.insert(keys.at({rec.subject.canonicalId, rec.predicate, rec.object.canonicalId}));
            }
            json arr = json::array();
            for (const auto& id : ids) {
                arr.push_back({{"id", id}});
            }
            eb[qe] = arr;
        }
        out.push_back({{"node_bindings", nb}, {"edge_bindings", eb}, {"score", r.score}});
    }

    json logArr = json::array();
    for (const auto& d : logs) {
        logArr.push_back(diagnostic_to_json(d));
    }
    return json{{"message",
                 {{"query_graph", query_graph_document(qg)},
                  {"knowledge_graph", {{"nodes", kgNodes}, {"edges", kgEdges}}},
                  {"results", out}}},
                {"logs", logArr}};
}

}  // namespace fedkg
