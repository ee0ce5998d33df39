/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include <doctest.h>

#include "fedkg/results.hpp"
#include "oracles/support.hpp"

using namespace fedkg;
using namespace fedkg::testing;

namespace {

RecordEdge rec(const std::string& s, const std::string& o, const std::string& api) {
    RecordEdge r;
    r.subject = EntityRecord{s, {s}, "label " + s, {"Disease"}};
    r.object = EntityRecord{o, {o}, "label " + o, {"Gene"}};
    r.predicate = "condition_associated_with_gene";
    r.apiId = api;
    r.opId = "op";
    r.source = "infores:" + api;
    r.qedgeId = "e0";
    return r;
}

}  // namespace

TEST_SUITE("results") {
    TEST_CASE("knowledge graph edges merge sources") {
        auto qg = parse_query(fixture_json("litvar_query.json"));
        ResultGraph g;
        g.nodeBindings["n0"] = rec("D:1", "G:1", "a").subject;
        g.nodeBindings["n1"] = rec("D:1", "G:1", "a").object;
        g.edgeBindings["e0"] = {rec("D:1", "G:1", "a"), rec("D:1", "G:1", "b")};
        g.score = 0.25;
        auto doc = results_document(qg, {g}, {{"INFO", "X", "y"}});
        const auto& msg = doc["message"];
        CHECK(msg["knowledge_graph"]["edges"].size() == 1);
        const auto& edge = msg["knowledge_graph"]["edges"]["e0"];
        CHECK(edge["sources"].size() == 2);
        CHECK(edge["predicate"] == "biolink:condition_associated_with_gene");
        CHECK(msg["knowledge_graph"]["nodes"]["D:1"]["categories"] == json::array({"biolink:Disease"}));
        CHECK(msg["knowledge_graph"]["nodes"]["G:1"]["name"] == "label G:1");
        CHECK(msg["results"][0]["score"] == 0.25);
        CHECK(msg["results"][0]["node_bindings"]["n1"][0]["id"] == "G:1");
        CHECK(msg["results"][0]["edge_bindings"]["e0"][0]["id"] == "e0");
        CHECK(doc["logs"][0]["code"] == "X");
        CHECK(parse_query(doc) == qg);
    }

    TEST_CASE("empty results keep the document shape") {
        auto qg = parse_query(fixture_json("fig1_query.json"));
        auto doc = results_document(qg, {});
        CHECK(doc["message"]["results"] == json::array());
        CHECK(doc["message"]["knowledge_graph"]["nodes"] == json::object());
        CHECK(doc["message"]["knowledge_graph"]["edges"] == json::object());
    }

    TEST_CASE("documents are deterministic") {
        auto qg = parse_query(fixture_json("litvar_query.json"));
        ResultGraph g;
        g.nodeBindings["n0"] = rec("D:1", "G:1", "a").subject;
        g.nodeBindings["n1"] = rec("D:1", "G:1", "a").object;
        g.edgeBindings["e0"] = {rec("D:1", "G:1", "b"), rec("D:1", "G:1", "a")};
        auto g2 = g;
        std::reverse(g2.edgeBindings["e0"].begin(), g2.edgeBindings["e0"].end());
        CHECK(canonical_dump(results_document(qg, {g})) == canonical_dump(results_document(qg, {g2})));
    }
}
