/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include <doctest.h>

#include "fedkg/engine.hpp"
#include "fedkg/error.hpp"
#include "oracles/support.hpp"

using namespace fedkg;
using namespace fedkg::testing;

namespace {

std::vector<std::vector<std::string>> keys(const QueryOutcome& o) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : o.results) {
        out.push_back(r.binding_key());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("engine") {
    TEST_CASE("fig1 end to end") {
        auto f = fig1_engine();
        auto qg = f.engine->parse(fixture_json("fig1_query.json"));
        auto outcome = f.engine->run(qg);
        CHECK(outcome.logs.empty());
        CHECK(keys(outcome) == std::vector<std::vector<std::string>>{
                                   {"MONDO:0014109", "NCBIGene:55768", "CHEBI:17234"},
                                   {"MONDO:0014109", "NCBIGene:55768", "CHEBI:45783"},
                                   {"MONDO:0014109", "NCBIGene:64772", "CHEBI:28757"}});
        for (const auto& r : outcome.results) {
            CHECK(r.score > 0.0);
            CHECK(r.score <= 1.0);
        }
        // NGLY1 arrives from both disease -> gene apis.
        for (const auto& r : outcome.results) {
            if (r.nodeBindings.at("n1").canonicalId == "NCBIGene:55768") {
                CHECK(r.edgeBindings.at("e0").size() == 2);
            }
        }
        // One call per api: ctd, biolink, one batched mychem call.
        CHECK(f.net->calls_to("ctd") == 1);
        CHECK(f.net->calls_to("biolink") == 1);
        CHECK(f.net->calls_to("mychem") == 1);
    }

    TEST_CASE("reverse edges bind the object first") {
        auto f = fig1_engine();
        auto doc = json::parse(R"({"message": {"query_graph": {
            "nodes": {"d": {"categories": ["biolink:Disease"]},
                      "g": {"ids": ["NCBIGene:55768"], "categories": ["biolink:Gene"]}},
            "edges": {"e0": {"subject": "d", "object": "g"}}}}})");
        auto outcome = f.engine->run(f.engine->parse(doc));
        REQUIRE(outcome.results.size() == 1);
        const auto& r = outcome.results[0];
        CHECK(r.nodeBindings.at("d").canonicalId == "MONDO:0014109");
        CHECK(r.nodeBindings.at("g").canonicalId == "NCBIGene:55768");
        CHECK(r.edgeBindings.at("e0")[0].subject.canonicalId == "MONDO:0014109");
        CHECK(r.edgeBindings.at("e0")[0].apiId == "biolink");
    }

    TEST_CASE("failing api is logged and skipped") {
        auto f = fig1_engine();
        f.net->set_fail_plan("biolink", {{0, std::nullopt, 500, false, std::nullopt}});
        auto outcome = f.engine->run(f.engine->parse(fixture_json("fig1_query.json")));
        CHECK(outcome.results.size() == 2);
        bool logged = false;
        for (const auto& d : outcome.logs) {
            logged = logged || d.code == "SubQueryFailed";
        }
        CHECK(logged);
    }

    TEST_CASE("unknown categories are rejected") {
        auto f = fig1_engine();
        auto doc = fixture_json("fig1_query.json");
        doc["message"]["query_graph"]["nodes"]["n1"]["categories"] = {"biolink:Geene"};
        CHECK_THROWS_AS(f.engine->parse(doc), QueryInvalid);
    }

    TEST_CASE("unsatisfiable plans still run and log") {
        auto f = fig1_engine();
        auto doc = json::parse(R"({"message": {"query_graph": {
            "nodes": {"d": {"ids": ["MONDO:0014109"], "categories": ["biolink:Disease"]},
                      "c": {"categories": ["biolink:ChemicalEntity"]}},
            "edges": {"e0": {"subject": "d", "object": "c"}}}}})");
        auto qg = f.engine->parse(doc);
        CHECK_FALSE(f.engine->plan(qg).satisfiable());
        auto outcome = f.engine->run(qg);
        CHECK(outcome.results.empty());
        CHECK(outcome.logs.at(0).code == "UnsatisfiableEdge");
        CHECK(f.net->call_log().empty());
    }

    TEST_CASE("an engine without transport cannot run") {
        Engine e(load_registry_dir(fixture("registry")), {}, nullptr, nullptr, nullptr);
        auto qg = e.parse(fixture_json("fig1_query.json"));
        CHECK_THROWS_AS(e.run(qg), ConfigError);
    }

    TEST_CASE("error documents") {
        auto doc = error_document(QueryInvalid({{"Disconnected", "m", "loc"}}));
        CHECK(doc["error"]["code"] == "QueryInvalid");
        CHECK(doc["error"]["violations"][0]["code"] == "Disconnected");
        CHECK(error_document(std::runtime_error("x"))["error"]["code"] == "Internal");
    }
}
