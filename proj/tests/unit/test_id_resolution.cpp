/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include <doctest.h>

#include <atomic>
#include <sstream>
#include <thread>

#include "fedkg/error.hpp"
#include "fedkg/id_resolution.hpp"
#include "oracles/support.hpp"

using namespace fedkg;
using namespace fedkg::testing;

namespace {

FileFixtureResolver fixture_resolver() {
    return FileFixtureResolver::load(fixture("registry/identifiers.tsv"));
}

class Broken final : public ResolverProvider {
public:
    std::map<std::string, EntityRecord> resolve(std::span<const std::string>) const override {
        throw std::runtime_error("connection refused");
    }
};

class Counting final : public ResolverProvider {
public:
    mutable std::atomic<int> calls{0};
    mutable std::atomic<std::size_t> largest{0};
    std::map<std::string, EntityRecord> resolve(std::span<const std::string> batch) const override {
        ++calls;
        largest = std::max<std::size_t>(largest, batch.size());
        std::map<std::string, EntityRecord> out;
        for (const auto& id : batch) {
            out[id] = EntityRecord::self(id);
        }
        return out;
    }
};

}  // namespace

TEST_SUITE("id_resolution") {
    TEST_CASE("ngly1 deficiency has two equivalent ids") {
        auto r = fixture_resolver();
        std::vector<std::string> ids = {"MONDO:0014109"};
        auto out = resolve(ids, r);
        const auto& rec = out.at("MONDO:0014109");
        CHECK(rec.canonicalId == "MONDO:0014109");
        CHECK(rec.label == "NGLY1-deficiency");
        CHECK(rec.equivalentIds.size() == 2);
        CHECK(aliases_in_namespace(rec, "DOID") == std::vector<std::string>{"0060728"});
    }

    TEST_CASE("unknown ids resolve to themselves") {
        auto r = fixture_resolver();
        std::vector<std::string> ids = {"FOO:bar"};
        auto rec = resolve(ids, r).at("FOO:bar");
        CHECK(rec == EntityRecord::self("FOO:bar"));
        CHECK(rec.equivalentIds == std::vector<std::string>{"FOO:bar"});
    }

    TEST_CASE("gene aliases across namespaces") {
        auto r = fixture_resolver();
        std::vector<std::string> ids = {"ENSEMBL:ENSG00000133703"};
        auto rec = resolve(ids, r).at("ENSEMBL:ENSG00000133703");
        CHECK(rec.canonicalId == "NCBIGene:3845");
        CHECK(aliases_in_namespace(rec, "NCBIGene") == std::vector<std::string>{"3845"});
        CHECK(aliases_in_namespace(rec, "ENSEMBL") == std::vector<std::string>{"ENSG00000133703"});
        CHECK(aliases_in_namespace(rec, "CHEBI").empty());
    }

    TEST_CASE("several ids in one namespace keep their order") {
        EntityRecord rec{"X:2", {"X:2", "Y:1", "X:1"}, "", {}};
        CHECK(aliases_in_namespace(rec, "X") == std::vector<std::string>{"2", "1"});
    }

    TEST_CASE("canonical choice") {
        std::vector<std::string> prio = {"NCBIGene", "ENSEMBL"};
        CHECK(choose_canonical({"ENSEMBL:E1", "NCBIGene:9", "NCBIGene:10"}, prio) == "NCBIGene:10");
        CHECK(choose_canonical({"ZZ:1", "AA:2"}, prio) == "AA:2");
        CHECK(choose_canonical({"ZZ:1", "ENSEMBL:E1"}, prio) == "ENSEMBL:E1");
    }

    TEST_CASE("resolution is idempotent and symmetric on the fixture") {
        auto r = fixture_resolver();
        std::vector<std::string> all;
        auto text = read_text_file(fixture("registry/identifiers.tsv"));
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            auto a = line.find('\t');
            auto b = line.find('\t', a + 1);
            all.push_back(line.substr(a + 1, b - a - 1));
        }
        auto first = resolve(all, r);
        for (const auto& [id, rec] : first) {
            std::vector<std::string> again = {rec.canonicalId};
            CHECK(resolve(again, r).at(rec.canonicalId).canonicalId == rec.canonicalId);
            for (const auto& eq : rec.equivalentIds) {
                CHECK(first.at(eq).canonicalId == rec.canonicalId);
            }
        }
    }

    TEST_CASE("a curie in two groups is rejected") {
        CHECK_THROWS_AS(FileFixtureResolver::parse("g1\tA:1\tx\tGene\ng2\tA:1\ty\tGene\n"),
                        FixtureInvalid);
    }

    TEST_CASE("priority directive") {
        auto r = FileFixtureResolver::parse("# priority: B,A\ng\tA:1\tx\tGene\ng\tB:1\tx\tGene\n");
        std::vector<std::string> ids = {"A:1"};
        CHECK(resolve(ids, r).at("A:1").canonicalId == "B:1");
        CHECK(r.namespace_priority() == std::vector<std::string>{"B", "A"});
    }

    TEST_CASE("batches of the configured size") {
        Counting c;
        std::vector<std::string> ids;
        for (int i = 0; i < 2500; ++i) {
            ids.push_back("X:" + std::to_string(i));
        }
        ids.push_back("X:0");  // duplicate
        auto out = resolve(ids, c);
        CHECK(out.size() == 2500);
        CHECK(c.calls == 3);
        CHECK(c.largest == 1000);
    }

    TEST_CASE("provider failures") {
        Broken b;
        std::vector<std::string> ids = {"A:1"};
        CHECK_THROWS_AS(resolve(ids, b), ResolverUnavailable);
        std::string failure;
        auto out = resolve_or_self(ids, b, kDefaultResolveBatch, &failure);
        CHECK(out.at("A:1") == EntityRecord::self("A:1"));
        CHECK_FALSE(failure.empty());
    }

    TEST_CASE("caching resolver is safe under concurrent use") {
        auto inner = std::make_shared<Counting>();
        CachingResolver cache(inner);
        std::vector<std::jthread> threads;
        for (int t = 0; t < 4; ++t) {
            threads.emplace_back([&] {
                for (int i = 0; i < 50; ++i) {
                    std::vector<std::string> ids = {"X:" + std::to_string(i % 10)};
                    auto out = resolve(ids, cache);
                    CHECK(out.size() == 1);
                }
            });
        }
        threads.clear();
        std::vector<std::string> ids = {"X:1"};
        int before = inner->calls;
        resolve(ids, cache);
        CHECK(inner->calls == before);
    }

    TEST_CASE("http resolver response decoding") {
        auto body = json::parse(R"({
          "NCBIGene:3845": {"id": {"identifier": "NCBIGene:3845", "label": "KRAS"},
                            "equivalent_identifiers": [{"identifier": "NCBIGene:3845"},
                                                       {"identifier": "ENSEMBL:ENSG00000133703"}],
                            "type": ["biolink:Gene", "biolink:NamedThing"]},
          "FOO:1": null})");
        std::vector<std::string> batch = {"NCBIGene:3845", "FOO:1"};
        auto out = HttpResolver::decode_response(batch, body);
        CHECK(out.at("NCBIGene:3845").label == "KRAS");
        CHECK(out.at("NCBIGene:3845").equivalentIds.size() == 2);
        CHECK(out.at("NCBIGene:3845").semanticTypes ==
              std::vector<std::string>{"Gene", "NamedThing"});
        CHECK(out.at("FOO:1") == EntityRecord::self("FOO:1"));
    }

    TEST_CASE("http resolver without a server is unavailable") {
        HttpResolver r("http://127.0.0.1:1", 200);
        std::vector<std::string> ids = {"A:1"};
        CHECK_THROWS_AS(resolve(ids, r), ResolverUnavailable);
    }
}
