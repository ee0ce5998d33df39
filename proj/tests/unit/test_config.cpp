/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include <doctest.h>

#include <fstream>

#include "fedkg/engine_config.hpp"
#include "fedkg/error.hpp"
#include "oracles/support.hpp"

using namespace fedkg;
using namespace fedkg::testing;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "fedkg_config_test";
    std::filesystem::create_directories(dir);
    auto p = dir / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_SUITE("config") {
    TEST_CASE("flags beat environment beats file") {
        auto file = write_temp("a.yaml", "max_concurrency: 2\ntimeout_ms: 100\nmax_retries: 5\n");
        auto fromFile = config_layer_from_file(file);
        auto env = config_layer_from_env([](const char* name) -> const char* {
            std::string n = name;
            if (n == "FEDKG_TIMEOUT_MS") {
                return "200";
            }
            if (n == "FEDKG_MAX_RETRIES") {
                return "1";
            }
            return nullptr;
        });
        ConfigLayer flags = {{"max_retries", "0"}};
        auto cfg = build_config({fromFile, env, flags});
        CHECK(cfg.policy.maxConcurrency == 2);
        CHECK(cfg.policy.timeoutMs == 200);
        CHECK(cfg.policy.maxRetries == 0);
    }

    TEST_CASE("registry directory conventions") {
        auto cfg = build_config({{{"registry", fixture("registry").string()}}});
        REQUIRE(cfg.hierarchyFile);
        CHECK(cfg.hierarchyFile->filename() == "hierarchy.yaml");
        CHECK(cfg.resolver.kind == ResolverConfig::Kind::Fixture);
        CHECK(cfg.counts.kind == CountsConfig::Kind::Fixture);
        CHECK_FALSE(cfg.transport.has_value());
        cfg.validate();

        auto none = build_config({{{"registry", fixture("registry").string()},
                                   {"resolver", "none"},
                                   {"counts", "none"},
                                   {"hierarchy", "none"}}});
        CHECK(none.resolver.kind == ResolverConfig::Kind::None);
        CHECK(none.counts.kind == CountsConfig::Kind::None);
        CHECK_FALSE(none.hierarchyFile);
    }

    TEST_CASE("spec strings") {
        CHECK(ResolverConfig::parse("http://localhost:9/x").kind == ResolverConfig::Kind::Http);
        CHECK(ResolverConfig::parse("http:https://nodenorm.example.org").location ==
              "https://nodenorm.example.org");
        CHECK(ResolverConfig::parse("fixture:/a/b.tsv").location == "/a/b.tsv");
        CHECK_THROWS_AS(ResolverConfig::parse("bogus"), ConfigError);
        CHECK(TransportConfig::parse("live").kind == TransportConfig::Kind::Live);
        CHECK(TransportConfig::parse("simnet:x.yaml").scenario == "x.yaml");
        CHECK_THROWS_AS(TransportConfig::parse("simnet:"), ConfigError);
        CHECK_THROWS_AS(CountsConfig::parse("http:x"), ConfigError);
    }

    TEST_CASE("validation") {
        auto base = ConfigLayer{{"registry", fixture("registry").string()}};
        auto with = [&](ConfigLayer extra) {
            auto l = base;
            l.insert(extra.begin(), extra.end());
            for (auto& [k, v] : extra) {
                l[k] = v;
            }
            return build_config({l});
        };
        CHECK_THROWS_AS(with({{"transport", "live"}}).validate(), ConfigError);
        with({{"transport", "live"}, {"allow_live", "true"}}).validate();
        CHECK_THROWS_AS(with({{"transport", "simnet:/nonexistent.yaml"}}).validate(), ConfigError);
        CHECK_THROWS_AS(with({{"resolver", "fixture:/nonexistent.tsv"}}).validate(), ConfigError);
        CHECK_THROWS_AS(with({{"max_concurrency", "0"}}).validate(), ConfigError);
        CHECK_THROWS_AS(with({{"max_concurrency", "lots"}}), ConfigError);
        CHECK_THROWS_AS(build_config({{{"registry", "/nonexistent"}}}).validate(), ConfigError);
        CHECK_THROWS_AS(EngineConfig{}.validate(), ConfigError);
    }

    TEST_CASE("file paths are relative to the file") {
        auto file = write_temp("b.yaml", "registry: reg\ntransport: simnet:s.yaml\n");
        auto layer = config_layer_from_file(file);
        CHECK(layer.at("registry") == (file.parent_path() / "reg").string());
        CHECK(layer.at("transport") == "simnet:" + (file.parent_path() / "s.yaml").string());
        auto bad = write_temp("c.yaml", "registy: x\n");
        CHECK_THROWS_AS(config_layer_from_file(bad), ConfigError);
    }
}
