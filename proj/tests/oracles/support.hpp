/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once
// Shared helpers for tests: fixture paths and a seeded generator.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "fedkg/engine.hpp"
#include "fedkg/simnet.hpp"

namespace fedkg::testing {

inline std::filesystem::path fixture(const std::string& rel) {
    return std::filesystem::path(FEDKG_FIXTURE_DIR) / rel;
}

inline json fixture_json(const std::string& rel) { return load_structured_file(fixture(rel)); }

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
    std::uint64_t uniform64(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen_);
    }
    bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

    template <typename T>
    std::vector<T> subset(const std::vector<T>& v, int minSize, int maxSize) {
        std::vector<T> copy = v;
        std::shuffle(copy.begin(), copy.end(), gen_);
        int n = uniform(minSize, std::min<int>(maxSize, static_cast<int>(copy.size())));
        copy.resize(static_cast<std::size_t>(n));
        return copy;
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// The fig1 engine as the CLI builds it from the registry directory conventions.
inline EngineConfig fig1_config(double timeScale = 0.0) {
    ConfigLayer layer = {{"registry", fixture("registry").string()},
                         {"transport", "simnet:" + fixture("fig1_ngly1.yaml").string()},
                         {"sim_time_scale", std::to_string(timeScale)}};
    return build_config({layer});
}

struct Fig1Engine {
    std::shared_ptr<SimNetwork> net;
    std::shared_ptr<Engine> engine;
};

inline Fig1Engine fig1_engine(ExecutionPolicy policy = {}, double timeScale = 0.0) {
    auto config = fig1_config(timeScale);
    auto clock = std::make_shared<ScaledClock>(timeScale);
    auto net = std::make_shared<SimNetwork>(load_scenario_file(fixture("fig1_ngly1.yaml"), clock));
    auto engine = std::make_shared<Engine>(
        load_registry_dir(config.registryDir), TypeHierarchy::load(*config.hierarchyFile),
        std::make_shared<FileFixtureResolver>(FileFixtureResolver::load(config.resolver.location)),
        std::make_shared<FileFixtureCounts>(FileFixtureCounts::load(config.counts.path)), net,
        policy, clock);
    return {net, engine};
}

}  // namespace fedkg::testing
