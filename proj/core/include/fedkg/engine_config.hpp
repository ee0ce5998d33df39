/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fedkg/executor.hpp"

namespace fedkg {

struct ResolverConfig {
    enum class Kind { None, Fixture, Http };
    Kind kind = Kind::None;
    std::string location;  // fixture path or base URL

    static ResolverConfig parse(const std::string& spec);
};

struct CountsConfig {
    enum class Kind { None, Fixture };
    Kind kind = Kind::None;
    std::filesystem::path path;

    static CountsConfig parse(const std::string& spec);
};

struct TransportConfig {
    enum class Kind { Simnet, Live };
    Kind kind = Kind::Simnet;
    std::filesystem::path scenario;

    static TransportConfig parse(const std::string& spec);
};

struct EngineConfig {
    std::filesystem::path registryDir;
    std::optional<std::filesystem::path> hierarchyFile;
    ResolverConfig resolver;
    CountsConfig counts;
    std::optional<TransportConfig> transport;
    ExecutionPolicy policy;
    bool allowLive = false;
    double simTimeScale = 1.0;

    std::string host = "127.0.0.1";
    int port = 8080;
    int maxInflightQueries = 16;
    int drainTimeoutMs = 10000;

    // Fixture paths must exist; a live transport needs allowLive. Throws ConfigError.
    void validate() const;
};

// Flat key -> value settings from one source. Keys use snake_case: registry, hierarchy,
// resolver, counts, transport, max_concurrency, timeout_ms, max_retries,
// retry_backoff_ms, allow_live, sim_time_scale, host, port, max_inflight_queries,
// drain_timeout_ms.
using ConfigLayer = std::map<std::string, std::string>;

const std::vector<std::string>& config_keys();

ConfigLayer config_layer_from_file(const std::filesystem::path& path);

// Reads FEDKG_<KEY> (upper-cased key) for every known key.
ConfigLayer config_layer_from_env(
    const std::function<const char*(const char*)>& lookup = [](const char* n) {
        return std::getenv(n);
    });

// Later layers override earlier ones (file, then environment, then flags). Registry-dir
// conventions fill what is still unset: hierarchy.yaml, identifiers.tsv (resolver) and
// cooccurrence.tsv (counts).
EngineConfig build_config(const std::vector<ConfigLayer>& layers);

inline constexpr const char* kDefaultResolverFile = "identifiers.tsv";
inline constexpr const char* kDefaultCountsFile = "cooccurrence.tsv";

}  // namespace fedkg
