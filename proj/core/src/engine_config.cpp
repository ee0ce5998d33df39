/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/engine_config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "fedkg/error.hpp"
#include "fedkg/registry.hpp"

namespace fedkg {

namespace {

int to_int(const std::string& key, const std::string& value) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(key + " must be an integer, got '" + value + "'");
    }
    return v;
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "0" || value == "false" || value == "no" || value == "off" || value.empty()) {
        return false;
    }
    throw ConfigError(key + " must be a boolean, got '" + value + "'");
}

double to_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        double d = std::stod(value, &used);
        if (used == value.size()) {
            return d;
        }
    } catch (const std::exception&) {
    }
    throw ConfigError(key + " must be a number, got '" + value + "'");
}

std::pair<std::string, std::string> split_kind(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) {
        return {spec, {}};
    }
    return {spec.substr(0, colon), spec.substr(colon + 1)};
}

}  // namespace

ResolverConfig ResolverConfig::parse(const std::string& spec) {
    if (spec.empty() || spec == "none") {
        return {};
    }
    if (spec.rfind("http://", 0) == 0 || spec.rfind("https://", 0) == 0) {
        return {Kind::Http, spec};
    }
    auto [kind, rest] = split_kind(spec);
    if (kind == "fixture" && !rest.empty()) {
        return {Kind::Fixture, rest};
    }
    if (kind == "http" && !rest.empty()) {
        return {Kind::Http, rest};
    }
    throw ConfigError("resolver must be none, fixture:<path> or http:<url>, got '" + spec + "'");
}

CountsConfig CountsConfig::parse(const std::string& spec) {
    if (spec.empty() || spec == "none") {
        return {};
    }
    auto [kind, rest] = split_kind(spec);
    if (kind == "fixture" && !rest.empty()) {
        return {Kind::Fixture, rest};
    }
    throw ConfigError("counts must be none or fixture:<path>, got '" + spec + "'");
}

TransportConfig TransportConfig::parse(const std::string& spec) {
    if (spec == "live") {
        return {Kind::Live, {}};
    }
    auto [kind, rest] = split_kind(spec);
    if (kind == "simnet" && !rest.empty()) {
        return {Kind::Simnet, rest};
    }
    throw ConfigError("transport must be simnet:<scenario> or live, got '" + spec + "'");
}

void EngineConfig::validate() const {
    namespace fs = std::filesystem;
    if (registryDir.empty()) {
        throw ConfigError("a registry directory is required");
    }
    if (!fs::is_directory(registryDir)) {
        throw ConfigError("registry directory not found: " + registryDir.string());
    }
    if (hierarchyFile && !fs::exists(*hierarchyFile)) {
        throw ConfigError("hierarchy file not found: " + hierarchyFile->string());
    }
    if (resolver.kind == ResolverConfig::Kind::Fixture && !fs::exists(resolver.location)) {
        throw ConfigError("resolver fixture not found: " + resolver.location);
    }
    if (counts.kind == CountsConfig::Kind::Fixture && !fs::exists(counts.path)) {
        throw ConfigError("counts fixture not found: " + counts.path.string());
    }
    if (transport && transport->kind == TransportConfig::Kind::Simnet &&
        !fs::exists(transport->scenario)) {
        throw ConfigError("simnet scenario not found: " + transport->scenario.string());
    }
    if (transport && transport->kind == TransportConfig::Kind::Live && !allowLive) {
        throw ConfigError("the live transport requires --allow-live");
    }
    if (simTimeScale < 0) {
        throw ConfigError("sim_time_scale must be non-negative");
    }
    if (maxInflightQueries <= 0) {
        throw ConfigError("max_inflight_queries must be positive");
    }
    policy.validate();
}

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "registry",    "hierarchy",      "resolver",         "counts",
        "transport",   "max_concurrency", "timeout_ms",      "max_retries",
        "retry_backoff_ms", "allow_live", "sim_time_scale",  "host",
        "port",        "max_inflight_queries", "drain_timeout_ms"};
    return keys;
}

ConfigLayer config_layer_from_file(const std::filesystem::path& path) {
    auto doc = load_structured_file(path);
    if (!doc.is_object()) {
        throw ConfigError("config file must be a map: " + path.string());
    }
    ConfigLayer layer;
    const auto& keys = config_keys();
    for (const auto& [k, v] : doc.items()) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            throw ConfigError("unknown config key '" + k + "' in " + path.string());
        }
        auto s = scalar_to_string(v);
        if (!s) {
            throw ConfigError("config key '" + k + "' must be a scalar");
        }
        layer[k] = *s;
    }
    // Relative paths in a config file are relative to the file.
    auto base = path.parent_path();
    auto rebase = [&](const std::string& key, const std::string& prefix) {
        auto it = layer.find(key);
        if (it == layer.end() || it->second.rfind(prefix, 0) != 0) {
            return;
        }
        std::filesystem::path p = it->second.substr(prefix.size());
        if (p.is_relative()) {
            it->second = prefix + (base / p).string();
        }
    };
    rebase("registry", "");
    rebase("hierarchy", "");
    rebase("resolver", "fixture:");
    rebase("counts", "fixture:");
    rebase("transport", "simnet:");
    return layer;
}

ConfigLayer config_layer_from_env(const std::function<const char*(const char*)>& lookup) {
    ConfigLayer layer;
    for (const auto& key : config_keys()) {
        std::string name = "FEDKG_";
        for (char c : key) {
            name.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        }
        if (const char* v = lookup(name.c_str())) {
            layer[key] = v;
        }
    }
    return layer;
}

EngineConfig build_config(const std::vector<ConfigLayer>& layers) {
    ConfigLayer merged;
    for (const auto& layer : layers) {
        for (const auto& [k, v] : layer) {
            merged[k] = v;
        }
    }
    EngineConfig cfg;
    auto get = [&](const char* key) -> const std::string* {
        auto it = merged.find(key);
        return it == merged.end() ? nullptr : &it->second;
    };
    if (auto v = get("registry")) {
        cfg.registryDir = *v;
    }
    if (auto v = get("hierarchy")) {
        if (!v->empty() && *v != "none") {
            cfg.hierarchyFile = *v;
        }
    } else if (!cfg.registryDir.empty() && std::filesystem::exists(cfg.registryDir / kHierarchyFile)) {
        cfg.hierarchyFile = cfg.registryDir / kHierarchyFile;
    }
    if (auto v = get("resolver")) {
        cfg.resolver = ResolverConfig::parse(*v);
    } else if (!cfg.registryDir.empty() &&
               std::filesystem::exists(cfg.registryDir / kDefaultResolverFile)) {
        cfg.resolver = {ResolverConfig::Kind::Fixture, (cfg.registryDir / kDefaultResolverFile).string()};
    }
    if (auto v = get("counts")) {
        cfg.counts = CountsConfig::parse(*v);
    } else if (!cfg.registryDir.empty() &&
               std::filesystem::exists(cfg.registryDir / kDefaultCountsFile)) {
        cfg.counts = {CountsConfig::Kind::Fixture, cfg.registryDir / kDefaultCountsFile};
    }
    if (auto v = get("transport")) {
        cfg.transport = TransportConfig::parse(*v);
    }
    if (auto v = get("max_concurrency")) {
        cfg.policy.maxConcurrency = to_int("max_concurrency", *v);
    }
    if (auto v = get("timeout_ms")) {
        cfg.policy.timeoutMs = to_int("timeout_ms", *v);
    }
    if (auto v = get("max_retries")) {
        cfg.policy.maxRetries = to_int("max_retries", *v);
    }
    if (auto v = get("retry_backoff_ms")) {
        cfg.policy.retryBackoffMs = to_int("retry_backoff_ms", *v);
    }
    if (auto v = get("allow_live")) {
        cfg.allowLive = to_bool("allow_live", *v);
    }
    if (auto v = get("sim_time_scale")) {
        cfg.simTimeScale = to_double("sim_time_scale", *v);
    }
    if (auto v = get("host")) {
        cfg.host = *v;
    }
    if (auto v = get("port")) {
        cfg.port = to_int("port", *v);
    }
    if (auto v = get("max_inflight_queries")) {
        cfg.maxInflightQueries = to_int("max_inflight_queries", *v);
    }
    if (auto v = get("drain_timeout_ms")) {
        cfg.drainTimeoutMs = to_int("drain_timeout_ms", *v);
    }
    return cfg;
}

}  // namespace fedkg
