/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/simnet.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <set>

#include "fedkg/error.hpp"

namespace fedkg {

namespace {

constexpr std::string_view kCapture = "{value}";

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::regex compile_pattern(const std::string& pattern) {
    static constexpr std::string_view kSpecial = R"(\^$.|?*+()[]{}/)";
    std::string re;
    std::size_t i = 0;
    while (i < pattern.size()) {
        if (pattern.compare(i, kCapture.size(), kCapture) == 0) {
            re += "([^/?&#]+)";
            i += kCapture.size();
            continue;
        }
        if (kSpecial.find(pattern[i]) != std::string_view::npos) {
            re.push_back('\\');
        }
        re.push_back(pattern[i++]);
    }
    return std::regex(re, std::regex::ECMAScript);
}

std::size_t count_captures(const std::string& s) {
    std::size_t n = 0;
    for (auto pos = s.find(kCapture); pos != std::string::npos; pos = s.find(kCapture, pos + 1)) {
        ++n;
    }
    return n;
}

struct CompiledRoute {
    std::regex url;
    std::optional<std::regex> body;
};

}  // namespace

struct SimNetwork::State {
    std::vector<SimApi> apis;
    std::vector<std::vector<CompiledRoute>> compiled;
    std::uint64_t seed = 0;
    std::shared_ptr<const Clock> clock;

    mutable std::mutex mu;
    std::atomic<std::uint64_t> seq{0};
    std::vector<CallLogEntry> log;
    std::map<std::string, std::size_t> apiCalls;
    std::map<std::pair<std::string, std::string>, std::size_t> valueCalls;
    std::map<std::string, std::mt19937_64> rngs;

    std::mt19937_64& rng_for(const std::string& apiId) {
        auto it = rngs.find(apiId);
        if (it == rngs.end()) {
            it = rngs.emplace(apiId, std::mt19937_64(seed ^ fnv1a(apiId))).first;
        }
        return it->second;
    }

    void compile() {
        compiled.clear();
        for (const auto& api : apis) {
            std::vector<CompiledRoute> routes;
            for (const auto& r : api.routes) {
                CompiledRoute c{compile_pattern(r.urlPattern), std::nullopt};
                if (r.bodyPattern) {
                    c.body = compile_pattern(*r.bodyPattern);
                }
                routes.push_back(std::move(c));
            }
            compiled.push_back(std::move(routes));
        }
    }
};

SimNetwork::SimNetwork(std::vector<SimApi> apis, std::uint64_t seed,
                       std::shared_ptr<const Clock> clock)
    : state_(std::make_unique<State>()) {
    state_->apis = std::move(apis);
    state_->seed = seed;
    state_->clock = clock ? std::move(clock) : steady_clock();
    state_->compile();
}

SimNetwork::~SimNetwork() = default;
SimNetwork::SimNetwork(SimNetwork&&) noexcept = default;
SimNetwork& SimNetwork::operator=(SimNetwork&&) noexcept = default;

const std::vector<SimApi>& SimNetwork::apis() const noexcept { return state_->apis; }
std::uint64_t SimNetwork::seed() const noexcept { return state_->seed; }

std::vector<CallLogEntry> SimNetwork::call_log() const {
    std::lock_guard lock(state_->mu);
    return state_->log;
}

std::size_t SimNetwork::calls_to(const std::string& apiId) const {
    std::lock_guard lock(state_->mu);
    auto it = state_->apiCalls.find(apiId);
    return it == state_->apiCalls.end() ? 0 : it->second;
}

void SimNetwork::set_fail_plan(const std::string& apiId, std::vector<FailRule> rules) {
    std::lock_guard lock(state_->mu);
    for (auto& api : state_->apis) {
        if (api.apiId == apiId) {
            api.failPlan = std::move(rules);
            return;
        }
    }
    throw Error("UnknownApi", "no simulated API '" + apiId + "'");
}

void SimNetwork::set_latency(const std::string& apiId, SimLatency latency) {
    std::lock_guard lock(state_->mu);
    for (auto& api : state_->apis) {
        if (api.apiId == apiId) {
            api.latency = latency;
            return;
        }
    }
    throw Error("UnknownApi", "no simulated API '" + apiId + "'");
}

void SimNetwork::set_clock(std::shared_ptr<const Clock> clock) {
    std::lock_guard lock(state_->mu);
    state_->clock = clock ? std::move(clock) : steady_clock();
}

void SimNetwork::reset() {
    std::lock_guard lock(state_->mu);
    state_->log.clear();
    state_->apiCalls.clear();
    state_->valueCalls.clear();
    state_->rngs.clear();
    state_->seq = 0;
}

HttpResponse SimNetwork::send(const HttpRequestSpec& request) {
    auto& st = *state_;
    const auto url = request.full_url();

    const SimApi* api = nullptr;
    const SimRoute* route = nullptr;
    std::string captured;
    for (std::size_t a = 0; a < st.apis.size() && !route; ++a) {
        for (std::size_t r = 0; r < st.apis[a].routes.size(); ++r) {
            const auto& candidate = st.apis[a].routes[r];
            const auto& compiled = st.compiled[a][r];
            if (candidate.method != request.method) {
                continue;
            }
            std::smatch m;
            if (!std::regex_match(url, m, compiled.url)) {
                continue;
            }
            std::string value = m.size() > 1 ? m[1].str() : std::string();
            if (compiled.body) {
                std::smatch bm;
                const auto body = request.body.value_or("");
                if (!std::regex_match(body, bm, *compiled.body)) {
                    continue;
                }
                if (bm.size() > 1) {
                    value = bm[1].str();
                }
            }
            api = &st.apis[a];
            route = &candidate;
            captured = std::move(value);
            break;
        }
    }

    CallLogEntry entry;
    entry.request = request;
    std::shared_ptr<const Clock> clock;
    std::optional<FailRule> failure;
    SimLatency latency;
    {
        std::lock_guard lock(st.mu);
        clock = st.clock;
        entry.beginSeq = st.seq.fetch_add(1);
        entry.beginTime = clock->now();
        if (api) {
            entry.apiId = api->apiId;
            entry.callIndex = st.apiCalls[api->apiId]++;
            auto valueIndex = st.valueCalls[{api->apiId, captured}]++;
            latency = api->latency;
            if (latency.maxMs > latency.minMs) {
                std::uniform_int_distribution<int> dist(latency.minMs, latency.maxMs);
                entry.latencyMs = dist(st.rng_for(api->apiId));
            } else {
                entry.latencyMs = latency.minMs;
            }
            for (const auto& rule : api->failPlan) {
                if (rule.value && *rule.value != captured) {
                    continue;
                }
                auto idx = rule.value ? valueIndex : entry.callIndex;
                if (idx >= rule.fromCall && (!rule.toCall || idx < *rule.toCall)) {
                    failure = rule;
                    break;
                }
            }
        }
    }

    HttpResponse response;
    if (!route) {
        response.status = 404;
    } else {
        const bool timesOut =
            (failure && failure->timeout) || (request.timeoutMs > 0 && entry.latencyMs > request.timeoutMs);
        if (timesOut) {
            auto wait = request.timeoutMs > 0 ? request.timeoutMs : entry.latencyMs;
            clock->sleep_for(std::chrono::milliseconds(wait));
            response.timedOut = true;
        } else {
            clock->sleep_for(std::chrono::milliseconds(entry.latencyMs));
            if (failure) {
                response.status = failure->status;
            } else if (route->batchSeparator) {
                std::string body = "[";
                bool first = true;
                std::size_t start = 0;
                const auto& sep = *route->batchSeparator;
                for (;;) {
                    auto pos = sep.empty() ? std::string::npos : captured.find(sep, start);
                    auto part = captured.substr(start, pos == std::string::npos ? pos : pos - start);
                    if (auto it = route->responses.find(part); it != route->responses.end()) {
                        body += first ? "" : ",";
                        body += it->second;
                        first = false;
                    }
                    if (pos == std::string::npos) {
                        break;
                    }
                    start = pos + sep.size();
                }
                response.status = 200;
                response.body = body + "]";
            } else if (auto it = route->responses.find(captured); it != route->responses.end()) {
                response.status = 200;
                response.body = it->second;
            } else {
                response.status = route->defaultStatus;
            }
        }
    }

    entry.response = response;
    {
        std::lock_guard lock(st.mu);
        entry.endSeq = st.seq.fetch_add(1);
        entry.endTime = clock->now();
        st.log.push_back(std::move(entry));
    }
    return response;
}

namespace {

class ScenarioReader {
public:
    std::vector<Violation> violations;

    void add(std::string message, std::string location) {
        violations.push_back({"ScenarioInvalid", std::move(message), std::move(location)});
    }

    SimLatency latency(const json& node, const std::string& where) {
        SimLatency l;
        if (node.is_null()) {
            return l;
        }
        if (node.is_number_integer()) {
            l.minMs = l.maxMs = node.get<int>();
        } else if (node.is_array() && node.size() == 2 && node[0].is_number_integer() &&
                   node[1].is_number_integer()) {
            l.minMs = node[0].get<int>();
            l.maxMs = node[1].get<int>();
        } else if (node.is_object() && node.contains("min") && node.contains("max") &&
                   node["min"].is_number_integer() && node["max"].is_number_integer()) {
            l.minMs = node["min"].get<int>();
            l.maxMs = node["max"].get<int>();
        } else {
            add("latency must be an integer, [min, max] or {min, max}", where);
            return l;
        }
        if (l.minMs < 0 || l.maxMs < l.minMs) {
            add("latency range must satisfy 0 <= min <= max", where);
        }
        return l;
    }

    std::vector<FailRule> fail_plan(const json& node, const std::string& where) {
        std::vector<FailRule> rules;
        if (node.is_null()) {
            return rules;
        }
        if (!node.is_array()) {
            add("fail_plan must be a list", where);
            return rules;
        }
        for (std::size_t i = 0; i < node.size(); ++i) {
            const auto& r = node[i];
            auto loc = where + "[" + std::to_string(i) + "]";
            if (!r.is_object()) {
                add("fail rule must be a map", loc);
                continue;
            }
            FailRule rule;
            if (r.contains("from")) {
                rule.fromCall = r["from"].get<std::size_t>();
            }
            if (r.contains("to") && !r["to"].is_null()) {
                rule.toCall = r["to"].get<std::size_t>();
            }
            if (r.contains("first")) {
                rule.fromCall = 0;
                rule.toCall = r["first"].get<std::size_t>();
            }
            rule.timeout = r.value("timeout", false);
            rule.status = r.value("status", 500);
            if (r.contains("value")) {
                rule.value = scalar_to_string(r["value"]);
            }
            if (!rule.timeout && (rule.status < 100 || rule.status > 599)) {
                add("status must be an HTTP status code", loc);
            }
            if (rule.toCall && *rule.toCall < rule.fromCall) {
                add("'to' must not precede 'from'", loc);
            }
            rules.push_back(std::move(rule));
        }
        return rules;
    }

    SimRoute route(const json& node, const std::string& where) {
        SimRoute r;
        if (!node.is_object()) {
            add("route must be a map", where);
            return r;
        }
        auto method = node.value("method", std::string("GET"));
        if (method == "GET" || method == "get") {
            r.method = HttpMethod::Get;
        } else if (method == "POST" || method == "post") {
            r.method = HttpMethod::Post;
        } else {
            add("method must be GET or POST", where + ".method");
        }
        if (!node.contains("url") || !node["url"].is_string()) {
            add("route needs a url pattern", where + ".url");
        } else {
            r.urlPattern = node["url"].get<std::string>();
        }
        if (node.contains("body")) {
            if (!node["body"].is_string()) {
                add("body pattern must be a string", where + ".body");
            } else {
                r.bodyPattern = node["body"].get<std::string>();
            }
        }
        auto captures = count_captures(r.urlPattern) + (r.bodyPattern ? count_captures(*r.bodyPattern) : 0);
        if (captures > 1) {
            add("a route may capture {value} at most once", where);
        }
        r.defaultStatus = node.value("default_status", 404);
        if (node.contains("batch_separator")) {
            r.batchSeparator = node["batch_separator"].get<std::string>();
        }
        if (node.contains("responses")) {
            const auto& responses = node["responses"];
            if (!responses.is_object()) {
                add("responses must be a map", where + ".responses");
            } else {
                for (const auto& [key, body] : responses.items()) {
                    if (body.is_string()) {
                        r.responses.emplace(key, body.get<std::string>());
                    } else if (body.is_object() || body.is_array()) {
                        r.responses.emplace(key, body.dump());
                    } else {
                        add("response body must be a string or a document",
                            where + ".responses." + key);
                    }
                }
            }
        }
        return r;
    }
};

}  // namespace

SimNetwork load_scenario(const json& doc, std::shared_ptr<const Clock> clock) {
    ScenarioReader reader;
    std::vector<SimApi> apis;
    std::uint64_t seed = 0;
    if (doc.is_null()) {
        return SimNetwork({}, 0, std::move(clock));
    }
    if (!doc.is_object()) {
        throw ScenarioInvalid({{"ScenarioInvalid", "scenario root must be a map", "$"}});
    }
    try {
        if (doc.contains("seed")) {
            seed = doc["seed"].get<std::uint64_t>();
        }
        const json list = doc.value("apis", json::array());
        if (!list.is_array()) {
            reader.add("apis must be a list", "apis");
        }
        std::set<std::string> ids;
        for (std::size_t i = 0; list.is_array() && i < list.size(); ++i) {
            const auto& a = list[i];
            auto where = "apis[" + std::to_string(i) + "]";
            if (!a.is_object()) {
                reader.add("api must be a map", where);
                continue;
            }
            SimApi api;
            api.apiId = a.value("api_id", std::string());
            if (api.apiId.empty()) {
                reader.add("api_id is required", where);
            } else if (!ids.insert(api.apiId).second) {
                reader.add("duplicate api_id '" + api.apiId + "'", where);
            }
            api.latency = reader.latency(a.value("latency_ms", json()), where + ".latency_ms");
            api.failPlan = reader.fail_plan(a.value("fail_plan", json()), where + ".fail_plan");
            const json routes = a.value("routes", json::array());
            std::set<std::tuple<HttpMethod, std::string, std::string>> patterns;
            for (std::size_t r = 0; r < routes.size(); ++r) {
                auto rwhere = where + ".routes[" + std::to_string(r) + "]";
                auto route = reader.route(routes[r], rwhere);
                if (!patterns.emplace(route.method, route.urlPattern, route.bodyPattern.value_or("")).second) {
                    reader.add("duplicate route pattern", rwhere);
                }
                api.routes.push_back(std::move(route));
            }
            apis.push_back(std::move(api));
        }
    } catch (const json::exception& e) {
        reader.add(e.what(), "$");
    }
    if (!reader.violations.empty()) {
        throw ScenarioInvalid(std::move(reader.violations));
    }
    try {
        return SimNetwork(std::move(apis), seed, std::move(clock));
    } catch (const std::regex_error& e) {
        throw ScenarioInvalid({{"ScenarioInvalid", e.what(), "routes"}});
    }
}

SimNetwork load_scenario_file(const std::filesystem::path& path,
                              std::shared_ptr<const Clock> clock) {
    return load_scenario(load_structured_file(path), std::move(clock));
}

std::size_t max_inflight(const std::vector<CallLogEntry>& log) {
    std::vector<std::pair<std::uint64_t, int>> events;
    events.reserve(log.size() * 2);
    for (const auto& e : log) {
        events.emplace_back(e.beginSeq, +1);
        events.emplace_back(e.endSeq, -1);
    }
    std::sort(events.begin(), events.end());
    long current = 0;
    long best = 0;
    for (const auto& [seq, delta] : events) {
        current += delta;
        best = std::max(best, current);
    }
    return static_cast<std::size_t>(best);
}

std::size_t assert_max_inflight(const SimNetwork& net) { return max_inflight(net.call_log()); }

}  // namespace fedkg
