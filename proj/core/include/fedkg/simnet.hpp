/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "fedkg/clock.hpp"
#include "fedkg/transport.hpp"

namespace fedkg {

// A simulated endpoint. `urlPattern` (and `bodyPattern` for POST) may contain one
// "{value}" capture; the captured text selects the canned response.
struct SimRoute {
    HttpMethod method = HttpMethod::Get;
    std::string urlPattern;
    std::optional<std::string> bodyPattern;
    std::map<std::string, std::string> responses;  // captured value -> body, served verbatim
    int defaultStatus = 404;
    // Batch routes split the capture on this separator and answer with a JSON list of
    // the known per-value bodies.
    std::optional<std::string> batchSeparator;
};

struct SimLatency {
    int minMs = 0;
    int maxMs = 0;  // fixed latency when equal to minMs
};

// Applies to calls whose index falls in [fromCall, toCall). With `value` set, the index
// counts only calls that captured that value; otherwise all calls to the API.
struct FailRule {
    std::size_t fromCall = 0;
    std::optional<std::size_t> toCall;  // nullopt = forever
    int status = 500;
    bool timeout = false;
    std::optional<std::string> value;
};

struct SimApi {
    std::string apiId;
    std::vector<SimRoute> routes;
    SimLatency latency;
    std::vector<FailRule> failPlan;
};

struct CallLogEntry {
    std::uint64_t beginSeq = 0;  // logical clock, strictly increasing across the network
    std::uint64_t endSeq = 0;
    Clock::duration beginTime{};  // simulated time; not part of determinism checks
    Clock::duration endTime{};
    std::string apiId;  // empty when no route matched
    std::size_t callIndex = 0;
    int latencyMs = 0;
    HttpRequestSpec request;
    HttpResponse response;
};

// Deterministic in-process API network implementing Transport. Same scenario, seed and
// request sequence give the same outcomes and latencies. send() is thread-safe.
class SimNetwork final : public Transport {
public:
    SimNetwork(std::vector<SimApi> apis, std::uint64_t seed,
               std::shared_ptr<const Clock> clock = steady_clock());
    ~SimNetwork() override;
    SimNetwork(SimNetwork&&) noexcept;
    SimNetwork& operator=(SimNetwork&&) noexcept;

    HttpResponse send(const HttpRequestSpec& request) override;

    const std::vector<SimApi>& apis() const noexcept;
    std::uint64_t seed() const noexcept;
    std::vector<CallLogEntry> call_log() const;
    std::size_t calls_to(const std::string& apiId) const;

    void set_fail_plan(const std::string& apiId, std::vector<FailRule> rules);
    void set_latency(const std::string& apiId, SimLatency latency);
    void set_clock(std::shared_ptr<const Clock> clock);
    // Clears the log, call counters and latency generators.
    void reset();

private:
    struct State;
    std::unique_ptr<State> state_;
};

// Throws ScenarioInvalid listing every problem found.
SimNetwork load_scenario(const json& doc, std::shared_ptr<const Clock> clock = steady_clock());
SimNetwork load_scenario_file(const std::filesystem::path& path,
                              std::shared_ptr<const Clock> clock = steady_clock());

// Maximum number of simultaneously in-flight requests derived from the call log.
std::size_t assert_max_inflight(const SimNetwork& net);
std::size_t max_inflight(const std::vector<CallLogEntry>& log);

}  // namespace fedkg
