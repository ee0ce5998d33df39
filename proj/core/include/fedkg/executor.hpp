/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <map>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fedkg/clock.hpp"
#include "fedkg/id_resolution.hpp"
#include "fedkg/planner.hpp"
#include "fedkg/registry.hpp"
#include "fedkg/transport.hpp"

namespace fedkg {

struct FilterContext {
    std::string ns;  // id namespace of the operation input
};

// Left-to-right. rmPrefix strips a leading "<ns>:"; wrapPrefix(p) prepends "p:" unless present.
std::string apply_filter_chain(std::string value, const std::vector<FilterCall>& filters,
                               const FilterContext& context);

struct SubQuery {
    InvocationSpec spec;
    std::vector<std::string> inputValues;    // bare identifier values
    std::vector<EntityRecord> inputRecords;  // one per input value
    HttpRequestSpec request;
};

struct SkippedEntity {
    std::string canonicalId;
    std::string apiId;
    std::string opId;
    std::string inputNamespace;
};

struct SubQueryBatch {
    std::vector<SubQuery> subqueries;
    std::vector<SkippedEntity> skipped;  // inputs without an alias in the input namespace
};

// The placeholder receives each input as "<ns>:<value>"; filters are applied per value and
// batched values are joined with the operation's separator. Placeholder output is
// percent-encoded; literal template text is inserted verbatim.
// Throws NoUsableInputs when no input has an alias in spec.inputNamespace.
SubQueryBatch build_subqueries(const InvocationSpec& spec, std::span<const EntityRecord> inputs,
                               const Registry& registry);

struct ExecutionPolicy {
    int maxConcurrency = 8;
    int timeoutMs = 10000;
    int maxRetries = 2;
    int retryBackoffMs = 100;

    // Throws ConfigError when a field is out of range.
    void validate() const;
};

struct Failure {
    std::string reason;
    int lastStatus = 0;
    bool timedOut = false;
};

struct ExecutionResult {
    SubQuery subquery;
    std::variant<HttpResponse, Failure> outcome;
    int attempts = 0;

    bool ok() const noexcept { return std::holds_alternative<HttpResponse>(outcome); }
};

// Runs every sub-query with at most policy.maxConcurrency in flight. Timeouts, transport
// errors and 5xx are retried up to maxRetries times with a fixed backoff; 4xx never are.
// Failures are reported per sub-query; results keep the input order.
std::vector<ExecutionResult> execute(std::vector<SubQuery> subqueries, Transport& transport,
                                     const ExecutionPolicy& policy,
                                     const Clock& clock = *steady_clock());

struct RecordEdge {
    EntityRecord subject;  // entity bound to the query edge's subject node
    std::string predicate;
    EntityRecord object;  // entity bound to the query edge's object node
    std::string apiId;
    std::string opId;
    std::string source;
    std::map<std::string, json> attributes;
    std::string qedgeId;

    bool operator==(const RecordEdge&) const = default;
};

json record_to_json(const RecordEdge& record);

// Values reached by a dotted path. A segment applied to a list maps over its elements and
// flattens one level; only scalar leaves are returned. Missing keys yield nothing.
std::vector<json> evaluate_path(const json& document, const ResponsePath& path);

// Throws MalformedResponse when `body` is not a JSON document.
json parse_response_body(const std::string& body);

// One extracted association before identifier resolution.
struct RawAssociation {
    std::size_t inputIndex;   // index into the inputs passed to extract_associations
    std::string outputCurie;  // "<output namespace>:<value>"
    std::map<std::string, json> attributes;
};

// When the response is a list of objects that each carry a "query" field (batch APIs),
// every element is linked only to the inputs whose alias equals that field. Otherwise each
// extracted object is paired with every input.
std::vector<RawAssociation> extract_associations(const json& response, const InvocationSpec& spec,
                                                 std::span<const EntityRecord> inputs,
                                                 const Registry& registry);

std::vector<RecordEdge> materialize_records(const std::vector<RawAssociation>& associations,
                                            const InvocationSpec& spec,
                                            std::span<const EntityRecord> inputs,
                                            const Registry& registry,
                                            const std::map<std::string, EntityRecord>& resolved);

std::vector<RecordEdge> extract_records(const json& response, const InvocationSpec& spec,
                                        std::span<const EntityRecord> inputs,
                                        const Registry& registry, const ResolverProvider& resolver);

}  // namespace fedkg
