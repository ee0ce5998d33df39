/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/executor.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "fedkg/curie.hpp"
#include "fedkg/error.hpp"

namespace fedkg {

namespace {

constexpr std::size_t kDefaultBatchSize = 1000;

const Operation& require_operation(const Registry& registry, const InvocationSpec& spec) {
    const auto* op = registry.find_operation(spec.metaEdge.apiId, spec.metaEdge.opId);
    if (!op) {
        throw Error("UnknownOperation",
                    "operation " + spec.metaEdge.apiId + "/" + spec.metaEdge.opId + " not in registry");
    }
    return *op;
}

bool retryable(const HttpResponse& r) { return r.timedOut || r.status == 0 || r.status >= 500; }

ExecutionResult run_one(SubQuery sq, Transport& transport, const ExecutionPolicy& policy,
                        const Clock& clock) {
    ExecutionResult result{std::move(sq), Failure{}, 0};
    auto request = result.subquery.request;
    request.timeoutMs = policy.timeoutMs;
    for (int attempt = 0; attempt <= policy.maxRetries; ++attempt) {
        if (attempt > 0) {
            clock.sleep_for(std::chrono::milliseconds(policy.retryBackoffMs));
        }
        ++result.attempts;
        HttpResponse response;
        try {
            response = transport.send(request);
        } catch (const std::exception& e) {
            response = HttpResponse{0, e.what(), false};
        }
        if (!retryable(response)) {
            if (response.status >= 400) {
                result.outcome = Failure{"HTTP " + std::to_string(response.status), response.status, false};
            } else {
                result.outcome = std::move(response);
            }
            return result;
        }
        result.outcome = Failure{response.timedOut ? std::string("timeout")
                                 : response.status == 0 ? "transport error: " + response.body
                                                        : "HTTP " + std::to_string(response.status),
                                 response.status, response.timedOut};
    }
    return result;
}

}  // namespace

std::string apply_filter_chain(std::string value, const std::vector<FilterCall>& filters,
                               const FilterContext& context) {
    for (const auto& f : filters) {
        if (f.name == "rmPrefix") {
            auto prefix = context.ns + ":";
            if (!context.ns.empty() && value.rfind(prefix, 0) == 0) {
                value.erase(0, prefix.size());
            }
        } else if (f.name == "wrapPrefix" && !f.args.empty()) {
            auto prefix = f.args.front() + ":";
            if (value.rfind(prefix, 0) != 0) {
                value = prefix + value;
            }
        }
    }
    return value;
}

SubQueryBatch build_subqueries(const InvocationSpec& spec, std::span<const EntityRecord> inputs,
                               const Registry& registry) {
    const auto& op = require_operation(registry, spec);
    const auto* doc = registry.find_api(spec.metaEdge.apiId);
    const auto& ns = spec.inputNamespace;

    SubQueryBatch batch;
    std::vector<std::string> values;
    std::vector<EntityRecord> owners;
    for (const auto& rec : inputs) {
        auto aliases = aliases_in_namespace(rec, ns);
        if (aliases.empty()) {
            batch.skipped.push_back({rec.canonicalId, spec.metaEdge.apiId, spec.metaEdge.opId, ns});
            continue;
        }
        for (auto& a : aliases) {
            values.push_back(std::move(a));
            owners.push_back(rec);
        }
    }
    if (values.empty()) {
        throw NoUsableInputs(spec.metaEdge.apiId, spec.metaEdge.opId, ns);
    }

    std::size_t chunk = op.supportBatch
                            ? static_cast<std::size_t>(op.batchSize.value_or(kDefaultBatchSize))
                            : 1;
    std::string server = doc->serverUrl;
    while (!server.empty() && server.back() == '/') {
        server.pop_back();
    }
    for (std::size_t i = 0; i < values.size(); i += chunk) {
        SubQuery sq;
        sq.spec = spec;
        auto end = std::min(values.size(), i + chunk);
        sq.inputValues.assign(values.begin() + i, values.begin() + end);
        sq.inputRecords.assign(owners.begin() + i, owners.begin() + end);
        auto fill = [&](const PlaceholderSegment& ph) {
            std::string out;
            for (std::size_t k = 0; k < sq.inputValues.size(); ++k) {
                if (k > 0) {
                    out += op.batchSeparator;
                }
                out += percent_encode(apply_filter_chain(ns + ":" + sq.inputValues[k], ph.filters, {ns}));
            }
            return out;
        };
        sq.request.method = op.method;
        sq.request.url = server + op.pathTemplate.render(fill);
        for (const auto& [name, t] : op.query_parameters()) {
            sq.request.query.emplace_back(name, t->render(fill));
        }
        if (op.requestBodyTemplate) {
            sq.request.body = op.requestBodyTemplate->render(fill);
            sq.request.headers.emplace_back("Content-Type", "application/x-www-form-urlencoded");
        }
        batch.subqueries.push_back(std::move(sq));
    }
    return batch;
}

void ExecutionPolicy::validate() const {
    if (maxConcurrency <= 0) {
        throw ConfigError("maxConcurrency must be positive");
    }
    if (timeoutMs <= 0) {
        throw ConfigError("timeoutMs must be positive");
    }
    if (maxRetries < 0) {
        throw ConfigError("maxRetries must be non-negative");
    }
    if (retryBackoffMs <= 0) {
        throw ConfigError("retryBackoffMs must be positive");
    }
}

std::vector<ExecutionResult> execute(std::vector<SubQuery> subqueries, Transport& transport,
                                     const ExecutionPolicy& policy, const Clock& clock) {
    policy.validate();
    const auto n = subqueries.size();
    std::vector<ExecutionResult> results(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            auto i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            results[i] = run_one(std::move(subqueries[i]), transport, policy, clock);
        }
    };
    auto threads = std::min<std::size_t>(static_cast<std::size_t>(policy.maxConcurrency), n);
    if (threads <= 1) {
        worker();
        return results;
    }
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    return results;
}

json record_to_json(const RecordEdge& record) {
    json attrs = json::object();
    for (const auto& [k, v] : record.attributes) {
        attrs[k] = v;
    }
    return json{{"subject", record.subject.canonicalId},
                {"predicate", record.predicate},
                {"object", record.object.canonicalId},
                {"api_id", record.apiId},
                {"op_id", record.opId},
                {"source", record.source},
                {"qedge_id", record.qedgeId},
                {"attributes", attrs}};
}

std::vector<json> evaluate_path(const json& document, const ResponsePath& path) {
    std::vector<const json*> current{&document};
    for (const auto& seg : path.segments) {
        std::vector<const json*> next;
        auto step = [&](const json& v) {
            if (v.is_object()) {
                auto it = v.find(seg);
                if (it != v.end()) {
                    next.push_back(&*it);
                }
            }
        };
        for (const auto* v : current) {
            if (v->is_array()) {
                for (const auto& e : *v) {
                    step(e);
                }
            } else {
                step(*v);
            }
        }
        current = std::move(next);
    }
    std::vector<json> out;
    for (const auto* v : current) {
        if (v->is_array()) {
            for (const auto& e : *v) {
                if (e.is_primitive() && !e.is_null()) {
                    out.push_back(e);
                }
            }
        } else if (v->is_primitive() && !v->is_null()) {
            out.push_back(*v);
        }
    }
    return out;
}

json parse_response_body(const std::string& body) {
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw MalformedResponse(e.what());
    }
}

std::vector<RawAssociation> extract_associations(const json& response, const InvocationSpec& spec,
                                                 std::span<const EntityRecord> inputs,
                                                 const Registry& registry) {
    const auto& op = require_operation(registry, spec);
    const auto* doc = registry.find_api(spec.metaEdge.apiId);
    std::vector<RawAssociation> out;
    auto mappingIt = doc->responseMappings.find(op.responseMappingRef);
    if (mappingIt == doc->responseMappings.end()) {
        return out;
    }
    const auto& mapping = mappingIt->second;
    const auto& outNs = spec.metaEdge.objectNamespace;
    auto idPath = mapping.idPaths.find(outNs);
    if (idPath == mapping.idPaths.end()) {
        return out;
    }

    std::set<std::pair<std::size_t, std::string>> seen;
    auto collect = [&](const json& scope, const std::vector<std::size_t>& owners) {
        std::map<std::string, json> attrs;
        for (const auto& [name, path] : mapping.attributePaths) {
            auto values = evaluate_path(scope, path);
            if (!values.empty()) {
                attrs[name] = json(values);
            }
        }
        for (const auto& v : evaluate_path(scope, idPath->second)) {
            auto s = scalar_to_string(v);
            if (!s || s->empty()) {
                continue;
            }
            auto curie = s->rfind(outNs + ":", 0) == 0 ? *s : outNs + ":" + *s;
            for (auto idx : owners) {
                if (seen.emplace(idx, curie).second) {
                    out.push_back({idx, curie, attrs});
                }
            }
        }
    };

    bool perQuery = response.is_array() && !response.empty() &&
                    std::all_of(response.begin(), response.end(), [](const json& e) {
                        return e.is_object() && e.contains("query");
                    });
    if (perQuery) {
        for (const auto& element : response) {
            auto q = scalar_to_string(element.at("query"));
            std::vector<std::size_t> owners;
            for (std::size_t i = 0; q && i < inputs.size(); ++i) {
                for (const auto& a : aliases_in_namespace(inputs[i], spec.inputNamespace)) {
                    if (a == *q || spec.inputNamespace + ":" + a == *q) {
                        owners.push_back(i);
                        break;
                    }
                }
            }
            collect(element, owners);
        }
    } else {
        std::vector<std::size_t> owners(inputs.size());
        for (std::size_t i = 0; i < owners.size(); ++i) {
            owners[i] = i;
        }
        collect(response, owners);
    }
    return out;
}

std::vector<RecordEdge> materialize_records(const std::vector<RawAssociation>& associations,
                                            const InvocationSpec& spec,
                                            std::span<const EntityRecord> inputs,
                                            const Registry& registry,
                                            const std::map<std::string, EntityRecord>& resolved) {
    const auto& op = require_operation(registry, spec);
    std::vector<RecordEdge> out;
    out.reserve(associations.size());
    for (const auto& a : associations) {
        auto it = resolved.find(a.outputCurie);
        EntityRecord found = it != resolved.end() ? it->second : EntityRecord::self(a.outputCurie);
        if (found.semanticTypes.empty()) {
            found.semanticTypes.push_back(spec.metaEdge.objectType);
        }
        EntityRecord input = inputs[a.inputIndex];
        if (input.semanticTypes.empty()) {
            input.semanticTypes.push_back(spec.metaEdge.subjectType);
        }
        RecordEdge r;
        if (spec.direction == Direction::Forward) {
            r.subject = std::move(input);
            r.object = std::move(found);
        } else {
            r.subject = std::move(found);
            r.object = std::move(input);
        }
        r.predicate = op.predicate;
        r.apiId = spec.metaEdge.apiId;
        r.opId = spec.metaEdge.opId;
        r.source = op.source;
        r.attributes = a.attributes;
        r.qedgeId = spec.qedgeId;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<RecordEdge> extract_records(const json& response, const InvocationSpec& spec,
                                        std::span<const EntityRecord> inputs,
                                        const Registry& registry, const ResolverProvider& resolver) {
    auto associations = extract_associations(response, spec, inputs, registry);
    std::vector<std::string> curies;
    for (const auto& a : associations) {
        curies.push_back(a.outputCurie);
    }
    auto resolved = resolve(curies, resolver);
    return materialize_records(associations, spec, inputs, registry, resolved);
}

}  // namespace fedkg
