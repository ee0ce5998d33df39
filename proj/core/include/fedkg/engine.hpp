/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <memory>
#include <vector>

#include "fedkg/engine_config.hpp"
#include "fedkg/planner.hpp"
#include "fedkg/results.hpp"
#include "fedkg/scoring.hpp"

namespace fedkg {

struct QueryOutcome {
    QueryGraph queryGraph;
    QueryPlan plan;
    std::vector<ResultGraph> results;  // ranked
    std::vector<Diagnostic> logs;

    json document() const { return results_document(queryGraph, results, logs); }
};

// Everything needed to answer queries. Immutable after construction; run() may be called
// from many threads as long as the transport and providers are thread-safe.
class Engine {
public:
    Engine(Registry registry, TypeHierarchy hierarchy,
           std::shared_ptr<const ResolverProvider> resolver,
           std::shared_ptr<const CountsProvider> counts, std::shared_ptr<Transport> transport,
           ExecutionPolicy policy = {}, std::shared_ptr<const Clock> clock = steady_clock());

    // Loads the registry, hierarchy, providers and transport named by `config`. A config
    // without transport yields an engine that can plan and explain but not run.
    static Engine from_config(const EngineConfig& config);

    const Registry& registry() const noexcept { return registry_; }
    const TypeHierarchy& hierarchy() const noexcept { return hierarchy_; }
    const MetaKG& metakg() const noexcept { return metakg_; }
    const ExecutionPolicy& policy() const noexcept { return policy_; }
    Transport* transport() const noexcept { return transport_.get(); }

    // parse_query plus a check that every category and predicate is a known type.
    // Throws QuerySyntax or QueryInvalid.
    QueryGraph parse(const json& queryDocument) const;
    QueryPlan plan(const QueryGraph& qg) const;
    QueryOutcome run(const QueryGraph& qg) const;
    QueryOutcome run(const QueryGraph& qg, const QueryPlan& plan) const;

    json metakg_document() const { return export_metakg(metakg_); }

private:
    Registry registry_;
    TypeHierarchy hierarchy_;
    MetaKG metakg_;
    std::shared_ptr<const ResolverProvider> resolver_;
    std::shared_ptr<const CountsProvider> counts_;
    std::shared_ptr<Transport> transport_;
    ExecutionPolicy policy_;
    std::shared_ptr<const Clock> clock_;
};

// {"error": {"code", "message", "violations"?: [{code, message, location}]}}
json error_document(const std::string& code, const std::string& message,
                    const std::vector<Violation>& violations = {});
// Error document for any exception; engine errors keep their code and violations.
json error_document(const std::exception& e);

}  // namespace fedkg
