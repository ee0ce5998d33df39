/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/engine.hpp"

#include <set>

#include "fedkg/error.hpp"
#include "fedkg/simnet.hpp"

namespace fedkg {

namespace {

std::string other_end(const QEdge& e, const std::string& start) {
    return e.subject == start ? e.object : e.subject;
}

// Entity on the far side of a record relative to the node the edge started from.
const EntityRecord& far_side(const RecordEdge& r, const QEdge& e, const std::string& start) {
    return e.subject == start ? r.object : r.subject;
}

std::string failure_message(const ExecutionResult& r) {
    const auto& f = std::get<Failure>(r.outcome);
    return r.subquery.spec.metaEdge.apiId + "/" + r.subquery.spec.metaEdge.opId + " " +
           r.subquery.request.full_url() + ": " + f.reason + " after " +
           std::to_string(r.attempts) + " attempt(s)";
}

}  // namespace

json error_document(const std::string& code, const std::string& message,
                    const std::vector<Violation>& violations) {
    json err = {{"code", code}, {"message", message}};
    if (!violations.empty()) {
        json list = json::array();
        for (const auto& v : violations) {
            list.push_back({{"code", v.code}, {"message", v.message}, {"location", v.location}});
        }
        err["violations"] = std::move(list);
    }
    return {{"error", std::move(err)}};
}

json error_document(const std::exception& e) {
    if (const auto* qi = dynamic_cast<const QueryInvalid*>(&e)) {
        return error_document(qi->code(), qi->what(), qi->violations());
    }
    if (const auto* si = dynamic_cast<const ScenarioInvalid*>(&e)) {
        return error_document(si->code(), si->what(), si->violations());
    }
    if (const auto* di = dynamic_cast<const DocumentInvalid*>(&e)) {
        std::vector<Violation> all;
        for (const auto& report : di->reports()) {
            for (auto v : report.violations) {
                v.location = report.apiId + (v.location.empty() ? "" : ":" + v.location);
                all.push_back(std::move(v));
            }
        }
        return error_document(di->code(), di->what(), all);
    }
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        return error_document(err->code(), err->what());
    }
    return error_document("Internal", e.what());
}

Engine::Engine(Registry registry, TypeHierarchy hierarchy,
               std::shared_ptr<const ResolverProvider> resolver,
               std::shared_ptr<const CountsProvider> counts, std::shared_ptr<Transport> transport,
               ExecutionPolicy policy, std::shared_ptr<const Clock> clock)
    : registry_(std::move(registry)),
      hierarchy_(std::move(hierarchy)),
      metakg_(build_metakg(registry_, hierarchy_)),
      resolver_(resolver ? std::move(resolver) : std::make_shared<IdentityResolver>()),
      counts_(counts ? std::move(counts) : std::make_shared<NoCounts>()),
      transport_(std::move(transport)),
      policy_(policy),
      clock_(clock ? std::move(clock) : steady_clock()) {
    policy_.validate();
}

Engine Engine::from_config(const EngineConfig& config) {
    config.validate();
    auto registry = load_registry_dir(config.registryDir);
    TypeHierarchy hierarchy;
    if (config.hierarchyFile) {
        hierarchy = TypeHierarchy::load(*config.hierarchyFile);
    }

    std::shared_ptr<const ResolverProvider> resolver;
    switch (config.resolver.kind) {
        case ResolverConfig::Kind::Fixture:
            resolver = std::make_shared<FileFixtureResolver>(
                FileFixtureResolver::load(config.resolver.location));
            break;
        case ResolverConfig::Kind::Http:
            resolver = std::make_shared<CachingResolver>(
                std::make_shared<HttpResolver>(config.resolver.location, config.policy.timeoutMs));
            break;
        case ResolverConfig::Kind::None:
            resolver = std::make_shared<IdentityResolver>();
            break;
    }

    std::shared_ptr<const CountsProvider> counts;
    if (config.counts.kind == CountsConfig::Kind::Fixture) {
        counts = std::make_shared<FileFixtureCounts>(FileFixtureCounts::load(config.counts.path));
    } else {
        counts = std::make_shared<NoCounts>();
    }

    std::shared_ptr<const Clock> clock = steady_clock();
    std::shared_ptr<Transport> transport;
    if (config.transport) {
        if (config.transport->kind == TransportConfig::Kind::Simnet) {
            clock = std::make_shared<ScaledClock>(config.simTimeScale);
            transport =
                std::make_shared<SimNetwork>(load_scenario_file(config.transport->scenario, clock));
        } else {
            transport = std::make_shared<HttpTransport>();
        }
    }
    return Engine(std::move(registry), std::move(hierarchy), std::move(resolver), std::move(counts),
                  std::move(transport), config.policy, std::move(clock));
}

QueryGraph Engine::parse(const json& queryDocument) const {
    auto qg = parse_query(queryDocument);
    std::vector<Violation> violations;
    const auto& known = metakg_.known_types();
    for (const auto& [id, node] : qg.nodes) {
        if (!node.categories) {
            continue;
        }
        for (const auto& c : *node.categories) {
            if (!known.contains(c)) {
                violations.push_back({query_violation::kUnknownCategory,
                                      "unknown category '" + c + "'",
                                      "message.query_graph.nodes." + id + ".categories"});
            }
        }
    }
    if (!violations.empty()) {
        throw QueryInvalid(std::move(violations));
    }
    return qg;
}

QueryPlan Engine::plan(const QueryGraph& qg) const { return plan_query(qg, metakg_, hierarchy_); }

QueryOutcome Engine::run(const QueryGraph& qg) const { return run(qg, plan(qg)); }

QueryOutcome Engine::run(const QueryGraph& qg, const QueryPlan& plan) const {
    if (!transport_) {
        throw ConfigError("engine has no transport configured");
    }
    QueryOutcome outcome{qg, plan, {}, {}};
    auto& logs = outcome.logs;
    for (const auto& e : plan.unsatisfiable_edges()) {
        logs.push_back({"WARNING", "UnsatisfiableEdge", "no operation can answer query edge " + e});
    }

    // Entities bound so far, per query node, keyed by canonical id.
    std::map<std::string, std::map<std::string, EntityRecord>> bound;
    NodeSeeds seeds;
    for (const auto& qnodeId : qg.pinned_nodes()) {
        const auto& node = qg.nodes.at(qnodeId);
        std::string failure;
        auto resolved = resolve_or_self(*node.ids, *resolver_, kDefaultResolveBatch, &failure);
        if (!failure.empty()) {
            logs.push_back({"WARNING", "ResolverUnavailable", failure});
        }
        auto& slot = bound[qnodeId];
        for (const auto& id : *node.ids) {
            auto record = resolved.at(id);
            if (record.semanticTypes.empty() && node.categories && !node.categories->empty()) {
                record.semanticTypes = *node.categories;
            }
            slot.emplace(record.canonicalId, record);
        }
        for (const auto& [canon, record] : slot) {
            seeds[qnodeId].push_back(record);
        }
    }

    EdgeRecords records;
    for (const auto& step : plan.order.orderedEdges) {
        const auto& qe = qg.edges.at(step.qedgeId);
        const auto other = other_end(qe, step.startNode);
        std::vector<EntityRecord> inputs;
        for (const auto& [canon, record] : bound[step.startNode]) {
            inputs.push_back(record);
        }
        auto& out = records[step.qedgeId];
        if (inputs.empty()) {
            continue;
        }

        std::vector<SubQuery> subqueries;
        auto specIt = plan.perEdge.find(step.qedgeId);
        if (specIt != plan.perEdge.end()) {
            for (const auto& spec : specIt->second) {
                try {
                    auto batch = build_subqueries(spec, inputs, registry_);
                    for (const auto& s : batch.skipped) {
                        logs.push_back({"INFO", "NoAlias",
                                        s.canonicalId + " has no " + s.inputNamespace +
                                            " identifier for " + s.apiId + "/" + s.opId});
                    }
                    for (auto& sq : batch.subqueries) {
                        sq.request.timeoutMs = policy_.timeoutMs;
                        subqueries.push_back(std::move(sq));
                    }
                } catch (const NoUsableInputs& e) {
                    logs.push_back({"INFO", e.code(), e.what()});
                }
            }
        }

        auto results = execute(std::move(subqueries), *transport_, policy_, *clock_);

        // Parse every response, then resolve all new identifiers of this round in one go.
        std::vector<std::pair<const ExecutionResult*, std::vector<RawAssociation>>> extracted;
        std::vector<std::string> curies;
        for (const auto& r : results) {
            if (!r.ok()) {
                logs.push_back({"WARNING", "SubQueryFailed", failure_message(r)});
                continue;
            }
            const auto& response = std::get<HttpResponse>(r.outcome);
            if (response.status < 200 || response.status >= 300) {
                continue;
            }
            try {
                auto body = parse_response_body(response.body);
                auto assoc = extract_associations(body, r.subquery.spec, r.subquery.inputRecords,
                                                  registry_);
                for (const auto& a : assoc) {
                    curies.push_back(a.outputCurie);
                }
                extracted.emplace_back(&r, std::move(assoc));
            } catch (const MalformedResponse& e) {
                logs.push_back({"WARNING", e.code(),
                                r.subquery.spec.metaEdge.apiId + ": " + std::string(e.what())});
            }
        }
        std::string failure;
        auto resolved = resolve_or_self(curies, *resolver_, kDefaultResolveBatch, &failure);
        if (!failure.empty()) {
            logs.push_back({"WARNING", "ResolverUnavailable", failure});
        }

        const bool constrained = bound.contains(other);
        std::set<std::tuple<std::string, std::string, std::string, std::string>> seen;
        for (const auto& [r, assoc] : extracted) {
            auto recs = materialize_records(assoc, r->subquery.spec, r->subquery.inputRecords,
                                            registry_, resolved);
            for (auto& rec : recs) {
                const auto& far = far_side(rec, qe, step.startNode);
                if (constrained && !bound[other].contains(far.canonicalId)) {
                    continue;
                }
                if (!seen.emplace(rec.subject.canonicalId, rec.object.canonicalId, rec.apiId,
                                  rec.opId)
                         .second) {
                    continue;
                }
                out.push_back(std::move(rec));
            }
        }
        if (!constrained) {
            auto& slot = bound[other];
            for (const auto& rec : out) {
                const auto& far = far_side(rec, qe, step.startNode);
                slot.emplace(far.canonicalId, far);
            }
        }
    }

    auto assembled = assemble(records, qg, seeds);
    for (auto& result : assembled) {
        result.score = score_result(result, *counts_);
    }
    outcome.results = rank(std::move(assembled));
    return outcome;
}

}  // namespace fedkg
