/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/assembly.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>

namespace fedkg {

std::vector<std::string> ResultGraph::binding_key() const {
    std::vector<std::string> key;
    key.reserve(nodeBindings.size());
    for (const auto& [id, rec] : nodeBindings) {
        key.push_back(rec.canonicalId);
    }
    return key;
}

namespace {

struct EdgeIndex {
    const QEdge* qedge = nullptr;
    std::map<std::pair<std::string, std::string>, std::vector<const RecordEdge*>> byPair;
    std::set<std::string> subjects;
    std::set<std::string> objects;
    std::map<std::string, std::set<std::string>> objectsOf;   // subject -> objects
    std::map<std::string, std::set<std::string>> subjectsOf;  // object -> subjects
};

}  // namespace

std::vector<ResultGraph> assemble(const EdgeRecords& records, const QueryGraph& qg,
                                  const NodeSeeds& seeds) {
    std::map<std::string, EntityRecord> entities;
    auto remember = [&](const EntityRecord& e) { entities.emplace(e.canonicalId, e); };
    for (const auto& [node, list] : seeds) {
        for (const auto& e : list) {
            remember(e);
        }
    }

    std::vector<EdgeIndex> edges;
    for (const auto& [id, qe] : qg.edges) {
        auto it = records.find(id);
        if (it == records.end() || it->second.empty()) {
            return {};
        }
        EdgeIndex ix;
        ix.qedge = &qe;
        for (const auto& r : it->second) {
            remember(r.subject);
            remember(r.object);
            ix.byPair[{r.subject.canonicalId, r.object.canonicalId}].push_back(&r);
            ix.subjects.insert(r.subject.canonicalId);
            ix.objects.insert(r.object.canonicalId);
            ix.objectsOf[r.subject.canonicalId].insert(r.object.canonicalId);
            ix.subjectsOf[r.object.canonicalId].insert(r.subject.canonicalId);
        }
        edges.push_back(std::move(ix));
    }

    // Candidate entities per node: intersection over incident edges and seeds.
    std::map<std::string, std::optional<std::set<std::string>>> candidates;
    auto narrow = [&](const std::string& node, const std::set<std::string>& allowed) {
        auto& c = candidates[node];
        if (!c) {
            c = allowed;
            return;
        }
        std::set<std::string> both;
        std::set_intersection(c->begin(), c->end(), allowed.begin(), allowed.end(),
                              std::inserter(both, both.end()));
        c = std::move(both);
    };
    for (const auto& ix : edges) {
        narrow(ix.qedge->subject, ix.subjects);
        narrow(ix.qedge->object, ix.objects);
    }
    for (const auto& [id, node] : qg.nodes) {
        auto s = seeds.find(id);
        if (s != seeds.end()) {
            std::set<std::string> allowed;
            for (const auto& e : s->second) {
                allowed.insert(e.canonicalId);
            }
            narrow(id, allowed);
        } else if (!candidates[id] && node.ids) {
            std::set<std::string> allowed;
            for (const auto& c : *node.ids) {
                remember(EntityRecord::self(c));
                allowed.insert(c);
            }
            narrow(id, allowed);
        }
        if (!candidates[id] || candidates[id]->empty()) {
            return {};
        }
    }

    // Bind nodes breadth-first from the pinned nodes so each node after the first touches
    // an already bound one.
    std::vector<std::string> nodeOrder;
    {
        std::set<std::string> placed;
        auto place = [&](const std::string& n) {
            if (placed.insert(n).second) {
                nodeOrder.push_back(n);
            }
        };
        for (const auto& p : qg.pinned_nodes()) {
            place(p);
        }
        if (nodeOrder.empty() && !qg.nodes.empty()) {
            place(qg.nodes.begin()->first);
        }
        for (std::size_t i = 0; i < nodeOrder.size(); ++i) {
            for (const auto& [id, e] : qg.edges) {
                if (e.subject == nodeOrder[i]) {
                    place(e.object);
                } else if (e.object == nodeOrder[i]) {
                    place(e.subject);
                }
            }
        }
        for (const auto& [id, n] : qg.nodes) {
            place(id);
        }
    }

    std::vector<ResultGraph> results;
    std::map<std::string, std::string> assigned;
    std::function<void(std::size_t)> bind = [&](std::size_t depth) {
        if (depth == nodeOrder.size()) {
            ResultGraph rg;
            for (const auto& [node, canon] : assigned) {
                rg.nodeBindings.emplace(node, entities.at(canon));
            }
            for (const auto& ix : edges) {
                auto& list = rg.edgeBindings[ix.qedge->qedgeId];
                for (const auto* r : ix.byPair.at({assigned.at(ix.qedge->subject),
                                                   assigned.at(ix.qedge->object)})) {
                    list.push_back(*r);
                }
            }
            results.push_back(std::move(rg));
            return;
        }
        const auto& node = nodeOrder[depth];
        // Walk the smallest neighbour set reachable from an already bound endpoint.
        const std::set<std::string>* pool = &*candidates[node];
        for (const auto& ix : edges) {
            const std::map<std::string, std::set<std::string>>* adj = nullptr;
            const std::string* other = nullptr;
            if (ix.qedge->subject == node && assigned.contains(ix.qedge->object)) {
                adj = &ix.subjectsOf;
                other = &assigned.at(ix.qedge->object);
            } else if (ix.qedge->object == node && assigned.contains(ix.qedge->subject)) {
                adj = &ix.objectsOf;
                other = &assigned.at(ix.qedge->subject);
            }
            if (adj) {
                auto it = adj->find(*other);
                if (it == adj->end()) {
                    return;
                }
                if (it->second.size() < pool->size()) {
                    pool = &it->second;
                }
            }
        }
        for (const auto& canon : *pool) {
            if (pool != &*candidates[node] && !candidates[node]->contains(canon)) {
                continue;
            }
            assigned[node] = canon;
            bool ok = true;
            for (const auto& ix : edges) {
                const auto& s = ix.qedge->subject;
                const auto& o = ix.qedge->object;
                if ((s != node && o != node) || !assigned.contains(s) || !assigned.contains(o)) {
                    continue;
                }
                if (!ix.byPair.contains({assigned.at(s), assigned.at(o)})) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                bind(depth + 1);
            }
            assigned.erase(node);
        }
    };
    bind(0);

    std::vector<std::pair<std::vector<std::string>, std::size_t>> keys;
    keys.reserve(results.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        keys.emplace_back(results[i].binding_key(), i);
    }
    std::sort(keys.begin(), keys.end());
    std::vector<ResultGraph> sorted;
    sorted.reserve(results.size());
    for (const auto& [key, i] : keys) {
        sorted.push_back(std::move(results[i]));
    }
    return sorted;
}

}  // namespace fedkg
