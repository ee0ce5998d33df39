/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "fedkg/executor.hpp"
#include "fedkg/query.hpp"

namespace fedkg {

// One answer: every query node bound to an entity and every query edge to the records
// that connect the bound endpoints.
struct ResultGraph {
    std::map<std::string, EntityRecord> nodeBindings;
    std::map<std::string, std::vector<RecordEdge>> edgeBindings;
    double score = 0.0;

    // Canonical ids of the node bindings in qnodeId order; the tie-break key for ordering.
    std::vector<std::string> binding_key() const;
};

using EdgeRecords = std::map<std::string, std::vector<RecordEdge>>;
using NodeSeeds = std::map<std::string, std::vector<EntityRecord>>;

// All consistent joins of the per-edge records over the query topology. Records are
// oriented like their query edge (record.subject binds qedge.subject). Entities are
// identified by canonical id. A node listed in `seeds` may only bind one of its seed
// entities; a node without incident edges binds its seeds (or self-records of its ids).
// Parallel records for the same entity pair are merged into one edge binding list.
// Output is ordered by binding_key().
std::vector<ResultGraph> assemble(const EdgeRecords& records, const QueryGraph& qg,
                                  const NodeSeeds& seeds = {});

}  // namespace fedkg
