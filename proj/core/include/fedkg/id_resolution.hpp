/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fedkg/structured.hpp"

namespace fedkg {

// A resolved entity. canonicalId is one of equivalentIds; equivalentIds has no duplicates.
struct EntityRecord {
    std::string canonicalId;
    std::vector<std::string> equivalentIds;
    std::string label;
    std::vector<std::string> semanticTypes;

    // Record for an id nobody knows: itself as the only equivalent, labelled by itself.
    static EntityRecord self(const std::string& curie);

    bool operator==(const EntityRecord&) const = default;
};

json entity_to_json(const EntityRecord& record);

// Resolver backends must be total over the requested batch and safe for concurrent calls.
class ResolverProvider {
public:
    virtual ~ResolverProvider() = default;
    virtual std::map<std::string, EntityRecord> resolve(std::span<const std::string> batch) const = 0;
};

inline constexpr std::size_t kDefaultResolveBatch = 1000;

// Deduplicates ids, calls the provider in batches of `batchSize`, and fills any id the
// provider left out with a self-record. Provider failures surface as ResolverUnavailable.
std::map<std::string, EntityRecord> resolve(std::span<const std::string> ids,
                                            const ResolverProvider& provider,
                                            std::size_t batchSize = kDefaultResolveBatch);

// Same, but never throws: an unavailable provider yields self-records for everything.
std::map<std::string, EntityRecord> resolve_or_self(std::span<const std::string> ids,
                                                    const ResolverProvider& provider,
                                                    std::size_t batchSize = kDefaultResolveBatch,
                                                    std::string* failure = nullptr);

// Bare values (prefix stripped) of equivalentIds whose prefix is `ns`, in record order.
std::vector<std::string> aliases_in_namespace(const EntityRecord& record, std::string_view ns);

// First id under the highest-priority namespace present; lexicographic within a namespace
// and among ids whose namespace is not listed at all.
std::string choose_canonical(const std::vector<std::string>& ids,
                             const std::vector<std::string>& namespacePriority);

std::vector<std::string> default_namespace_priority();

// Maps every id to its self-record. Backs the "no resolver" configuration.
class IdentityResolver final : public ResolverProvider {
public:
    std::map<std::string, EntityRecord> resolve(std::span<const std::string> batch) const override;
};

// TSV table: group_id<TAB>curie<TAB>label<TAB>semantic_types(comma-separated).
// Lines starting with '#' are comments, except "# priority: NS1,NS2,..." which sets the
// namespace priority for canonical id selection.
class FileFixtureResolver final : public ResolverProvider {
public:
    static FileFixtureResolver load(const std::filesystem::path& path);
    static FileFixtureResolver parse(std::string_view tsv,
                                     std::vector<std::string> namespacePriority = {});

    std::map<std::string, EntityRecord> resolve(std::span<const std::string> batch) const override;

    std::size_t group_count() const noexcept { return groups_.size(); }
    const std::vector<std::string>& namespace_priority() const noexcept { return priority_; }

private:
    std::vector<EntityRecord> groups_;
    std::unordered_map<std::string, std::size_t> byCurie_;
    std::vector<std::string> priority_;
};

// Read-through cache in front of another provider. Each key is filled at most once.
class CachingResolver final : public ResolverProvider {
public:
    explicit CachingResolver(std::shared_ptr<const ResolverProvider> inner)
        : inner_(std::move(inner)) {}

    std::map<std::string, EntityRecord> resolve(std::span<const std::string> batch) const override;

private:
    std::shared_ptr<const ResolverProvider> inner_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, EntityRecord> cache_;
};

// Client for a node-normalizer-style service. Wire format:
//   POST <baseUrl>/get_normalized_nodes  {"curies": ["NCBIGene:3845", ...]}
//   -> {"NCBIGene:3845": {"id": {"identifier": "...", "label": "..."},
//                         "equivalent_identifiers": [{"identifier": "..."}, ...],
//                         "type": ["biolink:Gene", ...]} | null, ...}
class HttpResolver final : public ResolverProvider {
public:
    explicit HttpResolver(std::string baseUrl, int timeoutMs = 10000);

    std::map<std::string, EntityRecord> resolve(std::span<const std::string> batch) const override;

    static std::map<std::string, EntityRecord> decode_response(std::span<const std::string> batch,
                                                               const json& body);

private:
    std::string baseUrl_;
    int timeoutMs_;
};

}  // namespace fedkg
