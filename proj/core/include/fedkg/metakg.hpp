/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fedkg/registry.hpp"

namespace fedkg {

// child -> parent forest over semantic types. An empty hierarchy means exact type match.
class TypeHierarchy {
public:
    TypeHierarchy() = default;
    // Throws Error("HierarchyInvalid") on cycles or self-parenting.
    explicit TypeHierarchy(std::map<std::string, std::string> parentOf);

    static TypeHierarchy from_document(const json& doc);
    static TypeHierarchy load(const std::filesystem::path& path);

    const std::map<std::string, std::string>& parent_of() const noexcept { return parentOf_; }
    std::set<std::string> types() const;

    // `type` itself plus everything below it.
    std::set<std::string> descendants(const std::string& type) const;
    std::optional<std::string> parent(const std::string& type) const;
    bool empty() const noexcept { return parentOf_.empty(); }

private:
    std::map<std::string, std::string> parentOf_;
    std::map<std::string, std::vector<std::string>> children_;
};

struct MetaEdge {
    std::string subjectType;
    std::string predicate;
    std::string objectType;
    std::string apiId;
    std::string opId;
    std::string subjectNamespace;
    std::string objectNamespace;

    auto operator<=>(const MetaEdge&) const = default;
};

class MetaKG {
public:
    MetaKG() = default;

    const std::set<std::string>& nodes() const noexcept { return nodes_; }
    const std::vector<MetaEdge>& edges() const noexcept { return edges_; }
    // Types that lookup() accepts as constraints: vocabulary plus hierarchy.
    const std::set<std::string>& known_types() const noexcept { return knownTypes_; }
    const std::vector<std::size_t>& edges_between(const std::string& subjectType,
                                                  const std::string& objectType) const;

private:
    friend MetaKG build_metakg(const Registry&, const TypeHierarchy&);

    std::set<std::string> nodes_;
    std::vector<MetaEdge> edges_;
    std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> index_;
    std::set<std::string> knownTypes_;
};

using TypeSet = std::optional<std::set<std::string>>;

MetaKG build_metakg(const Registry& registry, const TypeHierarchy& hierarchy = {});

// Expands each requested type to its descendants; nullopt stays a wildcard.
TypeSet expand_types(const TypeSet& types, const TypeHierarchy& hierarchy);

bool matches_constraints(const MetaEdge& edge, const TypeSet& expandedSubjects,
                         const TypeSet& predicates, const TypeSet& expandedObjects);

// Throws UnknownType when a type constraint is not in metakg.known_types().
std::vector<MetaEdge> lookup(const MetaKG& metakg, const TypeSet& subjectTypes,
                             const TypeSet& predicates, const TypeSet& objectTypes,
                             const TypeHierarchy& hierarchy = {});

// TRAPI-style meta_knowledge_graph document: `nodes` maps a type to the id prefixes seen
// for it; `edges` lists distinct (subject, predicate, object) triples with provenance.
json export_metakg(const MetaKG& metakg);

}  // namespace fedkg
