/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/metakg.hpp"

#include <algorithm>
#include <tuple>

namespace fedkg {

TypeHierarchy::TypeHierarchy(std::map<std::string, std::string> parentOf)
    : parentOf_(std::move(parentOf)) {
    for (const auto& [child, parent] : parentOf_) {
        if (child.empty() || parent.empty()) {
            throw Error("HierarchyInvalid", "hierarchy entries must be non-empty");
        }
        // Walk to the root; a revisit means a cycle.
        std::set<std::string> seen{child};
        auto cur = parent;
        for (;;) {
            if (!seen.insert(cur).second) {
                throw Error("HierarchyInvalid", "cycle through type '" + child + "'");
            }
            auto it = parentOf_.find(cur);
            if (it == parentOf_.end()) {
                break;
            }
            cur = it->second;
        }
        children_[parent].push_back(child);
    }
}

TypeHierarchy TypeHierarchy::from_document(const json& doc) {
    std::map<std::string, std::string> parents;
    if (doc.is_null()) {
        return TypeHierarchy{};
    }
    const json& map = doc.is_object() && doc.contains("parents") ? doc.at("parents") : doc;
    if (!map.is_object()) {
        throw Error("HierarchyInvalid", "hierarchy must be a child -> parent map");
    }
    for (const auto& [child, parent] : map.items()) {
        auto p = scalar_to_string(parent);
        if (!p) {
            throw Error("HierarchyInvalid", "parent of '" + child + "' must be a string");
        }
        parents.emplace(child, *p);
    }
    return TypeHierarchy(std::move(parents));
}

TypeHierarchy TypeHierarchy::load(const std::filesystem::path& path) {
    return from_document(load_structured_file(path));
}

std::set<std::string> TypeHierarchy::types() const {
    std::set<std::string> out;
    for (const auto& [c, p] : parentOf_) {
        out.insert(c);
        out.insert(p);
    }
    return out;
}

std::set<std::string> TypeHierarchy::descendants(const std::string& type) const {
    std::set<std::string> out{type};
    std::vector<std::string> stack{type};
    while (!stack.empty()) {
        auto cur = std::move(stack.back());
        stack.pop_back();
        auto it = children_.find(cur);
        if (it == children_.end()) {
            continue;
        }
        for (const auto& c : it->second) {
            if (out.insert(c).second) {
                stack.push_back(c);
            }
        }
    }
    return out;
}

std::optional<std::string> TypeHierarchy::parent(const std::string& type) const {
    auto it = parentOf_.find(type);
    if (it == parentOf_.end()) {
        return std::nullopt;
    }
    return it->second;
}

const std::vector<std::size_t>& MetaKG::edges_between(const std::string& subjectType,
                                                      const std::string& objectType) const {
    static const std::vector<std::size_t> kEmpty;
    auto it = index_.find({subjectType, objectType});
    return it == index_.end() ? kEmpty : it->second;
}

MetaKG build_metakg(const Registry& registry, const TypeHierarchy& hierarchy) {
    MetaKG kg;
    for (const auto& doc : registry.documents()) {
        for (const auto& op : doc.operations) {
            for (const auto& in : op.inputs) {
                for (const auto& out : op.outputs) {
                    kg.edges_.push_back({in.semanticType, op.predicate, out.semanticType, doc.apiId,
                                         op.opId, in.idNamespace, out.idNamespace});
                    kg.nodes_.insert(in.semanticType);
                    kg.nodes_.insert(out.semanticType);
                }
            }
        }
    }
    std::sort(kg.edges_.begin(), kg.edges_.end(), [](const MetaEdge& a, const MetaEdge& b) {
        return std::tie(a.apiId, a.opId, a.subjectType, a.objectType, a.subjectNamespace,
                        a.objectNamespace, a.predicate) <
               std::tie(b.apiId, b.opId, b.subjectType, b.objectType, b.subjectNamespace,
                        b.objectNamespace, b.predicate);
    });
    for (std::size_t i = 0; i < kg.edges_.size(); ++i) {
        kg.index_[{kg.edges_[i].subjectType, kg.edges_[i].objectType}].push_back(i);
    }
    kg.knownTypes_ = registry.vocabulary().semanticTypes;
    for (auto& t : hierarchy.types()) {
        kg.knownTypes_.insert(t);
    }
    kg.knownTypes_.insert(kg.nodes_.begin(), kg.nodes_.end());
    return kg;
}

TypeSet expand_types(const TypeSet& types, const TypeHierarchy& hierarchy) {
    if (!types) {
        return std::nullopt;
    }
    std::set<std::string> out;
    for (const auto& t : *types) {
        auto d = hierarchy.descendants(t);
        out.insert(d.begin(), d.end());
    }
    return out;
}

bool matches_constraints(const MetaEdge& edge, const TypeSet& expandedSubjects,
                         const TypeSet& predicates, const TypeSet& expandedObjects) {
    return (!expandedSubjects || expandedSubjects->contains(edge.subjectType)) &&
           (!predicates || predicates->contains(edge.predicate)) &&
           (!expandedObjects || expandedObjects->contains(edge.objectType));
}

std::vector<MetaEdge> lookup(const MetaKG& metakg, const TypeSet& subjectTypes,
                             const TypeSet& predicates, const TypeSet& objectTypes,
                             const TypeHierarchy& hierarchy) {
    for (const auto* set : {&subjectTypes, &objectTypes}) {
        if (!*set) {
            continue;
        }
        for (const auto& t : **set) {
            if (!metakg.known_types().contains(t)) {
                throw UnknownType(t);
            }
        }
    }
    auto subjects = expand_types(subjectTypes, hierarchy);
    auto objects = expand_types(objectTypes, hierarchy);
    std::vector<MetaEdge> out;
    if (subjects && objects) {
        // Use the (subject, object) index when both sides are bounded.
        std::vector<std::size_t> hits;
        for (const auto& s : *subjects) {
            for (const auto& o : *objects) {
                const auto& idx = metakg.edges_between(s, o);
                hits.insert(hits.end(), idx.begin(), idx.end());
            }
        }
        std::sort(hits.begin(), hits.end());
        for (auto i : hits) {
            if (matches_constraints(metakg.edges()[i], subjects, predicates, objects)) {
                out.push_back(metakg.edges()[i]);
            }
        }
        return out;
    }
    for (const auto& e : metakg.edges()) {
        if (matches_constraints(e, subjects, predicates, objects)) {
            out.push_back(e);
        }
    }
    return out;
}

json export_metakg(const MetaKG& metakg) {
    std::map<std::string, std::set<std::string>> prefixes;
    std::map<std::tuple<std::string, std::string, std::string>, json> triples;
    for (const auto& e : metakg.edges()) {
        prefixes[e.subjectType].insert(e.subjectNamespace);
        prefixes[e.objectType].insert(e.objectNamespace);
        auto& entry = triples[{e.subjectType, e.predicate, e.objectType}];
        if (entry.is_null()) {
            entry = json{{"subject", e.subjectType},
                         {"predicate", e.predicate},
                         {"object", e.objectType},
                         {"provenance", json::array()}};
        }
        json prov = {{"api_id", e.apiId}, {"op_id", e.opId}};
        auto& list = entry["provenance"];
        if (std::find(list.begin(), list.end(), prov) == list.end()) {
            list.push_back(prov);
        }
    }
    json nodes = json::object();
    for (const auto& [type, ns] : prefixes) {
        nodes[type] = {{"id_prefixes", ns}};
    }
    json edges = json::array();
    for (auto& [key, entry] : triples) {
        edges.push_back(std::move(entry));
    }
    return json{{"nodes", nodes}, {"edges", edges}};
}

}  // namespace fedkg
