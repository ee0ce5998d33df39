/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/id_resolution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fedkg/curie.hpp"
#include "fedkg/error.hpp"

namespace fedkg {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

EntityRecord EntityRecord::self(const std::string& curie) {
    return EntityRecord{curie, {curie}, curie, {}};
}

json entity_to_json(const EntityRecord& record) {
    return json{{"id", record.canonicalId},
                {"equivalent_identifiers", record.equivalentIds},
                {"label", record.label},
                {"categories", record.semanticTypes}};
}

std::map<std::string, EntityRecord> resolve(std::span<const std::string> ids,
                                            const ResolverProvider& provider,
                                            std::size_t batchSize) {
    std::vector<std::string> unique(ids.begin(), ids.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    batchSize = std::max<std::size_t>(batchSize, 1);

    std::map<std::string, EntityRecord> out;
    for (std::size_t i = 0; i < unique.size(); i += batchSize) {
        std::span<const std::string> batch(unique.data() + i,
                                           std::min(batchSize, unique.size() - i));
        std::map<std::string, EntityRecord> part;
        try {
            part = provider.resolve(batch);
        } catch (const ResolverUnavailable&) {
            throw;
        } catch (const std::exception& e) {
            throw ResolverUnavailable(e.what());
        }
        for (const auto& id : batch) {
            auto it = part.find(id);
            out.emplace(id, it != part.end() ? std::move(it->second) : EntityRecord::self(id));
        }
    }
    return out;
}

std::map<std::string, EntityRecord> resolve_or_self(std::span<const std::string> ids,
                                                    const ResolverProvider& provider,
                                                    std::size_t batchSize, std::string* failure) {
    try {
        return resolve(ids, provider, batchSize);
    } catch (const ResolverUnavailable& e) {
        if (failure) {
            *failure = e.what();
        }
        std::map<std::string, EntityRecord> out;
        for (const auto& id : ids) {
            out.emplace(id, EntityRecord::self(id));
        }
        return out;
    }
}

std::vector<std::string> aliases_in_namespace(const EntityRecord& record, std::string_view ns) {
    std::vector<std::string> out;
    for (const auto& id : record.equivalentIds) {
        auto c = parse_curie(id);
        if (c && c->prefix == ns) {
            out.push_back(c->value);
        }
    }
    return out;
}

std::string choose_canonical(const std::vector<std::string>& ids,
                             const std::vector<std::string>& namespacePriority) {
    if (ids.empty()) {
        return {};
    }
    auto rank = [&](const std::string& id) {
        auto prefix = curie_prefix(id);
        auto it = std::find(namespacePriority.begin(), namespacePriority.end(), prefix);
        return static_cast<std::size_t>(it - namespacePriority.begin());
    };
    return *std::min_element(ids.begin(), ids.end(), [&](const auto& a, const auto& b) {
        auto ra = rank(a);
        auto rb = rank(b);
        return ra != rb ? ra < rb : a < b;
    });
}

std::vector<std::string> default_namespace_priority() {
    return {"MONDO", "DOID",  "OMIM",  "MESH",  "HP",   "NCBIGene", "ENSEMBL", "HGNC", "UniProtKB",
            "CHEBI", "CHEMBL.COMPOUND", "DRUGBANK", "PUBCHEM.COMPOUND", "DBSNP"};
}

std::map<std::string, EntityRecord> IdentityResolver::resolve(
    std::span<const std::string> batch) const {
    std::map<std::string, EntityRecord> out;
    for (const auto& id : batch) {
        out.emplace(id, EntityRecord::self(id));
    }
    return out;
}

FileFixtureResolver FileFixtureResolver::load(const std::filesystem::path& path) {
    try {
        return parse(read_text_file(path));
    } catch (const FixtureInvalid& e) {
        throw FixtureInvalid(path.string() + ": " + e.what());
    }
}

FileFixtureResolver FileFixtureResolver::parse(std::string_view tsv,
                                               std::vector<std::string> namespacePriority) {
    struct Row {
        std::string curie;
        std::string label;
        std::vector<std::string> types;
    };
    std::map<std::string, std::vector<Row>> groups;
    std::map<std::string, std::string> groupOf;
    std::vector<std::string> priority = std::move(namespacePriority);

    std::istringstream in{std::string(tsv)};
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        if (line.front() == '#') {
            auto body = trim(std::string_view(line).substr(1));
            if (body.rfind("priority:", 0) == 0) {
                priority.clear();
                for (auto& ns : split(body.substr(9), ',')) {
                    if (auto t = trim(ns); !t.empty()) {
                        priority.push_back(t);
                    }
                }
            }
            continue;
        }
        auto cols = split(line, '\t');
        if (cols.size() < 2) {
            throw FixtureInvalid("line " + std::to_string(lineNo) + ": expected at least 2 columns");
        }
        Row row;
        auto group = trim(cols[0]);
        row.curie = trim(cols[1]);
        if (group.empty() || !is_curie(row.curie)) {
            throw FixtureInvalid("line " + std::to_string(lineNo) + ": bad group id or CURIE");
        }
        row.label = cols.size() > 2 ? trim(cols[2]) : "";
        if (cols.size() > 3) {
            for (auto& t : split(cols[3], ',')) {
                if (auto tt = trim(t); !tt.empty()) {
                    row.types.push_back(tt);
                }
            }
        }
        auto [it, inserted] = groupOf.emplace(row.curie, group);
        if (!inserted && it->second != group) {
            // A CURIE in two groups would make resolution asymmetric.
            throw FixtureInvalid("line " + std::to_string(lineNo) + ": " + row.curie +
                                 " appears in groups " + it->second + " and " + group);
        }
        if (!inserted) {
            continue;
        }
        groups[group].push_back(std::move(row));
    }
    if (priority.empty()) {
        priority = default_namespace_priority();
    }

    FileFixtureResolver r;
    r.priority_ = priority;
    for (auto& [group, rows] : groups) {
        EntityRecord rec;
        for (const auto& row : rows) {
            rec.equivalentIds.push_back(row.curie);
            for (const auto& t : row.types) {
                if (std::find(rec.semanticTypes.begin(), rec.semanticTypes.end(), t) ==
                    rec.semanticTypes.end()) {
                    rec.semanticTypes.push_back(t);
                }
            }
        }
        rec.canonicalId = choose_canonical(rec.equivalentIds, priority);
        for (const auto& row : rows) {
            if (row.curie == rec.canonicalId && !row.label.empty()) {
                rec.label = row.label;
            }
        }
        if (rec.label.empty()) {
            for (const auto& row : rows) {
                if (!row.label.empty()) {
                    rec.label = row.label;
                    break;
                }
            }
        }
        if (rec.label.empty()) {
            rec.label = rec.canonicalId;
        }
        auto index = r.groups_.size();
        for (const auto& id : rec.equivalentIds) {
            r.byCurie_.emplace(id, index);
        }
        r.groups_.push_back(std::move(rec));
    }
    return r;
}

std::map<std::string, EntityRecord> FileFixtureResolver::resolve(
    std::span<const std::string> batch) const {
    std::map<std::string, EntityRecord> out;
    for (const auto& id : batch) {
        auto it = byCurie_.find(id);
        out.emplace(id, it == byCurie_.end() ? EntityRecord::self(id) : groups_[it->second]);
    }
    return out;
}

std::map<std::string, EntityRecord> CachingResolver::resolve(
    std::span<const std::string> batch) const {
    std::map<std::string, EntityRecord> out;
    std::vector<std::string> missing;
    {
        std::lock_guard lock(mu_);
        for (const auto& id : batch) {
            auto it = cache_.find(id);
            if (it != cache_.end()) {
                out.emplace(id, it->second);
            } else {
                missing.push_back(id);
            }
        }
    }
    if (missing.empty()) {
        return out;
    }
    auto fresh = inner_->resolve(missing);
    std::lock_guard lock(mu_);
    for (const auto& id : missing) {
        auto it = fresh.find(id);
        EntityRecord rec = it != fresh.end() ? it->second : EntityRecord::self(id);
        // First writer wins so every reader of a key sees the same record.
        auto [pos, inserted] = cache_.emplace(id, std::move(rec));
        out.emplace(id, pos->second);
    }
    return out;
}

}  // namespace fedkg
