/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fedkg/assembly.hpp"

namespace fedkg {

// Document frequencies of two terms, their co-occurrence, and the corpus size.
struct OccurrenceCounts {
    std::uint64_t fx = 0;
    std::uint64_t fy = 0;
    std::uint64_t fxy = 0;
    std::uint64_t n = 1;

    bool valid() const noexcept;
    OccurrenceCounts swapped() const noexcept { return {fy, fx, fxy, n}; }
    bool operator==(const OccurrenceCounts&) const = default;
};

// Normalized Google Distance with natural logarithms:
//   (max(log fx, log fy) - log fxy) / (log N - min(log fx, log fy))
// Returns +infinity when fxy == 0, and when fx == fy == N unless fxy == N too (then 0).
// Throws DomainError when the counts are inconsistent.
double ngd(const OccurrenceCounts& c);

// Symmetric co-occurrence lookup; nullopt when the pair is unknown.
class CountsProvider {
public:
    virtual ~CountsProvider() = default;
    virtual std::optional<OccurrenceCounts> counts(const std::string& x,
                                                   const std::string& y) const = 0;
};

class NoCounts final : public CountsProvider {
public:
    std::optional<OccurrenceCounts> counts(const std::string&, const std::string&) const override {
        return std::nullopt;
    }
};

// TSV: a header line "# N=<corpus size>", then rows x<TAB>y<TAB>f_x<TAB>f_y<TAB>f_xy.
class FileFixtureCounts final : public CountsProvider {
public:
    static FileFixtureCounts load(const std::filesystem::path& path);
    static FileFixtureCounts parse(std::string_view tsv);

    std::optional<OccurrenceCounts> counts(const std::string& x,
                                           const std::string& y) const override;
    std::uint64_t corpus_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return table_.size(); }

private:
    std::uint64_t n_ = 0;
    std::map<std::pair<std::string, std::string>, OccurrenceCounts> table_;
};

struct ScoringOptions {
    enum class EdgeAggregate { Max, Mean };
    enum class ResultAggregate { Mean, Min };

    EdgeAggregate edge = EdgeAggregate::Max;
    ResultAggregate result = ResultAggregate::Mean;
};

// 1 / (1 + ngd) over the record's subject/object canonical ids; 0 when the distance is
// infinite, the pair is unknown, or the provider fails.
double record_score(const RecordEdge& record, const CountsProvider& provider);

// Per edge: max of its record scores. Per result: mean over edges. Zero edges score 1.
double score_result(const ResultGraph& result, const CountsProvider& provider,
                    const ScoringOptions& options = {});

// Stable sort by descending score; ties by binding_key() ascending.
std::vector<ResultGraph> rank(std::vector<ResultGraph> results);

}  // namespace fedkg
