/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/scoring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "fedkg/error.hpp"

namespace fedkg {

namespace {

std::uint64_t parse_count(std::string_view s, std::size_t lineNo) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw FixtureInvalid("line " + std::to_string(lineNo) + ": bad count '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

bool OccurrenceCounts::valid() const noexcept {
    return n >= 1 && fx <= n && fy <= n && fxy <= std::min(fx, fy);
}

double ngd(const OccurrenceCounts& c) {
    if (!c.valid()) {
        throw DomainError("occurrence counts violate 0 <= f_xy <= min(f_x, f_y), f_x, f_y <= N, N >= 1");
    }
    constexpr double kInf = std::numeric_limits<double>::infinity();
    if (c.fxy == 0) {
        return kInf;
    }
    if (std::min(c.fx, c.fy) == c.n) {
        return c.fxy == c.n ? 0.0 : kInf;
    }
    const double lx = std::log(static_cast<double>(c.fx));
    const double ly = std::log(static_cast<double>(c.fy));
    const double lxy = std::log(static_cast<double>(c.fxy));
    const double ln = std::log(static_cast<double>(c.n));
    return (std::max(lx, ly) - lxy) / (ln - std::min(lx, ly));
}

FileFixtureCounts FileFixtureCounts::load(const std::filesystem::path& path) {
    try {
        return parse(read_text_file(path));
    } catch (const FixtureInvalid& e) {
        throw FixtureInvalid(path.string() + ": " + e.what());
    }
}

FileFixtureCounts FileFixtureCounts::parse(std::string_view tsv) {
    FileFixtureCounts out;
    std::istringstream in{std::string(tsv)};
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (line.empty() || line == "\r") {
            continue;
        }
        if (line.front() == '#') {
            auto pos = line.find("N=");
            if (pos != std::string::npos) {
                out.n_ = parse_count(std::string_view(line).substr(pos + 2), lineNo);
            }
            continue;
        }
        std::vector<std::string> cols;
        std::size_t start = 0;
        for (;;) {
            auto tab = line.find('\t', start);
            cols.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
            if (tab == std::string::npos) {
                break;
            }
            start = tab + 1;
        }
        if (cols.size() != 5) {
            throw FixtureInvalid("line " + std::to_string(lineNo) + ": expected 5 columns");
        }
        if (out.n_ == 0) {
            throw FixtureInvalid("missing '# N=<corpus size>' header before data");
        }
        OccurrenceCounts c{parse_count(cols[2], lineNo), parse_count(cols[3], lineNo),
                           parse_count(cols[4], lineNo), out.n_};
        if (!c.valid()) {
            throw FixtureInvalid("line " + std::to_string(lineNo) + ": inconsistent counts");
        }
        out.table_[{cols[0], cols[1]}] = c;
    }
    return out;
}

std::optional<OccurrenceCounts> FileFixtureCounts::counts(const std::string& x,
                                                          const std::string& y) const {
    if (auto it = table_.find({x, y}); it != table_.end()) {
        return it->second;
    }
    if (auto it = table_.find({y, x}); it != table_.end()) {
        return it->second.swapped();
    }
    return std::nullopt;
}

double record_score(const RecordEdge& record, const CountsProvider& provider) {
    try {
        auto c = provider.counts(record.subject.canonicalId, record.object.canonicalId);
        if (!c) {
            return 0.0;
        }
        double d = ngd(*c);
        return std::isinf(d) ? 0.0 : 1.0 / (1.0 + d);
    } catch (const std::exception&) {
        return 0.0;
    }
}

double score_result(const ResultGraph& result, const CountsProvider& provider,
                    const ScoringOptions& options) {
    if (result.edgeBindings.empty()) {
        return 1.0;
    }
    std::vector<double> edgeScores;
    for (const auto& [qedge, records] : result.edgeBindings) {
        double agg = 0.0;
        for (const auto& r : records) {
            double s = record_score(r, provider);
            agg = options.edge == ScoringOptions::EdgeAggregate::Max ? std::max(agg, s) : agg + s;
        }
        if (options.edge == ScoringOptions::EdgeAggregate::Mean && !records.empty()) {
            agg /= static_cast<double>(records.size());
        }
        edgeScores.push_back(agg);
    }
    if (options.result == ScoringOptions::ResultAggregate::Min) {
        return *std::min_element(edgeScores.begin(), edgeScores.end());
    }
    double sum = 0.0;
    for (double s : edgeScores) {
        sum += s;
    }
    return sum / static_cast<double>(edgeScores.size());
}

std::vector<ResultGraph> rank(std::vector<ResultGraph> results) {
    std::stable_sort(results.begin(), results.end(), [](const ResultGraph& a, const ResultGraph& b) {
        if (a.score != b.score) {
            return a.score > b.score;
        }
        return a.binding_key() < b.binding_key();
    });
    return results;
}

}  // namespace fedkg
