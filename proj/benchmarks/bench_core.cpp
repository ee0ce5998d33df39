/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include <benchmark/benchmark.h>
#include <spdlog/spdlog.h>

#include <filesystem>
#include <random>

#include "fedkg/engine.hpp"
#include "fedkg/simnet.hpp"

using namespace fedkg;

namespace {

std::filesystem::path fixture(const std::string& rel) {
    return std::filesystem::path(FEDKG_FIXTURE_DIR) / rel;
}

void BM_Ngd(benchmark::State& state) {
    std::mt19937_64 gen(1);
    std::vector<OccurrenceCounts> counts;
    for (int i = 0; i < 1024; ++i) {
        std::uint64_t n = 1'000'000'000;
        std::uint64_t fx = gen() % (n / 2) + 1;
        std::uint64_t fy = gen() % (n / 2) + 1;
        counts.push_back({fx, fy, gen() % std::min(fx, fy) + 1, n});
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(ngd(counts[i++ & 1023]));
    }
}
BENCHMARK(BM_Ngd);

void BM_ParseRegistry(benchmark::State& state) {
    for (auto _ : state) {
        auto r = load_registry_dir(fixture("registry"));
        benchmark::DoNotOptimize(r.operation_count());
    }
}
BENCHMARK(BM_ParseRegistry);

void BM_PlanFig1(benchmark::State& state) {
    auto registry = load_registry_dir(fixture("registry"));
    auto hierarchy = TypeHierarchy::load(fixture("registry/hierarchy.yaml"));
    auto kg = build_metakg(registry, hierarchy);
    auto qg = parse_query(load_structured_file(fixture("fig1_query.json")));
    for (auto _ : state) {
        auto plan = plan_query(qg, kg, hierarchy);
        benchmark::DoNotOptimize(plan.perEdge.size());
    }
}
BENCHMARK(BM_PlanFig1);

// Chain of `hops` edges with `fanout` records from every entity of one layer to the next.
void BM_AssembleChain(benchmark::State& state) {
    const int hops = static_cast<int>(state.range(0));
    const int fanout = static_cast<int>(state.range(1));
    QueryGraph qg;
    EdgeRecords records;
    for (int i = 0; i <= hops; ++i) {
        QNode n;
        n.qnodeId = "n" + std::to_string(i);
        if (i == 0) {
            n.ids = std::vector<std::string>{"L0:0"};
        }
        qg.nodes[n.qnodeId] = n;
    }
    int width = 1;
    for (int h = 0; h < hops; ++h) {
        QEdge e;
        e.qedgeId = "e" + std::to_string(h);
        e.subject = "n" + std::to_string(h);
        e.object = "n" + std::to_string(h + 1);
        qg.edges[e.qedgeId] = e;
        for (int s = 0; s < width; ++s) {
            for (int f = 0; f < fanout; ++f) {
                RecordEdge r;
                r.subject = EntityRecord::self("L" + std::to_string(h) + ":" + std::to_string(s));
                r.object = EntityRecord::self("L" + std::to_string(h + 1) + ":" + std::to_string(s * fanout + f));
                r.apiId = "a";
                r.opId = "o";
                r.qedgeId = e.qedgeId;
                records[e.qedgeId].push_back(std::move(r));
            }
        }
        width *= fanout;
    }
    for (auto _ : state) {
        auto results = assemble(records, qg);
        benchmark::DoNotOptimize(results.size());
    }
    state.counters["results"] = static_cast<double>(width);
}
BENCHMARK(BM_AssembleChain)->Args({2, 8})->Args({3, 8})->Args({4, 6});

void BM_Fig1EndToEnd(benchmark::State& state) {
    auto clock = std::make_shared<ScaledClock>(0.0);
    auto net = std::make_shared<SimNetwork>(load_scenario_file(fixture("fig1_ngly1.yaml"), clock));
    Engine engine(load_registry_dir(fixture("registry")), TypeHierarchy::load(fixture("registry/hierarchy.yaml")),
                  std::make_shared<FileFixtureResolver>(FileFixtureResolver::load(fixture("registry/identifiers.tsv"))),
                  std::make_shared<FileFixtureCounts>(FileFixtureCounts::load(fixture("registry/cooccurrence.tsv"))),
                  net, ExecutionPolicy{}, clock);
    auto qg = engine.parse(load_structured_file(fixture("fig1_query.json")));
    for (auto _ : state) {
        auto outcome = engine.run(qg);
        benchmark::DoNotOptimize(outcome.results.size());
    }
}
BENCHMARK(BM_Fig1EndToEnd);

}  // namespace

int main(int argc, char** argv) {
    spdlog::set_level(spdlog::level::off);
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) {
        return 1;
    }
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
