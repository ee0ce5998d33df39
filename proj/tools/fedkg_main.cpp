/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

// fedkg command line: query, serve, validate-registry, export-metakg.

#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "fedkg/engine.hpp"
#include "fedkg/error.hpp"
#include "fedkg/service.hpp"

namespace {

using fedkg::json;

enum Exit : int { kOk = 0, kInternal = 1, kInvalid = 2, kUnsatisfiable = 3 };

// Flag values only enter the top config layer when given on the command line.
struct Flags {
    std::string config;
    fedkg::ConfigLayer layer;
    bool allowLive = false;

    void add_engine(CLI::App* cmd, bool withTransport) {
        cmd->add_option("--config", config, "YAML or JSON config file");
        add(cmd, "--registry", "registry", "Directory of annotation documents");
        add(cmd, "--hierarchy", "hierarchy", "Semantic type hierarchy file");
        if (!withTransport) {
            return;
        }
        add(cmd, "--resolver", "resolver", "none | fixture:<tsv> | http:<url>");
        add(cmd, "--counts", "counts", "none | fixture:<tsv>");
        add(cmd, "--transport", "transport", "simnet:<scenario> | live");
        add(cmd, "--max-concurrency", "max_concurrency", "Parallel sub-queries");
        add(cmd, "--timeout-ms", "timeout_ms", "Per-attempt timeout");
        add(cmd, "--max-retries", "max_retries", "Retries after a failed attempt");
        add(cmd, "--retry-backoff-ms", "retry_backoff_ms", "Pause between attempts");
        add(cmd, "--sim-time-scale", "sim_time_scale", "Wall time per simulated ms (0 = instant)");
        cmd->add_flag("--allow-live", allowLive, "Permit the live network transport");
    }

    void add(CLI::App* cmd, const std::string& flag, const std::string& key,
             const std::string& help) {
        cmd->add_option_function<std::string>(
            flag, [this, key](const std::string& v) { layer[key] = v; }, help);
    }

    fedkg::EngineConfig build() const {
        std::vector<fedkg::ConfigLayer> layers;
        if (!config.empty()) {
            layers.push_back(fedkg::config_layer_from_file(config));
        }
        layers.push_back(fedkg::config_layer_from_env());
        auto top = layer;
        if (allowLive) {
            top["allow_live"] = "true";
        }
        layers.push_back(std::move(top));
        return fedkg::build_config(layers);
    }
};

int fail(int code, const json& doc) {
    std::cerr << fedkg::canonical_dump(doc);
    return code;
}

int fail(int code, const std::exception& e) { return fail(code, fedkg::error_document(e)); }

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw fedkg::ConfigError("cannot write " + path);
    }
}

json read_query(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            throw fedkg::ConfigError("cannot read query file " + path);
        }
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw fedkg::QuerySyntax("<input>", std::string("not JSON: ") + e.what());
    }
}

// Any fedkg::Error except an internal one means the user gave us something unusable.
template <typename F>
int guarded(F&& body) {
    try {
        return body();
    } catch (const fedkg::Error& e) {
        return fail(kInvalid, e);
    } catch (const std::exception& e) {
        return fail(kInternal, fedkg::error_document("Internal", e.what()));
    }
}

int run_query(const Flags& flags, const std::string& input, const std::string& output,
              bool explain, bool strict) {
    return guarded([&] {
        auto config = flags.build();
        if (!explain && !config.transport) {
            throw fedkg::ConfigError("--transport is required unless --explain is given");
        }
        auto engine = fedkg::Engine::from_config(config);
        auto qg = engine.parse(read_query(input));
        auto plan = engine.plan(qg);
        if (strict && !plan.satisfiable()) {
            auto err = fedkg::error_document("Unsatisfiable",
                                             "no operation can answer some query edges");
            err["plan"] = fedkg::plan_to_json(plan);
            if (explain) {
                write_output(output, fedkg::canonical_dump(fedkg::plan_to_json(plan)));
            }
            return fail(kUnsatisfiable, err);
        }
        if (explain) {
            write_output(output, fedkg::canonical_dump(fedkg::plan_to_json(plan)));
            return int(kOk);
        }
        write_output(output, fedkg::canonical_dump(engine.run(qg, plan).document()));
        return int(kOk);
    });
}

int run_serve(const Flags& flags, const std::string& host, std::optional<int> port,
              std::optional<int> maxInflight, std::optional<int> drainMs) {
    // Signals are taken synchronously by a dedicated thread; block them everywhere else.
    sigset_t signals;
    sigemptyset(&signals);
    sigaddset(&signals, SIGINT);
    sigaddset(&signals, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &signals, nullptr);

    return guarded([&] {
        auto top = flags;
        if (!host.empty()) {
            top.layer["host"] = host;
        }
        if (port) {
            top.layer["port"] = std::to_string(*port);
        }
        if (maxInflight) {
            top.layer["max_inflight_queries"] = std::to_string(*maxInflight);
        }
        if (drainMs) {
            top.layer["drain_timeout_ms"] = std::to_string(*drainMs);
        }
        auto config = top.build();
        if (!config.transport) {
            throw fedkg::ConfigError("--transport is required for serve");
        }
        auto engine = std::make_shared<const fedkg::Engine>(fedkg::Engine::from_config(config));
        fedkg::Service service(engine, {config.host, config.port, config.maxInflightQueries,
                                        config.drainTimeoutMs});
        int bound = service.bind();
        std::cout << "listening on " << config.host << ":" << bound << std::endl;

        std::jthread waiter([&](std::stop_token) {
            int sig = 0;
            sigwait(&signals, &sig);
            if (sig != 0) {
                spdlog::info("signal {} received; draining", sig);
            }
            service.shutdown();
        });
        service.listen();
        if (!service.draining()) {
            // Listener ended on its own; release the signal thread.
            pthread_kill(waiter.native_handle(), SIGTERM);
        }
        return int(kOk);
    });
}

int run_validate(const Flags& flags) {
    return guarded([&] {
        auto config = flags.build();
        if (config.registryDir.empty()) {
            throw fedkg::ConfigError("--registry is required");
        }
        try {
            auto registry = fedkg::load_registry_dir(config.registryDir);
            json ok = {{"valid", true},
                       {"apis", registry.api_count()},
                       {"operations", registry.operation_count()}};
            std::cout << fedkg::canonical_dump(ok);
            return int(kOk);
        } catch (const fedkg::DocumentInvalid& e) {
            auto doc = fedkg::error_document(e);
            doc["valid"] = false;
            std::cout << fedkg::canonical_dump(doc);
            return int(kInvalid);
        }
    });
}

int run_export(const Flags& flags, const std::string& output) {
    return guarded([&] {
        auto config = flags.build();
        if (config.registryDir.empty()) {
            throw fedkg::ConfigError("--registry is required");
        }
        auto registry = fedkg::load_registry_dir(config.registryDir);
        fedkg::TypeHierarchy hierarchy;
        if (config.hierarchyFile) {
            hierarchy = fedkg::TypeHierarchy::load(*config.hierarchyFile);
        }
        auto metakg = fedkg::build_metakg(registry, hierarchy);
        write_output(output, fedkg::canonical_dump(fedkg::export_metakg(metakg)));
        return int(kOk);
    });
}

}  // namespace

int main(int argc, char** argv) {
    spdlog::set_default_logger(spdlog::stderr_color_mt("fedkg"));
    spdlog::set_level(spdlog::level::info);

    CLI::App app{"Federated knowledge-graph queries over annotated web APIs"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Debug logging");

    Flags queryFlags;
    std::string input, output;
    bool explain = false, strict = false;
    auto* query = app.add_subcommand("query", "Answer one query graph");
    queryFlags.add_engine(query, true);
    query->add_option("--input", input, "Query JSON file ('-' for stdin)");
    query->add_option("--output", output, "Write results here instead of stdout");
    query->add_flag("--explain", explain, "Print the plan without calling any API");
    query->add_flag("--strict", strict, "Exit 3 when some query edge cannot be answered");

    Flags serveFlags;
    std::string host;
    std::optional<int> port, maxInflight, drainMs;
    auto* serve = app.add_subcommand("serve", "Run the HTTP service");
    serveFlags.add_engine(serve, true);
    serve->add_option("--host", host, "Listen address");
    serve->add_option("--port", port, "Listen port (0 = any free port)");
    serve->add_option("--max-inflight-queries", maxInflight, "Concurrent query limit");
    serve->add_option("--drain-timeout-ms", drainMs, "Grace period for in-flight queries");

    Flags validateFlags;
    auto* validate = app.add_subcommand("validate-registry", "Check every annotation document");
    validateFlags.add_engine(validate, false);

    Flags exportFlags;
    std::string exportOutput;
    auto* exportCmd = app.add_subcommand("export-metakg", "Print the meta knowledge graph");
    exportFlags.add_engine(exportCmd, false);
    exportCmd->add_option("--output", exportOutput, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(kInvalid, fedkg::error_document("Usage", e.what()));
    }
    if (verbose) {
        spdlog::set_level(spdlog::level::debug);
    }

    if (query->parsed()) {
        return run_query(queryFlags, input, output, explain, strict);
    }
    if (serve->parsed()) {
        return run_serve(serveFlags, host, port, maxInflight, drainMs);
    }
    if (validate->parsed()) {
        return run_validate(validateFlags);
    }
    return run_export(exportFlags, exportOutput);
}
