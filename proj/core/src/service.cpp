/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/service.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <mutex>
#include <random>
#include <thread>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "fedkg/error.hpp"

namespace fedkg {

namespace {

constexpr const char* kJson = "application/json";

std::string incident_id() {
    static std::atomic<std::uint64_t> counter{0};
    static const std::uint64_t salt = std::random_device{}();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%08llx-%04llx",
                  static_cast<unsigned long long>(salt & 0xffffffffULL),
                  static_cast<unsigned long long>(counter.fetch_add(1) & 0xffffULL));
    return buf;
}

ServiceReply reply(int status, const json& doc) { return {status, canonical_dump(doc)}; }

}  // namespace

struct Service::Impl {
    std::shared_ptr<const Engine> engine;
    ServiceOptions options;
    httplib::Server server;
    std::atomic<bool> draining{false};
    std::atomic<bool> stopped{false};
    mutable std::atomic<int> inflight{0};
    mutable std::mutex mu;
    mutable std::condition_variable idle;
    int port = -1;

    // Counts a query as in flight for its lifetime; empty when it must be refused.
    struct Ticket {
        const Impl* impl = nullptr;
        ~Ticket() {
            if (impl) {
                std::lock_guard lock(impl->mu);
                impl->inflight.fetch_sub(1);
                impl->idle.notify_all();
            }
        }
    };

    bool admit(Ticket& t) const {
        std::lock_guard lock(mu);
        if (draining.load() || inflight.load() >= options.maxInflightQueries) {
            return false;
        }
        inflight.fetch_add(1);
        t.impl = this;
        return true;
    }
};

Service::Service(std::shared_ptr<const Engine> engine, ServiceOptions options)
    : impl_(std::make_unique<Impl>()) {
    if (!engine) {
        throw ConfigError("service needs an engine");
    }
    if (options.maxInflightQueries <= 0) {
        throw ConfigError("max_inflight_queries must be positive");
    }
    impl_->engine = std::move(engine);
    impl_->options = std::move(options);

    auto& server = impl_->server;
    server.Post("/v1/query", [this](const httplib::Request& req, httplib::Response& res) {
        auto r = handle_query(req.body);
        res.status = r.status;
        res.set_content(r.body, kJson);
    });
    server.Get("/v1/meta_knowledge_graph", [this](const httplib::Request&, httplib::Response& res) {
        auto r = handle_metakg();
        res.status = r.status;
        res.set_content(r.body, kJson);
    });
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) {
            res.set_content(canonical_dump(error_document(
                                "NotFound", "status " + std::to_string(res.status))),
                            kJson);
        }
    });
}

Service::~Service() {
    if (impl_ && impl_->server.is_running()) {
        impl_->server.stop();
    }
}

ServiceReply Service::handle_query(const std::string& body) const {
    Impl::Ticket ticket;
    if (!impl_->admit(ticket)) {
        return reply(503, error_document("Unavailable", impl_->draining.load()
                                                            ? "service is shutting down"
                                                            : "too many queries in flight"));
    }
    const auto& engine = *impl_->engine;
    try {
        json doc;
        try {
            doc = json::parse(body);
        } catch (const json::parse_error& e) {
            return reply(400, error_document("QuerySyntax", std::string("body is not JSON: ") +
                                                                e.what()));
        }
        auto qg = engine.parse(doc);
        auto plan = engine.plan(qg);
        if (!plan.satisfiable()) {
            auto err = error_document("Unsatisfiable", "no operation can answer some query edges");
            err["plan"] = plan_to_json(plan);
            return reply(422, err);
        }
        return reply(200, engine.run(qg, plan).document());
    } catch (const QuerySyntax& e) {
        return reply(400, error_document(e));
    } catch (const QueryInvalid& e) {
        return reply(400, error_document(e));
    } catch (const UnknownType& e) {
        return reply(400, error_document(e));
    } catch (const std::exception& e) {
        auto id = incident_id();
        spdlog::error("query failed [{}]: {}", id, e.what());
        return reply(500, error_document("Internal", "internal error; incident " + id));
    }
}

ServiceReply Service::handle_metakg() const {
    try {
        return reply(200, impl_->engine->metakg_document());
    } catch (const std::exception& e) {
        auto id = incident_id();
        spdlog::error("meta_knowledge_graph failed [{}]: {}", id, e.what());
        return reply(500, error_document("Internal", "internal error; incident " + id));
    }
}

int Service::bind() {
    if (impl_->port >= 0) {
        return impl_->port;
    }
    const auto& o = impl_->options;
    int port = o.port == 0 ? impl_->server.bind_to_any_port(o.host)
                           : (impl_->server.bind_to_port(o.host, o.port) ? o.port : -1);
    if (port < 0) {
        throw ConfigError("cannot listen on " + o.host + ":" + std::to_string(o.port));
    }
    impl_->port = port;
    return port;
}

void Service::listen() {
    bind();
    if (impl_->stopped.load()) {
        return;
    }
    spdlog::info("listening on {}:{}", impl_->options.host, impl_->port);
    impl_->server.listen_after_bind();
}

void Service::shutdown() {
    if (impl_->stopped.exchange(true)) {
        return;
    }
    {
        std::unique_lock lock(impl_->mu);
        impl_->draining.store(true);
        auto deadline = std::chrono::milliseconds(impl_->options.drainTimeoutMs);
        if (!impl_->idle.wait_for(lock, deadline, [&] { return impl_->inflight.load() == 0; })) {
            spdlog::warn("drain timeout with {} queries still in flight", impl_->inflight.load());
        }
    }
    impl_->server.stop();
}

bool Service::draining() const noexcept { return impl_->draining.load(); }

int Service::inflight() const noexcept { return impl_->inflight.load(); }

}  // namespace fedkg
