/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <memory>
#include <string>

#include "fedkg/engine.hpp"

namespace fedkg {

struct ServiceOptions {
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 picks a free port
    int maxInflightQueries = 16;
    int drainTimeoutMs = 10000;
};

struct ServiceReply {
    int status = 200;
    std::string body;
};

// HTTP front end: POST /v1/query and GET /v1/meta_knowledge_graph. The handlers are
// callable directly, which is what the HTTP routes do.
class Service {
public:
    Service(std::shared_ptr<const Engine> engine, ServiceOptions options);
    ~Service();
    Service(const Service&) = delete;
    Service& operator=(const Service&) = delete;

    // 200 results document, 400 invalid query, 422 unsatisfiable plan, 500 internal error
    // (opaque id in the body and the log), 503 when draining or at the in-flight limit.
    ServiceReply handle_query(const std::string& body) const;
    ServiceReply handle_metakg() const;

    // Binds the listening socket and returns the port. Throws ConfigError.
    int bind();
    // Serves until shutdown(). Calls bind() first if needed.
    void listen();
    // Stops accepting queries, waits for in-flight ones up to the drain timeout, then stops
    // the server. Safe to call from any thread, more than once.
    void shutdown();

    bool draining() const noexcept;
    int inflight() const noexcept;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace fedkg
