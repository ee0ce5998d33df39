/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fedkg {

// Base of every error the engine throws. `code()` is stable and machine-readable.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A single validation finding. Violations are data; they are collected, not thrown.
struct Violation {
    std::string code;
    std::string message;
    std::string location;

    bool operator==(const Violation&) const = default;
};

std::string describe(const std::vector<Violation>& violations);

struct DocumentReport {
    std::string apiId;
    std::vector<Violation> violations;
};

class DocumentInvalid : public Error {
public:
    explicit DocumentInvalid(std::vector<DocumentReport> reports);
    const std::vector<DocumentReport>& reports() const noexcept { return reports_; }

private:
    std::vector<DocumentReport> reports_;
};

class TemplateSyntax : public Error {
public:
    TemplateSyntax(std::size_t position, const std::string& reason);
    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

class UnknownType : public Error {
public:
    explicit UnknownType(const std::string& name)
        : Error("UnknownType", "unknown semantic type '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class QuerySyntax : public Error {
public:
    QuerySyntax(const std::string& path, const std::string& reason)
        : Error("QuerySyntax", path + ": " + reason), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

class QueryInvalid : public Error {
public:
    explicit QueryInvalid(std::vector<Violation> violations)
        : Error("QueryInvalid", "invalid query graph: " + describe(violations)),
          violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

class ResolverUnavailable : public Error {
public:
    explicit ResolverUnavailable(const std::string& cause)
        : Error("ResolverUnavailable", "identifier resolver unavailable: " + cause) {}
};

class NoUsableInputs : public Error {
public:
    NoUsableInputs(const std::string& apiId, const std::string& opId, const std::string& ns)
        : Error("NoUsableInputs",
                "no input entity has an identifier in namespace " + ns + " required by " + apiId +
                    "/" + opId) {}
};

class MalformedResponse : public Error {
public:
    explicit MalformedResponse(const std::string& reason)
        : Error("MalformedResponse", "malformed response: " + reason) {}
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& reason) : Error("DomainError", reason) {}
};

class ScenarioInvalid : public Error {
public:
    explicit ScenarioInvalid(std::vector<Violation> violations)
        : Error("ScenarioInvalid", "invalid simulation scenario: " + describe(violations)),
          violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& reason) : Error("ConfigError", reason) {}
};

class FixtureInvalid : public Error {
public:
    explicit FixtureInvalid(const std::string& reason) : Error("FixtureInvalid", reason) {}
};

}  // namespace fedkg
