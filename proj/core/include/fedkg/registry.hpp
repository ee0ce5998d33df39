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
#include <string_view>
#include <vector>

#include "fedkg/error.hpp"
#include "fedkg/structured.hpp"
#include "fedkg/template.hpp"

namespace fedkg {

// Allowed semantic types and identifier namespaces.
struct TypeVocabulary {
    std::set<std::string> semanticTypes;
    std::set<std::string> idNamespaces;

    // Minimal built-in stand-in for the biomedical type model.
    static TypeVocabulary standard();
    static TypeVocabulary from_document(const json& doc);
    json to_document() const;

    bool operator==(const TypeVocabulary&) const = default;
};

struct TypeBinding {
    std::string semanticType;
    std::string idNamespace;

    auto operator<=>(const TypeBinding&) const = default;
};

enum class HttpMethod { Get, Post };

std::string_view to_string(HttpMethod method);

// Dot-separated key path into a response document, e.g. "gene.id".
struct ResponsePath {
    std::vector<std::string> segments;

    static std::optional<ResponsePath> parse(std::string_view text);
    std::string str() const;

    bool operator==(const ResponsePath&) const = default;
};

struct ResponseMapping {
    std::map<std::string, ResponsePath> idPaths;         // id namespace -> path
    std::map<std::string, ResponsePath> attributePaths;  // attribute name -> path

    bool operator==(const ResponseMapping&) const = default;
};

struct Operation {
    std::string opId;
    std::vector<TypeBinding> inputs;
    std::vector<TypeBinding> outputs;
    std::string predicate;
    // All declared parameters, including those substituted into the path.
    std::map<std::string, Template> parameters;
    std::optional<Template> requestBodyTemplate;
    bool supportBatch = false;
    std::optional<int> batchSize;
    std::string batchSeparator = ",";
    std::string source;
    std::string responseMappingRef;
    HttpMethod method = HttpMethod::Get;
    std::string path;  // OpenAPI path key, e.g. "/entity/litvar/{variantid}"
    Template pathTemplate;

    bool is_path_parameter(const std::string& name) const;
    // Parameters that are sent in the query string, in name order.
    std::vector<std::pair<std::string, const Template*>> query_parameters() const;

    bool operator==(const Operation&) const = default;
};

struct AnnotationDocument {
    std::string apiId;
    std::string title;
    std::string serverUrl;
    std::vector<Operation> operations;
    std::map<std::string, ResponseMapping> responseMappings;

    const Operation* find_operation(std::string_view opId) const;

    bool operator==(const AnnotationDocument&) const = default;
};

// Immutable after construction; documents sorted by apiId.
class Registry {
public:
    Registry() = default;
    Registry(TypeVocabulary vocab, std::vector<AnnotationDocument> documents);

    const TypeVocabulary& vocabulary() const noexcept { return vocab_; }
    const std::vector<AnnotationDocument>& documents() const noexcept { return documents_; }

    std::size_t api_count() const noexcept { return documents_.size(); }
    std::size_t operation_count() const noexcept;

    const AnnotationDocument* find_api(std::string_view apiId) const;
    const Operation* find_operation(std::string_view apiId, std::string_view opId) const;

private:
    TypeVocabulary vocab_;
    std::vector<AnnotationDocument> documents_;
};

namespace violation {
inline constexpr const char* kMissingField = "MissingField";
inline constexpr const char* kInvalidField = "InvalidField";
inline constexpr const char* kEmptyApiId = "EmptyApiId";
inline constexpr const char* kDuplicateApiId = "DuplicateApiId";
inline constexpr const char* kInvalidServerUrl = "InvalidServerUrl";
inline constexpr const char* kDuplicateOperation = "DuplicateOperation";
inline constexpr const char* kEmptyInputs = "EmptyInputs";
inline constexpr const char* kEmptyOutputs = "EmptyOutputs";
inline constexpr const char* kEmptyBinding = "EmptyBinding";
inline constexpr const char* kDuplicateBinding = "DuplicateBinding";
inline constexpr const char* kUnknownSemanticType = "UnknownSemanticType";
inline constexpr const char* kUnknownIdNamespace = "UnknownIdNamespace";
inline constexpr const char* kMissingPredicate = "MissingPredicate";
inline constexpr const char* kBatchSizeWithoutBatch = "BatchSizeWithoutBatch";
inline constexpr const char* kInvalidBatchSize = "InvalidBatchSize";
inline constexpr const char* kDanglingMappingRef = "DanglingMappingRef";
inline constexpr const char* kNoInputPlaceholder = "NoInputPlaceholder";
inline constexpr const char* kBadTemplate = "BadTemplate";
inline constexpr const char* kUnknownFilter = "UnknownFilter";
inline constexpr const char* kBadFilterArity = "BadFilterArity";
inline constexpr const char* kInvalidPath = "InvalidPath";
inline constexpr const char* kUnresolvedPathParameter = "UnresolvedPathParameter";
inline constexpr const char* kNoOperations = "NoOperations";
}  // namespace violation

struct ParsedDocument {
    AnnotationDocument document;
    std::vector<Violation> violations;  // structural findings plus validate_document()
};

// Reads the OpenAPI-extension document shape (servers, paths, x-bte-kgs-operations,
// x-bte-response-mapping). All structural problems are collected; nothing throws
// except for a non-object root. `fallbackApiId` is used when the document does not
// carry `info.x-api-id`.
ParsedDocument parse_document(const json& doc, const TypeVocabulary& vocab,
                              const std::string& fallbackApiId = {});

std::vector<Violation> validate_document(const AnnotationDocument& doc,
                                         const TypeVocabulary& vocab);

struct SourceDocument {
    json content;
    std::string fallbackApiId;
};

// Throws DocumentInvalid carrying every violation of every failing document.
Registry parse_registry(const std::vector<SourceDocument>& documents,
                        TypeVocabulary vocab = TypeVocabulary::standard());
Registry parse_registry(const std::vector<json>& documents,
                        TypeVocabulary vocab = TypeVocabulary::standard());

json serialize_document(const AnnotationDocument& doc);
std::vector<json> serialize_registry(const Registry& registry);

inline constexpr std::string_view kVocabularyFile = "vocabulary.yaml";
inline constexpr std::string_view kHierarchyFile = "hierarchy.yaml";

// Reads `<dir>/vocabulary.yaml` (standard vocabulary when absent) and every other
// `*.yaml`, `*.yml` or `*.json` file except hierarchy.yaml as one annotation document
// whose fallback apiId is the file stem.
std::vector<SourceDocument> read_registry_dir(const std::filesystem::path& dir,
                                              TypeVocabulary* vocabOut);
Registry load_registry_dir(const std::filesystem::path& dir);

}  // namespace fedkg
