/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/registry.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fedkg {

namespace {

constexpr std::string_view kOpsKey = "x-bte-kgs-operations";
constexpr std::string_view kMappingKey = "x-bte-response-mapping";
constexpr std::string_view kOpsRefPrefix = "#/components/x-bte-kgs-operations/";
constexpr std::string_view kMappingRefPrefix = "#/components/x-bte-response-mapping/";

class Collector {
public:
    void add(const char* code, std::string message, std::string location) {
        violations.push_back({code, std::move(message), std::move(location)});
    }
    std::vector<Violation> violations;
};

std::string ref_tail(const std::string& ref, std::string_view prefix) {
    if (ref.rfind(prefix, 0) == 0) {
        return ref.substr(prefix.size());
    }
    auto slash = ref.rfind('/');
    return slash == std::string::npos ? ref : ref.substr(slash + 1);
}

std::optional<std::string> string_field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        return std::nullopt;
    }
    return scalar_to_string(obj.at(key));
}

Template compile_or_report(const std::string& raw, Collector& out, const std::string& where) {
    try {
        return Template::compile(raw);
    } catch (const TemplateSyntax& e) {
        out.add(violation::kBadTemplate, e.what(), where);
        return Template::literal(raw);
    }
}

std::vector<TypeBinding> parse_bindings(const json& node, Collector& out, const std::string& where) {
    std::vector<TypeBinding> bindings;
    if (node.is_null()) {
        return bindings;
    }
    if (!node.is_array()) {
        out.add(violation::kInvalidField, "expected a list of {id, semantic}", where);
        return bindings;
    }
    for (std::size_t i = 0; i < node.size(); ++i) {
        const auto& b = node[i];
        TypeBinding tb;
        tb.idNamespace = string_field(b, "id").value_or("");
        tb.semanticType = string_field(b, "semantic").value_or("");
        if (!b.is_object()) {
            out.add(violation::kInvalidField, "binding must be an object",
                    where + "[" + std::to_string(i) + "]");
            continue;
        }
        bindings.push_back(std::move(tb));
    }
    return bindings;
}

std::string form_body(const json& body) {
    std::string raw;
    for (const auto& [k, v] : body.items()) {
        if (!raw.empty()) {
            raw += "&";
        }
        raw += k + "=" + scalar_to_string(v).value_or(v.dump());
    }
    return raw;
}

// Parses one entry of an x-bte-kgs-operations group.
Operation parse_operation(const json& node, const TypeVocabulary& vocab, Collector& out,
                          const std::string& where) {
    (void)vocab;
    Operation op;
    if (!node.is_object()) {
        out.add(violation::kInvalidField, "operation must be an object", where);
        return op;
    }
    op.inputs = parse_bindings(node.value("inputs", json()), out, where + ".inputs");
    op.outputs = parse_bindings(node.value("outputs", json()), out, where + ".outputs");
    op.predicate = string_field(node, "predicate").value_or("");
    op.source = string_field(node, "source").value_or("");

    if (node.contains("supportBatch")) {
        const auto& sb = node.at("supportBatch");
        if (!sb.is_boolean()) {
            out.add(violation::kInvalidField, "supportBatch must be a boolean",
                    where + ".supportBatch");
        } else {
            op.supportBatch = sb.get<bool>();
        }
    }
    if (node.contains("batchSize")) {
        const auto& bs = node.at("batchSize");
        if (!bs.is_number_integer()) {
            out.add(violation::kInvalidBatchSize, "batchSize must be an integer",
                    where + ".batchSize");
        } else {
            op.batchSize = bs.get<int>();
        }
    }
    for (const char* key : {"batchSeparator", "inputSeparator"}) {
        if (auto sep = string_field(node, key)) {
            op.batchSeparator = *sep;
        }
    }

    if (node.contains("parameters")) {
        const auto& params = node.at("parameters");
        if (!params.is_object()) {
            out.add(violation::kInvalidField, "parameters must be a map", where + ".parameters");
        } else {
            for (const auto& [name, value] : params.items()) {
                auto raw = scalar_to_string(value);
                if (!raw) {
                    out.add(violation::kInvalidField, "parameter value must be a scalar",
                            where + ".parameters." + name);
                    continue;
                }
                op.parameters.emplace(name,
                                      compile_or_report(*raw, out, where + ".parameters." + name));
            }
        }
    }
    if (node.contains("requestBody")) {
        const auto& rb = node.at("requestBody");
        const json& body = rb.is_object() && rb.contains("body") ? rb.at("body") : rb;
        std::string raw;
        if (body.is_string()) {
            raw = body.get<std::string>();
        } else if (body.is_object()) {
            raw = form_body(body);
        } else {
            out.add(violation::kInvalidField, "requestBody must be a string or a map",
                    where + ".requestBody");
        }
        op.requestBodyTemplate = compile_or_report(raw, out, where + ".requestBody");
    }

    if (node.contains("response_mapping")) {
        const auto& rm = node.at("response_mapping");
        if (rm.is_object() && rm.contains("$ref") && rm.at("$ref").is_string()) {
            op.responseMappingRef = ref_tail(rm.at("$ref").get<std::string>(), kMappingRefPrefix);
        } else if (rm.is_string()) {
            op.responseMappingRef = ref_tail(rm.get<std::string>(), kMappingRefPrefix);
        } else {
            out.add(violation::kInvalidField, "response_mapping must be a $ref",
                    where + ".response_mapping");
        }
    } else {
        out.add(violation::kMissingField, "response_mapping is required",
                where + ".response_mapping");
    }

    if (auto m = string_field(node, "method")) {
        std::string lower = *m;
        std::transform(lower.begin(), lower.end(), lower.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        op.method = lower == "post" ? HttpMethod::Post : HttpMethod::Get;
    }
    if (auto p = string_field(node, "path")) {
        op.path = *p;
    }
    return op;
}

ResponseMapping parse_mapping(const json& node, const TypeVocabulary& vocab, Collector& out,
                              const std::string& where) {
    ResponseMapping mapping;
    if (!node.is_object()) {
        out.add(violation::kInvalidField, "response mapping must be a map", where);
        return mapping;
    }
    for (const auto& [key, value] : node.items()) {
        auto text = scalar_to_string(value);
        auto path = text ? ResponsePath::parse(*text) : std::nullopt;
        if (!path) {
            out.add(violation::kInvalidPath, "invalid response path", where + "." + key);
            continue;
        }
        if (vocab.idNamespaces.contains(key)) {
            mapping.idPaths.emplace(key, std::move(*path));
        } else {
            mapping.attributePaths.emplace(key, std::move(*path));
        }
    }
    return mapping;
}

// Substitutes `{param}` path segments with the parameter's template text.
void build_path_template(Operation& op, Collector& out, const std::string& where) {
    std::string raw;
    const auto& path = op.path;
    std::size_t i = 0;
    while (i < path.size()) {
        if (path[i] != '{') {
            raw.push_back(path[i++]);
            continue;
        }
        auto close = path.find('}', i);
        if (close == std::string::npos) {
            out.add(violation::kBadTemplate, "unbalanced '{' in path", where + ".path");
            raw.append(path, i, std::string::npos);
            break;
        }
        auto name = path.substr(i + 1, close - i - 1);
        auto it = op.parameters.find(name);
        if (it == op.parameters.end()) {
            out.add(violation::kUnresolvedPathParameter,
                    "path parameter '" + name + "' has no template", where + ".path");
        } else {
            raw += it->second.raw();
        }
        i = close + 1;
    }
    op.pathTemplate = compile_or_report(raw, out, where + ".path");
}

const json* find_extension(const json& doc, std::string_view key) {
    auto k = std::string(key);
    if (doc.contains("components") && doc.at("components").is_object() &&
        doc.at("components").contains(k)) {
        return &doc.at("components").at(k);
    }
    if (doc.contains(k)) {
        return &doc.at(k);
    }
    return nullptr;
}

void check_template_filters(const Template& t, Collector& out, const std::string& where) {
    for (const auto& f : t.all_filters()) {
        const auto* sig = find_filter(f.name);
        if (!sig) {
            out.add(violation::kUnknownFilter, "unknown filter '" + f.name + "'", where);
        } else if (sig->arity != f.args.size()) {
            out.add(violation::kBadFilterArity,
                    "filter '" + f.name + "' takes " + std::to_string(sig->arity) + " argument(s)",
                    where);
        }
    }
}

void check_bindings(const std::vector<TypeBinding>& bindings, const TypeVocabulary& vocab,
                    Collector& out, const std::string& where, const char* emptyCode) {
    if (bindings.empty()) {
        out.add(emptyCode, "at least one binding is required", where);
    }
    std::set<TypeBinding> seen;
    for (std::size_t i = 0; i < bindings.size(); ++i) {
        const auto& b = bindings[i];
        auto loc = where + "[" + std::to_string(i) + "]";
        if (b.semanticType.empty() || b.idNamespace.empty()) {
            out.add(violation::kEmptyBinding, "semantic type and id namespace are required", loc);
            continue;
        }
        if (!vocab.semanticTypes.contains(b.semanticType)) {
            out.add(violation::kUnknownSemanticType, "unknown semantic type '" + b.semanticType + "'",
                    loc);
        }
        if (!vocab.idNamespaces.contains(b.idNamespace)) {
            out.add(violation::kUnknownIdNamespace, "unknown id namespace '" + b.idNamespace + "'",
                    loc);
        }
        if (!seen.insert(b).second) {
            out.add(violation::kDuplicateBinding, "duplicate binding", loc);
        }
    }
}

std::string lower_method(HttpMethod m) { return m == HttpMethod::Post ? "post" : "get"; }

}  // namespace

std::string_view to_string(HttpMethod method) {
    return method == HttpMethod::Post ? "POST" : "GET";
}

TypeVocabulary TypeVocabulary::standard() {
    TypeVocabulary v;
    v.semanticTypes = {"NamedThing",         "BiologicalEntity",  "DiseaseOrPhenotypicFeature",
                       "Disease",            "PhenotypicFeature", "GeneOrGeneProduct",
                       "Gene",               "Protein",           "SequenceVariant",
                       "ChemicalEntity",     "SmallMolecule",     "Drug",
                       "Pathway",            "BiologicalProcess", "MolecularActivity",
                       "CellularComponent",  "AnatomicalEntity",  "Cell",
                       "OrganismTaxon",      "Publication"};
    v.idNamespaces = {"DBSNP", "NCBIGene", "ENSEMBL",  "HGNC",   "UniProtKB",        "MONDO",
                      "DOID",  "MESH",     "OMIM",     "HP",     "UMLS",             "CHEBI",
                      "CHEMBL.COMPOUND",   "DRUGBANK", "PUBCHEM.COMPOUND",           "UNII",
                      "GO",    "REACT",    "UBERON",   "CL",     "NCBITaxon",        "PMID",
                      "CLINVAR", "SYMBOL"};
    return v;
}

TypeVocabulary TypeVocabulary::from_document(const json& doc) {
    TypeVocabulary v;
    auto read = [&](const char* key, std::set<std::string>& into) {
        if (!doc.is_object() || !doc.contains(key)) {
            throw Error("VocabularyInvalid", std::string("vocabulary is missing '") + key + "'");
        }
        const auto& list = doc.at(key);
        if (!list.is_array()) {
            throw Error("VocabularyInvalid", std::string("'") + key + "' must be a list");
        }
        for (const auto& item : list) {
            auto s = scalar_to_string(item);
            if (!s || s->empty()) {
                throw Error("VocabularyInvalid", std::string("'") + key + "' holds a non-string");
            }
            into.insert(*s);
        }
    };
    read("semantic_types", v.semanticTypes);
    read("id_namespaces", v.idNamespaces);
    return v;
}

json TypeVocabulary::to_document() const {
    return json{{"semantic_types", semanticTypes}, {"id_namespaces", idNamespaces}};
}

std::optional<ResponsePath> ResponsePath::parse(std::string_view text) {
    ResponsePath path;
    if (text.empty()) {
        return std::nullopt;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto dot = text.find('.', start);
        auto seg = text.substr(start, dot == std::string_view::npos ? dot : dot - start);
        if (seg.empty()) {
            return std::nullopt;
        }
        for (char c : seg) {
            auto u = static_cast<unsigned char>(c);
            if (!std::isalnum(u) && c != '_' && c != '-' && c != '@' && c != '$') {
                return std::nullopt;
            }
        }
        path.segments.emplace_back(seg);
        if (dot == std::string_view::npos) {
            break;
        }
        start = dot + 1;
    }
    return path;
}

std::string ResponsePath::str() const {
    std::string out;
    for (const auto& s : segments) {
        if (!out.empty()) {
            out += ".";
        }
        out += s;
    }
    return out;
}

bool Operation::is_path_parameter(const std::string& name) const {
    return path.find("{" + name + "}") != std::string::npos;
}

std::vector<std::pair<std::string, const Template*>> Operation::query_parameters() const {
    std::vector<std::pair<std::string, const Template*>> out;
    for (const auto& [name, t] : parameters) {
        if (!is_path_parameter(name)) {
            out.emplace_back(name, &t);
        }
    }
    return out;
}

const Operation* AnnotationDocument::find_operation(std::string_view opId) const {
    for (const auto& op : operations) {
        if (op.opId == opId) {
            return &op;
        }
    }
    return nullptr;
}

Registry::Registry(TypeVocabulary vocab, std::vector<AnnotationDocument> documents)
    : vocab_(std::move(vocab)), documents_(std::move(documents)) {
    std::sort(documents_.begin(), documents_.end(),
              [](const auto& a, const auto& b) { return a.apiId < b.apiId; });
}

std::size_t Registry::operation_count() const noexcept {
    std::size_t n = 0;
    for (const auto& d : documents_) {
        n += d.operations.size();
    }
    return n;
}

const AnnotationDocument* Registry::find_api(std::string_view apiId) const {
    auto it = std::lower_bound(documents_.begin(), documents_.end(), apiId,
                               [](const auto& d, std::string_view id) { return d.apiId < id; });
    return it != documents_.end() && it->apiId == apiId ? &*it : nullptr;
}

const Operation* Registry::find_operation(std::string_view apiId, std::string_view opId) const {
    const auto* doc = find_api(apiId);
    return doc ? doc->find_operation(opId) : nullptr;
}

ParsedDocument parse_document(const json& doc, const TypeVocabulary& vocab,
                              const std::string& fallbackApiId) {
    ParsedDocument result;
    Collector out;
    auto& ad = result.document;
    if (!doc.is_object()) {
        out.add(violation::kInvalidField, "document root must be a map", "$");
        result.violations = std::move(out.violations);
        return result;
    }

    const json info = doc.value("info", json::object());
    ad.apiId = string_field(info, "x-api-id").value_or(fallbackApiId);
    ad.title = string_field(info, "title").value_or("");
    if (doc.contains("servers") && doc.at("servers").is_array() && !doc.at("servers").empty()) {
        ad.serverUrl = string_field(doc.at("servers").at(0), "url").value_or("");
    } else {
        out.add(violation::kMissingField, "servers[0].url is required", "servers");
    }

    const json* opsNode = find_extension(doc, kOpsKey);
    const json* mappingNode = find_extension(doc, kMappingKey);
    json nestedMappings;
    if (opsNode && opsNode->is_object() && opsNode->contains(std::string(kMappingKey))) {
        nestedMappings = opsNode->at(std::string(kMappingKey));
        if (!mappingNode) {
            mappingNode = &nestedMappings;
        }
    }

    // group name -> (path, method) bindings from `paths`.
    std::map<std::string, std::vector<std::pair<std::string, HttpMethod>>> groupEndpoints;
    if (doc.contains("paths") && doc.at("paths").is_object()) {
        for (const auto& [path, item] : doc.at("paths").items()) {
            if (!item.is_object()) {
                continue;
            }
            for (const auto& [methodName, opNode] : item.items()) {
                if (methodName != "get" && methodName != "post") {
                    continue;
                }
                if (!opNode.is_object() || !opNode.contains(std::string(kOpsKey))) {
                    continue;
                }
                auto method = methodName == "post" ? HttpMethod::Post : HttpMethod::Get;
                for (const auto& ref : opNode.at(std::string(kOpsKey))) {
                    auto r = string_field(ref, "$ref");
                    if (!r) {
                        out.add(violation::kInvalidField, "operation reference must be a $ref",
                                "paths." + path + "." + methodName);
                        continue;
                    }
                    groupEndpoints[ref_tail(*r, kOpsRefPrefix)].emplace_back(path, method);
                }
            }
        }
    }

    std::set<std::string> brokenOps;
    if (opsNode && opsNode->is_object()) {
        for (const auto& [group, entries] : opsNode->items()) {
            if (group == kMappingKey) {
                continue;
            }
            json list = entries.is_array() ? entries : json::array({entries});
            auto endpoints = groupEndpoints.find(group);
            for (std::size_t i = 0; i < list.size(); ++i) {
                auto where = std::string(kOpsKey) + "." + group + "[" + std::to_string(i) + "]";
                auto before = out.violations.size();
                auto op = parse_operation(list[i], vocab, out, where);
                bool brokenTemplate = std::any_of(
                    out.violations.begin() + static_cast<std::ptrdiff_t>(before), out.violations.end(),
                    [](const Violation& v) { return v.code == violation::kBadTemplate; });
                op.opId = list.size() == 1 ? group : group + "_" + std::to_string(i);
                std::vector<std::pair<std::string, HttpMethod>> targets;
                if (endpoints != groupEndpoints.end()) {
                    targets = endpoints->second;
                } else if (!op.path.empty()) {
                    targets.emplace_back(op.path, op.method);
                } else {
                    out.add(violation::kMissingField,
                            "operation is not referenced from any path and declares no path", where);
                    targets.emplace_back("", op.method);
                }
                for (std::size_t t = 0; t < targets.size(); ++t) {
                    Operation bound = op;
                    bound.path = targets[t].first;
                    bound.method = targets[t].second;
                    if (targets.size() > 1) {
                        bound.opId += "@" + std::to_string(t);
                    }
                    if (brokenTemplate) {
                        // Already reported; the embedded text would only fail again.
                        brokenOps.insert(bound.opId);
                        bound.pathTemplate = Template::literal(bound.path);
                    } else {
                        build_path_template(bound, out, where);
                    }
                    ad.operations.push_back(std::move(bound));
                }
            }
        }
    } else if (opsNode) {
        out.add(violation::kInvalidField, "x-bte-kgs-operations must be a map", std::string(kOpsKey));
    }

    if (mappingNode) {
        if (!mappingNode->is_object()) {
            out.add(violation::kInvalidField, "x-bte-response-mapping must be a map",
                    std::string(kMappingKey));
        } else {
            for (const auto& [name, node] : mappingNode->items()) {
                ad.responseMappings.emplace(
                    name, parse_mapping(node, vocab, out, std::string(kMappingKey) + "." + name));
            }
        }
    }

    result.violations = std::move(out.violations);
    auto semantic = validate_document(ad, vocab);
    // An unparsable template cannot show whether the placeholder is present.
    std::erase_if(semantic, [&](const Violation& v) {
        return v.code == violation::kNoInputPlaceholder &&
               brokenOps.contains(v.location.substr(std::string("operation ").size()));
    });
    result.violations.insert(result.violations.end(), semantic.begin(), semantic.end());
    return result;
}

std::vector<Violation> validate_document(const AnnotationDocument& doc,
                                         const TypeVocabulary& vocab) {
    Collector out;
    if (doc.apiId.empty()) {
        out.add(violation::kEmptyApiId, "apiId must be non-empty", "info.x-api-id");
    }
    if (doc.serverUrl.rfind("http://", 0) != 0 && doc.serverUrl.rfind("https://", 0) != 0) {
        out.add(violation::kInvalidServerUrl, "server url must be absolute http(s)",
                "servers[0].url");
    }
    if (doc.operations.empty()) {
        out.add(violation::kNoOperations, "document declares no annotated operations",
                std::string(kOpsKey));
    }
    std::set<std::string> opIds;
    for (const auto& op : doc.operations) {
        auto where = "operation " + op.opId;
        if (!opIds.insert(op.opId).second) {
            out.add(violation::kDuplicateOperation, "duplicate operation id", where);
        }
        check_bindings(op.inputs, vocab, out, where + ".inputs", violation::kEmptyInputs);
        check_bindings(op.outputs, vocab, out, where + ".outputs", violation::kEmptyOutputs);
        if (op.predicate.empty()) {
            out.add(violation::kMissingPredicate, "predicate is required", where);
        }
        if (!op.supportBatch && op.batchSize) {
            out.add(violation::kBatchSizeWithoutBatch, "batchSize requires supportBatch", where);
        }
        if (op.batchSize && *op.batchSize <= 0) {
            out.add(violation::kInvalidBatchSize, "batchSize must be positive", where);
        }
        if (!doc.responseMappings.contains(op.responseMappingRef)) {
            out.add(violation::kDanglingMappingRef,
                    "response mapping '" + op.responseMappingRef + "' is not defined", where);
        }
        bool hasInput = op.pathTemplate.has_placeholder() ||
                        (op.requestBodyTemplate && op.requestBodyTemplate->has_placeholder());
        for (const auto& [name, t] : op.parameters) {
            hasInput = hasInput || t.has_placeholder();
            check_template_filters(t, out, where + ".parameters." + name);
        }
        if (op.requestBodyTemplate) {
            check_template_filters(*op.requestBodyTemplate, out, where + ".requestBody");
        }
        if (!hasInput) {
            out.add(violation::kNoInputPlaceholder,
                    "no template references the queryInputs placeholder", where);
        }
    }
    for (const auto& [name, mapping] : doc.responseMappings) {
        for (const auto* paths : {&mapping.idPaths, &mapping.attributePaths}) {
            for (const auto& [key, path] : *paths) {
                if (path.segments.empty()) {
                    out.add(violation::kInvalidPath, "empty response path",
                            std::string(kMappingKey) + "." + name + "." + key);
                }
            }
        }
    }
    return out.violations;
}

Registry parse_registry(const std::vector<SourceDocument>& documents, TypeVocabulary vocab) {
    std::vector<AnnotationDocument> docs;
    std::vector<DocumentReport> failures;
    std::set<std::string> seen;
    for (const auto& src : documents) {
        auto parsed = parse_document(src.content, vocab, src.fallbackApiId);
        if (!parsed.document.apiId.empty() && !seen.insert(parsed.document.apiId).second) {
            parsed.violations.push_back({violation::kDuplicateApiId,
                                         "apiId '" + parsed.document.apiId + "' already registered",
                                         "info.x-api-id"});
        }
        if (!parsed.violations.empty()) {
            failures.push_back({parsed.document.apiId, std::move(parsed.violations)});
            continue;
        }
        docs.push_back(std::move(parsed.document));
    }
    if (!failures.empty()) {
        throw DocumentInvalid(std::move(failures));
    }
    return Registry(std::move(vocab), std::move(docs));
}

Registry parse_registry(const std::vector<json>& documents, TypeVocabulary vocab) {
    std::vector<SourceDocument> sources;
    sources.reserve(documents.size());
    for (const auto& d : documents) {
        sources.push_back({d, {}});
    }
    return parse_registry(sources, std::move(vocab));
}

json serialize_document(const AnnotationDocument& doc) {
    json paths = json::object();
    json ops = json::object();
    json mappings = json::object();
    for (const auto& op : doc.operations) {
        json o;
        auto bindings = [](const std::vector<TypeBinding>& bs) {
            json arr = json::array();
            for (const auto& b : bs) {
                arr.push_back({{"id", b.idNamespace}, {"semantic", b.semanticType}});
            }
            return arr;
        };
        o["inputs"] = bindings(op.inputs);
        o["outputs"] = bindings(op.outputs);
        o["predicate"] = op.predicate;
        o["source"] = op.source;
        o["supportBatch"] = op.supportBatch;
        if (op.batchSize) {
            o["batchSize"] = *op.batchSize;
        }
        if (op.batchSeparator != ",") {
            o["batchSeparator"] = op.batchSeparator;
        }
        json params = json::object();
        for (const auto& [name, t] : op.parameters) {
            params[name] = t.raw();
        }
        o["parameters"] = params;
        if (op.requestBodyTemplate) {
            o["requestBody"] = {{"body", op.requestBodyTemplate->raw()}};
        }
        o["response_mapping"] = {{"$ref", std::string(kMappingRefPrefix) + op.responseMappingRef}};
        ops[op.opId] = json::array({o});
        paths[op.path][lower_method(op.method)][std::string(kOpsKey)].push_back(
            {{"$ref", std::string(kOpsRefPrefix) + op.opId}});
    }
    for (const auto& [name, m] : doc.responseMappings) {
        json obj = json::object();
        for (const auto& [k, p] : m.idPaths) {
            obj[k] = p.str();
        }
        for (const auto& [k, p] : m.attributePaths) {
            obj[k] = p.str();
        }
        mappings[name] = obj;
    }
    return json{{"openapi", "3.0.3"},
                {"info", {{"title", doc.title}, {"x-api-id", doc.apiId}}},
                {"servers", json::array({{{"url", doc.serverUrl}}})},
                {"paths", paths},
                {"components", {{std::string(kOpsKey), ops}, {std::string(kMappingKey), mappings}}}};
}

std::vector<json> serialize_registry(const Registry& registry) {
    std::vector<json> out;
    for (const auto& d : registry.documents()) {
        out.push_back(serialize_document(d));
    }
    return out;
}

std::vector<SourceDocument> read_registry_dir(const std::filesystem::path& dir,
                                              TypeVocabulary* vocabOut) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
        throw Error("RegistryNotFound", "registry directory not found: " + dir.string());
    }
    if (vocabOut) {
        auto vocabPath = dir / kVocabularyFile;
        *vocabOut = fs::exists(vocabPath) ? TypeVocabulary::from_document(load_structured_file(vocabPath))
                                          : TypeVocabulary::standard();
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        auto name = entry.path().filename().string();
        auto ext = entry.path().extension().string();
        if (name == kVocabularyFile || name == kHierarchyFile) {
            continue;
        }
        if (ext == ".yaml" || ext == ".yml" || ext == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<SourceDocument> docs;
    for (const auto& f : files) {
        docs.push_back({load_structured_file(f), f.stem().string()});
    }
    return docs;
}

Registry load_registry_dir(const std::filesystem::path& dir) {
    TypeVocabulary vocab;
    auto docs = read_registry_dir(dir, &vocab);
    return parse_registry(docs, std::move(vocab));
}

}  // namespace fedkg
