/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/structured.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fedkg/error.hpp"

namespace fedkg {

namespace {

json plain_scalar(const std::string& s) {
    if (s.empty() || s == "~" || s == "null" || s == "Null" || s == "NULL") {
        return nullptr;
    }
    if (s == "true" || s == "True" || s == "TRUE") {
        return true;
    }
    if (s == "false" || s == "False" || s == "FALSE") {
        return false;
    }
    {
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc{} && ptr == s.data() + s.size()) {
            return v;
        }
    }
    {
        double d = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), d);
        if (ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(d)) {
            return d;
        }
    }
    return s;
}

json to_json(const YAML::Node& node) {
    switch (node.Type()) {
        case YAML::NodeType::Null:
        case YAML::NodeType::Undefined:
            return nullptr;
        case YAML::NodeType::Scalar:
            // Non-plain (quoted or block) scalars carry the "!" tag.
            if (node.Tag() == "!") {
                return node.Scalar();
            }
            return plain_scalar(node.Scalar());
        case YAML::NodeType::Sequence: {
            json arr = json::array();
            for (const auto& item : node) {
                arr.push_back(to_json(item));
            }
            return arr;
        }
        case YAML::NodeType::Map: {
            json obj = json::object();
            for (const auto& kv : node) {
                obj[kv.first.as<std::string>()] = to_json(kv.second);
            }
            return obj;
        }
    }
    return nullptr;
}

}  // namespace

json parse_yaml(std::string_view text) {
    try {
        return to_json(YAML::Load(std::string(text)));
    } catch (const YAML::Exception& e) {
        throw Error("StructuredParse", std::string("YAML parse error: ") + e.what());
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("FileNotFound", "cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_structured_file(const std::filesystem::path& path) {
    auto text = read_text_file(path);
    auto ext = path.extension().string();
    if (ext == ".json") {
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw Error("StructuredParse", path.string() + ": " + e.what());
        }
    }
    try {
        return parse_yaml(text);
    } catch (const Error& e) {
        throw Error("StructuredParse", path.string() + ": " + e.what());
    }
}

std::optional<std::string> scalar_to_string(const json& value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? std::to_string(value.get<std::uint64_t>())
                                          : std::to_string(value.get<std::int64_t>());
    }
    if (value.is_number_float()) {
        double d = value.get<double>();
        if (!std::isfinite(d)) {
            return std::nullopt;
        }
        char buf[512];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), d, std::chars_format::fixed);
        if (ec != std::errc{}) {
            return std::nullopt;
        }
        return std::string(buf, ptr);
    }
    if (value.is_boolean()) {
        return value.get<bool>() ? "true" : "false";
    }
    return std::nullopt;
}

std::string canonical_dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace fedkg
