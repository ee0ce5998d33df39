/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace fedkg {

using json = nlohmann::json;

// Parses YAML text into the JSON data model. Quoted scalars stay strings; plain
// scalars are typed (null, bool, integer, float) when they parse as such.
json parse_yaml(std::string_view text);

// Loads a `.json`, `.yaml` or `.yml` file. Throws fedkg::Error("StructuredParse") on failure.
json load_structured_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

// Renders a JSON scalar as an identifier value: strings verbatim, integers in
// plain decimal, floats in shortest fixed notation (never an exponent), booleans
// as true/false. Returns nullopt for null, objects and arrays.
std::optional<std::string> scalar_to_string(const json& value);

// Byte-stable serialization used for every document the engine emits.
std::string canonical_dump(const json& doc);

}  // namespace fedkg
