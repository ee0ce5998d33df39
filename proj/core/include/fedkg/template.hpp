/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fedkg {

struct FilterCall {
    std::string name;
    std::vector<std::string> args;

    bool operator==(const FilterCall&) const = default;
};

struct LiteralSegment {
    std::string text;

    bool operator==(const LiteralSegment&) const = default;
};

struct PlaceholderSegment {
    std::string source;  // always "queryInputs"
    std::vector<FilterCall> filters;
    std::string raw;  // original text including the braces

    bool operator==(const PlaceholderSegment&) const = default;
};

using TemplateSegment = std::variant<LiteralSegment, PlaceholderSegment>;

// A request template: literal text interleaved with `{ queryInputs | filter(args) ... }`
// placeholders. Literal text is kept verbatim, including percent escapes such as "%23".
class Template {
public:
    Template() = default;

    static Template compile(std::string_view raw);
    static Template literal(std::string text);

    const std::vector<TemplateSegment>& segments() const noexcept { return segments_; }
    const std::string& raw() const noexcept { return raw_; }
    bool has_placeholder() const noexcept;
    std::vector<FilterCall> all_filters() const;

    // Literal segments are emitted verbatim; each placeholder is replaced by `fill(placeholder)`.
    std::string render(const std::function<std::string(const PlaceholderSegment&)>& fill) const;

    // Reproduces the source text exactly.
    std::string restore() const;

    bool operator==(const Template& other) const { return segments_ == other.segments_; }

private:
    std::vector<TemplateSegment> segments_;
    std::string raw_;
};

inline Template compile_template(std::string_view raw) { return Template::compile(raw); }

inline constexpr std::string_view kQueryInputsSource = "queryInputs";

struct FilterSignature {
    std::string_view name;
    std::size_t arity;
};

inline constexpr FilterSignature kKnownFilters[] = {
    {"rmPrefix", 0},
    {"wrapPrefix", 1},
};

const FilterSignature* find_filter(std::string_view name);

}  // namespace fedkg
