/* Copyright (c) 2026 The fedkg Authors. All rights reserved.
 *
 * This source code is licensed under Apache 2.0 License.
 */

#include "fedkg/template.hpp"

#include <cctype>

#include "fedkg/error.hpp"

namespace fedkg {

namespace {

class PlaceholderParser {
public:
    PlaceholderParser(std::string_view body, std::size_t offset) : body_(body), offset_(offset) {}

    PlaceholderSegment parse() {
        PlaceholderSegment ph;
        skip_ws();
        auto source = identifier();
        if (source.empty()) {
            fail("expected placeholder source");
        }
        if (source != kQueryInputsSource) {
            fail("unknown placeholder source '" + source + "'");
        }
        ph.source = source;
        skip_ws();
        while (!done()) {
            if (peek() != '|') {
                fail("expected '|' or '}'");
            }
            ++pos_;
            skip_ws();
            ph.filters.push_back(filter());
            skip_ws();
        }
        return ph;
    }

private:
    FilterCall filter() {
        FilterCall call;
        call.name = identifier();
        if (call.name.empty()) {
            fail("expected filter name");
        }
        skip_ws();
        if (done() || peek() != '(') {
            fail("expected '(' after filter name");
        }
        ++pos_;
        skip_ws();
        if (!done() && peek() == ')') {
            ++pos_;
            return call;
        }
        for (;;) {
            skip_ws();
            call.args.push_back(argument());
            skip_ws();
            if (done()) {
                fail("unterminated filter arguments");
            }
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ')') {
                ++pos_;
                return call;
            }
            fail("expected ',' or ')'");
        }
    }

    std::string argument() {
        if (done()) {
            fail("expected filter argument");
        }
        char q = peek();
        if (q == '"' || q == '\'') {
            ++pos_;
            std::string out;
            while (!done() && peek() != q) {
                out.push_back(body_[pos_++]);
            }
            if (done()) {
                fail("unterminated quoted argument");
            }
            ++pos_;
            return out;
        }
        std::string out;
        while (!done() && peek() != ',' && peek() != ')' &&
               !std::isspace(static_cast<unsigned char>(peek()))) {
            out.push_back(body_[pos_++]);
        }
        if (out.empty()) {
            fail("expected filter argument");
        }
        return out;
    }

    std::string identifier() {
        std::string out;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            out.push_back(body_[pos_++]);
        }
        return out;
    }

    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool done() const { return pos_ >= body_.size(); }
    char peek() const { return body_[pos_]; }

    [[noreturn]] void fail(const std::string& reason) const {
        throw TemplateSyntax(offset_ + pos_, reason);
    }

    std::string_view body_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

const FilterSignature* find_filter(std::string_view name) {
    for (const auto& f : kKnownFilters) {
        if (f.name == name) {
            return &f;
        }
    }
    return nullptr;
}

Template Template::compile(std::string_view raw) {
    Template t;
    t.raw_ = std::string(raw);
    std::string literal;
    std::size_t i = 0;
    while (i < raw.size()) {
        char c = raw[i];
        if (c == '}') {
            throw TemplateSyntax(i, "unbalanced '}'");
        }
        if (c != '{') {
            literal.push_back(c);
            ++i;
            continue;
        }
        auto close = raw.find_first_of("{}", i + 1);
        if (close == std::string_view::npos || raw[close] == '{') {
            throw TemplateSyntax(i, "unbalanced '{'");
        }
        if (!literal.empty()) {
            t.segments_.emplace_back(LiteralSegment{std::move(literal)});
            literal.clear();
        }
        auto ph = PlaceholderParser(raw.substr(i + 1, close - i - 1), i + 1).parse();
        ph.raw = std::string(raw.substr(i, close - i + 1));
        t.segments_.emplace_back(std::move(ph));
        i = close + 1;
    }
    if (!literal.empty()) {
        t.segments_.emplace_back(LiteralSegment{std::move(literal)});
    }
    return t;
}

Template Template::literal(std::string text) {
    Template t;
    t.raw_ = text;
    if (!text.empty()) {
        t.segments_.emplace_back(LiteralSegment{std::move(text)});
    }
    return t;
}

bool Template::has_placeholder() const noexcept {
    for (const auto& s : segments_) {
        if (std::holds_alternative<PlaceholderSegment>(s)) {
            return true;
        }
    }
    return false;
}

std::vector<FilterCall> Template::all_filters() const {
    std::vector<FilterCall> out;
    for (const auto& s : segments_) {
        if (const auto* ph = std::get_if<PlaceholderSegment>(&s)) {
            out.insert(out.end(), ph->filters.begin(), ph->filters.end());
        }
    }
    return out;
}

std::string Template::render(
    const std::function<std::string(const PlaceholderSegment&)>& fill) const {
    std::string out;
    for (const auto& s : segments_) {
        if (const auto* lit = std::get_if<LiteralSegment>(&s)) {
            out += lit->text;
        } else {
            out += fill(std::get<PlaceholderSegment>(s));
        }
    }
    return out;
}

std::string Template::restore() const {
    return render([](const PlaceholderSegment& ph) { return ph.raw; });
}

}  // namespace fedkg
