#pragma once

/**
 * @file parse.hpp
 * @brief Recursive-descent parser for scalar literals.
 *
 *   scalar      := factor ( '*' factor )*
 *   factor      := signed_atom ( '^' integer )?
 *   signed_atom := '-'? atom                  ('-' multiplies by u(1/2))
 *   atom        := 'u(' integer '/' positive_integer ')' | identifier | '1' | '(' scalar ')'
 *
 * Whitespace between tokens is ignored. Integer literals other than 1 are
 * rejected as atoms, so every literal denotes a root of unity times a
 * parameter monomial.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "weyl/errors.hpp"
#include "weyl/scalar.hpp"

namespace weyl {

namespace detail {

class ScalarParser {
public:
    ScalarParser(std::string_view text, std::size_t base_offset) : text_(text), base_(base_offset) {}

    Scalar parse_all() {
        Scalar s = parse_scalar();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return s;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, base_ + pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::int64_t parse_unsigned() {
        if (!peek_digit()) fail("expected integer");
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int d = text_[pos_] - '0';
            if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) fail("integer overflow");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    std::int64_t parse_integer() {
        const bool neg = accept('-');
        const std::int64_t v = parse_unsigned();
        return neg ? -v : v;
    }

    Scalar parse_scalar() {
        Scalar s = parse_factor();
        while (accept('*')) s *= parse_factor();
        return s;
    }

    Scalar parse_factor() {
        Scalar s = parse_signed_atom();
        if (accept('^')) s = s.pow(parse_integer());
        return s;
    }

    Scalar parse_signed_atom() {
        if (accept('-')) return Scalar::minus_one() * parse_atom();
        return parse_atom();
    }

    Scalar parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar s = parse_scalar();
            expect(')');
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            const std::int64_t v = parse_unsigned();
            if (v != 1) {
                pos_ = start;
                fail("integer literal " + std::to_string(v) + " is not a scalar (only 1 and -1 are)");
            }
            return Scalar{};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "u" && accept('(')) {
                const std::int64_t p = parse_integer();
                expect('/');
                const std::size_t den_pos = pos_;
                const std::int64_t r = parse_unsigned();
                if (r == 0) {
                    pos_ = den_pos;
                    fail("root-of-unity denominator must be positive");
                }
                expect(')');
                return Scalar::root(p, r);
            }
            return Scalar::parameter(std::move(name));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a scalar literal. `base_offset` shifts the positions reported in
/// parse errors, for literals embedded in larger text.
inline Scalar parse_scalar(std::string_view text, std::size_t base_offset = 0) {
    return detail::ScalarParser(text, base_offset).parse_all();
}

} // namespace weyl
