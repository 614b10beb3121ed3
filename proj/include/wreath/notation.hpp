#pragma once

#include "cycles.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Text grammar
//   word   := token (SP token)*
//   token  := INT ('^' INT)?          exponent in [1..ell-1] when present
//   cycles := ('(' token (SP token)* ')')+
// Commas are accepted as separators inside cycles.  The empty string is the
// unique element of size 0.

namespace wreath {

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::size_t offset() const noexcept { return pos_; }
    bool done() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return done() ? '\0' : text_[pos_]; }
    void advance() noexcept { ++pos_; }

    void skip_space(bool allow_commas) {
        while (!done() && (std::isspace(static_cast<unsigned char>(peek())) || (allow_commas && peek() == ',')))
            ++pos_;
    }

    int integer() {
        const std::size_t start = pos_;
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1'000'000) throw ParseError(start, "integer too large");
            ++pos_;
        }
        if (pos_ == start) throw ParseError(start, "expected an integer");
        return static_cast<int>(v);
    }

    ColoredSymbol token(int ell) {
        const std::size_t start = pos_;
        ColoredSymbol s{integer(), 0};
        if (s.value < 1) throw ParseError(start, "values are 1-based");
        if (peek() == '^') {
            if (ell == 1) throw ParseError(pos_, "colored token with a single color");
            advance();
            const std::size_t at = pos_;
            s.color = integer();
            if (s.color < 1 || s.color >= ell)
                throw ParseError(at, "color exponent " + std::to_string(s.color) + " outside [1.." +
                                         std::to_string(ell - 1) + "]");
        }
        return s;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

inline void append_token(std::string& out, ColoredSymbol s) {
    out += std::to_string(s.value);
    if (s.color != 0) {
        out += '^';
        out += std::to_string(s.color);
    }
}

inline void check_size(std::optional<int> expected, int actual, std::size_t offset) {
    if (expected && *expected != actual)
        throw ParseError(offset, "expected " + std::to_string(*expected) + " letters, found " + std::to_string(actual));
}

}  // namespace detail

inline ColoredPermutation parse_one_line(std::string_view text, int ell, std::optional<int> n = std::nullopt) {
    detail::require(ell >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
    detail::Lexer lex(text);
    std::vector<ColoredSymbol> word;
    std::vector<std::size_t> offsets;
    lex.skip_space(false);
    while (!lex.done()) {
        offsets.push_back(lex.offset());
        word.push_back(lex.token(ell));
        const std::size_t before = lex.offset();
        lex.skip_space(false);
        if (!lex.done() && lex.offset() == before) throw ParseError(lex.offset(), "expected whitespace");
    }
    detail::check_size(n, static_cast<int>(word.size()), lex.offset());
    const int size = static_cast<int>(word.size());
    std::vector<char> seen(word.size() + 1, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        const int v = word[i].value;
        if (v > size) throw ParseError(offsets[i], "value " + std::to_string(v) + " exceeds " + std::to_string(size));
        if (seen[static_cast<std::size_t>(v)]) throw ParseError(offsets[i], "value " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return ColoredPermutation::from_word(ell, word);
}

inline std::string format_one_line(const ColoredPermutation& p) {
    std::string out;
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) out += ' ';
        detail::append_token(out, p.at(i));
    }
    return out;
}

inline CycleFactorization parse_cycle_factorization(std::string_view text, int ell) {
    detail::require(ell >= 1, ErrorKind::invalid_parameter, "number of colors must be >= 1");
    detail::Lexer lex(text);
    CycleFactorization cf;
    lex.skip_space(false);
    while (!lex.done()) {
        if (lex.peek() != '(') throw ParseError(lex.offset(), "expected '('");
        lex.advance();
        CycleFactorization::Cycle c;
        lex.skip_space(true);
        while (lex.peek() != ')') {
            if (lex.done()) throw ParseError(lex.offset(), "unterminated cycle");
            c.push_back(lex.token(ell));
            const std::size_t before = lex.offset();
            lex.skip_space(true);
            if (lex.peek() != ')' && lex.offset() == before) throw ParseError(lex.offset(), "expected separator");
        }
        if (c.empty()) throw ParseError(lex.offset(), "empty cycle");
        lex.advance();
        cf.cycles.push_back(std::move(c));
        lex.skip_space(false);
    }
    return cf;
}

inline ColoredPermutation parse_cycles(std::string_view text, int ell, std::optional<int> n = std::nullopt) {
    CycleFactorization cf = parse_cycle_factorization(text, ell);
    int count = 0;
    int largest = 0;
    for (const auto& c : cf.cycles) {
        count += static_cast<int>(c.size());
        for (const auto& s : c) largest = std::max(largest, s.value);
    }
    const int size = n.value_or(largest);
    detail::check_size(n, count, text.size());
    try {
        return from_cycles(cf, ell, size);
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

inline std::string format_cycles(const CycleFactorization& cf) {
    std::string out;
    for (const auto& c : cf.cycles) {
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i > 0) out += ' ';
            detail::append_token(out, c[i]);
        }
        out += ')';
    }
    return out;
}

inline std::string format_cycles(const ColoredPermutation& p) { return format_cycles(cycle_factorization(p)); }

/// Accepts either notation: anything starting with '(' is read as cycles.
inline ColoredPermutation parse_permutation(std::string_view text, int ell, std::optional<int> n = std::nullopt) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '(') return parse_cycles(text, ell, n);
    return parse_one_line(text, ell, n);
}

inline std::string format_symbol(ColoredSymbol s) {
    std::string out;
    detail::append_token(out, s);
    return out;
}

}  // namespace wreath
