#pragma once

#include <cctype>
#include <string>

#include "bigrees/polynomial.hpp"
#include "bigrees/ring.hpp"

namespace bigrees {

// Polynomial text grammar (whitespace ignored, no implicit multiplication):
//   poly   := term (("+"|"-") term)* | "-" term (("+"|"-") term)*
//   term   := coeff ("*" factor)* | factor ("*" factor)*
//   factor := var ("^" uint)?
//   coeff  := uint
namespace detail {

class PolyParser {
public:
    PolyParser(const std::string& text, const RingContext& ctx) : text_(text), ctx_(ctx) {}

    Polynomial parse() {
        Polynomial acc = Polynomial::zero(ctx_.nvars(), ctx_.p);
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        acc = acc + parse_term(negate);
        skip_ws();
        while (pos_ < text_.size()) {
            char c = peek();
            if (c != '+' && c != '-') error("expected '+' or '-'");
            ++pos_;
            acc = acc + parse_term(c == '-');
            skip_ws();
        }
        return acc;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(errc::parse,
             "polynomial syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::int64_t parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected an unsigned integer");
        std::int64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_] - '0');
            v %= ctx_.p; // coefficients reduce modulo p; overflow-safe
            ++pos_;
        }
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        std::size_t start = pos_;
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            error("expected a variable name");
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        return text_.substr(start, pos_ - start);
    }

    // factor := var ("^" uint)?
    void parse_factor(Monomial& mono) {
        std::size_t at = pos_;
        std::string name = parse_ident();
        auto idx = ctx_.var_index(name);
        if (!idx)
            fail(errc::parse, "unknown variable '" + name + "' at position " + std::to_string(at));
        int e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected exponent");
            std::int64_t v = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                v = v * 10 + (text_[pos_] - '0');
                if (v > 30000) error("exponent too large");
                ++pos_;
            }
            e = static_cast<int>(v);
        }
        mono.set_exponent(*idx, mono.exponent(*idx) + e);
    }

    Polynomial parse_term(bool negate) {
        skip_ws();
        FieldScalar c = FieldScalar::one(ctx_.p);
        Monomial mono(ctx_.nvars());
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = FieldScalar::of(parse_uint(), ctx_.p);
        } else {
            parse_factor(mono);
        }
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            parse_factor(mono);
            skip_ws();
        }
        // adjacency like "2x" or "x y" is an error: the next token must be
        // +, -, * or end of input, which the caller enforces
        if (pos_ < text_.size() && peek() != '+' && peek() != '-') error("expected '+', '-' or '*'");
        if (negate) c = -c;
        return Polynomial::term(ctx_.nvars(), mono, c);
    }

    const std::string& text_;
    const RingContext& ctx_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, const RingContext& ctx) {
    return detail::PolyParser(text, ctx).parse();
}

// Canonical printing: degrevlex-descending terms, symmetric coefficient
// representatives. parse(print(f)) == f, and print∘parse∘print is a fixed
// point on all outputs.
inline std::string print_polynomial(const Polynomial& f, const RingContext& ctx) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        const std::int64_t lift = symmetric_lift(t.coeff);
        const bool neg = lift < 0;
        const std::int64_t mag = neg ? -lift : lift;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string factors;
        for (std::size_t i = 0; i < ctx.nvars(); ++i) {
            int e = t.mono.exponent(i);
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += ctx.vars[i];
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += std::to_string(mag);
        } else if (mag != 1) {
            out += std::to_string(mag) + "*" + factors;
        } else {
            out += factors;
        }
    }
    return out;
}

} // namespace bigrees
