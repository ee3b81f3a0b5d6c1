#include <cctype>
#include <string>
#include <string_view>

#include "liedegen/error.hpp"
#include "liedegen/scalar.hpp"

namespace liedegen {

namespace {

// Recursive-descent parser for the coefficient expression grammar:
//
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := ('-'|'+') unary | primary
//   primary := atom ('^' integer)?
//   atom    := integer | symbol | '(' expr ')'
//
// Integers are unbounded; symbols must be t or a declared parameter.
class Parser {
public:
    Parser(std::string_view text, const SymbolsPtr& syms) : text_(text), syms_(syms) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw SyntaxError(context("unexpected trailing input"));
        return v;
    }

private:
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (consume('+')) {
                v = v + term();
            } else if (consume('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = unary();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                v = v * unary();
            } else if (consume('/')) {
                Scalar d = unary();
                if (d.is_zero()) throw DivisionByZeroError(context("division by zero"));
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar unary() {
        skip_ws();
        if (consume('-')) return -unary();
        if (consume('+')) return unary();
        return primary();
    }

    Scalar primary() {
        Scalar v = atom();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '-')
                throw SyntaxError(context("negative exponents are not allowed; divide instead"));
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError(context("expected a non-negative integer exponent"));
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                if (e > 10000) throw SyntaxError(context("exponent too large"));
                ++pos_;
            }
            v = v.pow(static_cast<std::uint32_t>(e));
        }
        return v;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(context("unexpected end of expression"));
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            skip_ws();
            if (!consume(')')) throw SyntaxError(context("expected ')'"));
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Accumulate directly: string constructors would read a leading
            // zero as an octal prefix.
            Integer value = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                value = value * 10 + (text_[pos_++] - '0');
            return Scalar::from_rational(syms_, Rational(value));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            auto idx = syms_->index_of(name);
            if (!idx) {
                std::string declared;
                for (const auto& n : syms_->names())
                    declared += (declared.empty() ? "" : ", ") + n;
                throw SyntaxError(context("undeclared symbol '" + name +
                                          "' (declared: " + declared + ")"));
            }
            return Scalar::variable(syms_, *idx);
        }
        throw SyntaxError(context(std::string("unexpected character '") + c + "'"));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string context(const std::string& msg) const {
        return msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"";
    }

    std::string_view text_;
    const SymbolsPtr& syms_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const SymbolsPtr& syms) {
    return Parser(text, syms).parse();
}

}  // namespace liedegen
