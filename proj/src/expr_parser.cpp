#include "rsharp/expr_parser.hpp"
#include "rsharp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace rsharp {

namespace {

constexpr int kMaxDepth = 200;
constexpr long kMaxExponent = 4096;
constexpr std::size_t kMaxCoeffBits = std::size_t{1} << 20;

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    BivarPoly parse() {
        if (tok_.kind == Tok::End) throw ParseError(ErrorKind::SyntaxError, tok_.pos, "empty expression");
        BivarPoly p = expr();
        if (tok_.kind != Tok::End) unexpected();
        return p;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t start = i_;
        if (i_ >= src_.size()) {
            tok_ = {Tok::End, start, ""};
            return;
        }
        char c = src_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
            tok_ = {Tok::Number, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
                ++i_;
            tok_ = {Tok::Ident, start, std::string(src_.substr(start, i_ - start))};
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Tok::Plus, start, "+"}; return;
            case '-': tok_ = {Tok::Minus, start, "-"}; return;
            case '*': tok_ = {Tok::Star, start, "*"}; return;
            case '^': tok_ = {Tok::Caret, start, "^"}; return;
            case '/': tok_ = {Tok::Slash, start, "/"}; return;
            case '(': tok_ = {Tok::LParen, start, "("}; return;
            case ')': tok_ = {Tok::RParen, start, ")"}; return;
            default:
                throw ParseError(ErrorKind::SyntaxError, start, std::string("unexpected character '") + c + "'");
        }
    }

    [[noreturn]] void unexpected() {
        if (tok_.kind == Tok::End) throw ParseError(ErrorKind::SyntaxError, tok_.pos, "unexpected end of input");
        if (tok_.kind == Tok::Number || tok_.kind == Tok::Ident || tok_.kind == Tok::LParen)
            throw ParseError(ErrorKind::SyntaxError, tok_.pos, "implicit multiplication is not allowed");
        throw ParseError(ErrorKind::SyntaxError, tok_.pos, "unexpected '" + tok_.text + "'");
    }

    struct DepthGuard {
        DepthGuard(Parser& p, std::size_t pos) : p_(p) {
            if (++p_.depth_ > kMaxDepth) throw ParseError(ErrorKind::SyntaxError, pos, "nesting too deep");
        }
        ~DepthGuard() { --p_.depth_; }
        Parser& p_;
    };

    BivarPoly expr() {
        BivarPoly acc = term();
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            bool minus = tok_.kind == Tok::Minus;
            advance();
            BivarPoly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    BivarPoly term() {
        BivarPoly acc = unary();
        while (tok_.kind == Tok::Star) {
            advance();
            acc = acc * unary();
        }
        return acc;
    }

    BivarPoly unary() {
        DepthGuard g(*this, tok_.pos);
        if (tok_.kind == Tok::Minus) {
            advance();
            return -unary();
        }
        if (tok_.kind == Tok::Plus) {
            advance();
            return unary();
        }
        return power();
    }

    BivarPoly power() {
        BivarPoly base = primary();
        if (tok_.kind != Tok::Caret) return base;
        advance();
        std::size_t epos = tok_.pos;
        BivarPoly e = exponent();
        if (!e.is_constant())
            throw ParseError(ErrorKind::SyntaxError, epos, "exponent must be a constant");
        Rational v = e.coeff(0, 0);
        if (v < 0) throw ParseError(ErrorKind::NegativeExponent, epos, "negative exponent");
        if (!is_integer(v)) throw ParseError(ErrorKind::SyntaxError, epos, "exponent must be an integer");
        if (v > kMaxExponent) throw Error(ErrorKind::DegreeCapExceeded, "exponent too large");
        unsigned k = static_cast<unsigned>(v.get_num().get_ui());
        std::size_t bits = 1;
        for (const auto& [ex, c] : base.terms())
            bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2));
        if (bits * k > kMaxCoeffBits) throw Error(ErrorKind::DegreeCapExceeded, "coefficient size cap exceeded");
        return base.pow(k);
    }

    BivarPoly exponent() {
        DepthGuard g(*this, tok_.pos);
        if (tok_.kind == Tok::Minus) {
            std::size_t pos = tok_.pos;
            advance();
            BivarPoly inner = exponent();
            if (inner.is_zero()) return inner;
            throw ParseError(ErrorKind::NegativeExponent, pos, "negative exponent");
        }
        if (tok_.kind == Tok::Plus) {
            advance();
            return exponent();
        }
        return power();
    }

    BivarPoly primary() {
        switch (tok_.kind) {
            case Tok::Number: {
                Integer num(tok_.text, 10);
                advance();
                if (tok_.kind != Tok::Slash) return BivarPoly::constant(Rational(num));
                advance();
                if (tok_.kind != Tok::Number)
                    throw ParseError(ErrorKind::SyntaxError, tok_.pos, "expected denominator");
                Integer den(tok_.text, 10);
                if (den == 0) throw ParseError(ErrorKind::SyntaxError, tok_.pos, "zero denominator");
                advance();
                Rational q(num, den);
                q.canonicalize();
                return BivarPoly::constant(q);
            }
            case Tok::Ident: {
                const std::string& n = tok_.text;
                BivarPoly v;
                if (n == "z1" || n == "x" || n == "t1")
                    v = BivarPoly::z1();
                else if (n == "z2" || n == "y" || n == "t2")
                    v = BivarPoly::z2();
                else
                    throw ParseError(ErrorKind::UnknownVariable, tok_.pos, "unknown variable '" + n + "'");
                advance();
                return v;
            }
            case Tok::LParen: {
                DepthGuard g(*this, tok_.pos);
                advance();
                BivarPoly inner = expr();
                if (tok_.kind != Tok::RParen)
                    throw ParseError(ErrorKind::SyntaxError, tok_.pos, "expected ')'");
                advance();
                return inner;
            }
            default:
                unexpected();
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{Tok::End, 0, ""};
    int depth_ = 0;
};

}  // namespace

BivarPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace rsharp
