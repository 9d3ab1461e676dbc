#include "freeaut/parse.hpp"

#include <cctype>
#include <sstream>

namespace freeaut {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg, size_t pos) const {
        std::ostringstream out;
        out << "syntax error at position " << pos << ": " << msg;
        raise(Errc::Parse, out.str());
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t pos = i_;
        if (i_ >= s_.size()) {
            cur_ = Token{Tok::End, "", pos};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            cur_ = Token{Tok::Number, s_.substr(i_, j - i_), pos};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            cur_ = Token{Tok::Ident, s_.substr(i_, j - i_), pos};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': cur_ = Token{Tok::Plus, "+", pos}; return;
            case '-': cur_ = Token{Tok::Minus, "-", pos}; return;
            case '*': cur_ = Token{Tok::Star, "*", pos}; return;
            case '^': cur_ = Token{Tok::Caret, "^", pos}; return;
            case '/': cur_ = Token{Tok::Slash, "/", pos}; return;
            case '(': cur_ = Token{Tok::LParen, "(", pos}; return;
            case ')': cur_ = Token{Tok::RParen, ")", pos}; return;
            case '[': cur_ = Token{Tok::LBracket, "[", pos}; return;
            case ']': cur_ = Token{Tok::RBracket, "]", pos}; return;
            case ',': cur_ = Token{Tok::Comma, ",", pos}; return;
            default: {
                std::ostringstream out;
                out << "syntax error at position " << pos << ": unexpected character '" << c << "'";
                raise(Errc::Parse, out.str());
            }
        }
    }

    const std::string& s_;
    size_t i_ = 0;
    Token cur_{Tok::End, "", 0};
};

// One parser over an abstract polynomial algebra P; the three modes plug in
// their own variable/product/power semantics.
template <class P>
struct Algebra {
    Ctx ctx;
    bool associative = true;
    bool commutator_sugar = true;

    P (*konst)(Ctx, const Rational&);
    P (*var)(Ctx, int);
};

template <class P>
class Parser {
public:
    Parser(const std::string& text, Algebra<P> alg) : lex_(text), alg_(std::move(alg)) {}

    P parse() {
        P p = expr();
        if (lex_.peek().kind != Tok::End) lex_.fail("trailing input", lex_.peek().pos);
        return p;
    }

private:
    P expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) {
            lex_.next();
            neg = true;
        } else if (lex_.peek().kind == Tok::Plus) {
            lex_.next();
        }
        P acc = term();
        if (neg) acc = -acc;
        for (;;) {
            Tok k = lex_.peek().kind;
            if (k == Tok::Plus) {
                lex_.next();
                acc += term();
            } else if (k == Tok::Minus) {
                lex_.next();
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    P term() {
        P acc = power();
        int factors = 1;
        while (lex_.peek().kind == Tok::Star) {
            size_t pos = lex_.peek().pos;
            lex_.next();
            if (!alg_.associative && factors >= 2)
                lex_.fail("nonassociative products need explicit parentheses", pos);
            acc = acc * power();
            ++factors;
        }
        return acc;
    }

    P power() {
        P base = atom();
        while (lex_.peek().kind == Tok::Caret) {
            size_t pos = lex_.peek().pos;
            lex_.next();
            Token t = lex_.next();
            if (t.kind != Tok::Number) lex_.fail("exponent must be a nonnegative integer", t.pos);
            long e = std::stol(t.text);
            if (!alg_.associative && e > 2)
                lex_.fail("powers above 2 are ambiguous without explicit bracketing", pos);
            P acc = alg_.konst(alg_.ctx, Rational(1));
            for (long i = 0; i < e; ++i) acc = acc * base;
            base = std::move(acc);
        }
        return base;
    }

    P atom() {
        Token t = lex_.next();
        switch (t.kind) {
            case Tok::Number: {
                Rational c = Rational::from_string(t.text);
                if (lex_.peek().kind == Tok::Slash) {
                    lex_.next();
                    Token d = lex_.next();
                    if (d.kind != Tok::Number)
                        lex_.fail("'/' is only for rational literals p/q", d.pos);
                    Rational den = Rational::from_string(d.text);
                    if (den.is_zero()) lex_.fail("zero denominator", d.pos);
                    c /= den;
                }
                return alg_.konst(alg_.ctx, c);
            }
            case Tok::Ident: {
                int idx = alg_.ctx->find(t.text);
                if (idx < 0) lex_.fail("unknown variable '" + t.text + "'", t.pos);
                return alg_.var(alg_.ctx, idx);
            }
            case Tok::Minus:
                return -atom();
            case Tok::LParen: {
                P p = expr();
                Token close = lex_.next();
                if (close.kind != Tok::RParen) lex_.fail("expected ')'", close.pos);
                return p;
            }
            case Tok::LBracket: {
                if (!alg_.commutator_sugar) lex_.fail("'[' is not valid here", t.pos);
                P f = expr();
                Token comma = lex_.next();
                if (comma.kind != Tok::Comma) lex_.fail("expected ',' in commutator", comma.pos);
                P g = expr();
                Token close = lex_.next();
                if (close.kind != Tok::RBracket) lex_.fail("expected ']'", close.pos);
                return f * g - g * f;
            }
            default:
                lex_.fail("expected a term", t.pos);
        }
    }

    Lexer lex_;
    Algebra<P> alg_;
};

std::vector<std::string> split_semicolons(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

NcPoly parse_ncpoly(const std::string& text, const Ctx& ctx) {
    Algebra<NcPoly> alg{ctx, true, true, &NcPoly::constant, &NcPoly::var};
    return Parser<NcPoly>(text, alg).parse();
}

CPoly parse_cpoly(const std::string& text, const Ctx& ctx) {
    Algebra<CPoly> alg{ctx, true, false, &CPoly::constant, &CPoly::var};
    return Parser<CPoly>(text, alg).parse();
}

NaPoly parse_napoly(const std::string& text, const Ctx& ctx) {
    Algebra<NaPoly> alg{ctx, false, true, &NaPoly::constant, &NaPoly::var};
    return Parser<NaPoly>(text, alg).parse();
}

NcEndo parse_nc_endo(const std::string& text, const Ctx& ctx) {
    auto parts = split_semicolons(text);
    if (static_cast<int>(parts.size()) != ctx->size())
        raise(Errc::Parse, "endomorphism needs exactly one image per variable");
    NcEndo e;
    e.ctx = ctx;
    for (const auto& p : parts) e.images.push_back(parse_ncpoly(p, ctx));
    return e;
}

NaEndo parse_na_endo(const std::string& text, const Ctx& ctx) {
    auto parts = split_semicolons(text);
    if (static_cast<int>(parts.size()) != ctx->size())
        raise(Errc::Parse, "endomorphism needs exactly one image per variable");
    NaEndo e;
    e.ctx = ctx;
    for (const auto& p : parts) e.images.push_back(parse_napoly(p, ctx));
    return e;
}

CMatrix parse_cmatrix(const std::string& text, const Ctx& ctx) {
    // [[a,c],[b,d]] with expression entries; split on top-level commas.
    size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_space();
        if (i >= text.size() || text[i] != c) {
            std::ostringstream out;
            out << "matrix literal: expected '" << c << "' at position " << i;
            raise(Errc::Parse, out.str());
        }
        ++i;
    };
    auto entry = [&]() {
        skip_space();
        size_t start = i;
        int depth = 0;
        while (i < text.size()) {
            char c = text[i];
            if (c == '(') {
                ++depth;
            } else if (c == ')') {
                --depth;
            } else if (depth == 0 && (c == ',' || c == ']')) {
                break;
            }
            ++i;
        }
        return parse_cpoly(text.substr(start, i - start), ctx);
    };

    std::vector<std::vector<CPoly>> rows;
    expect('[');
    for (;;) {
        expect('[');
        std::vector<CPoly> row;
        for (;;) {
            row.push_back(entry());
            skip_space();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            break;
        }
        expect(']');
        rows.push_back(std::move(row));
        skip_space();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
        break;
    }
    expect(']');
    skip_space();
    if (i != text.size()) raise(Errc::Parse, "trailing input after matrix literal");

    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != cols) raise(Errc::Parse, "ragged matrix literal");
    CMatrix m(ctx, static_cast<int>(rows.size()), static_cast<int>(cols));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols; ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
    return m;
}

} // namespace freeaut
