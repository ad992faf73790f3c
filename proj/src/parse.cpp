#include "geoconn/parse.hpp"

#include <cctype>

namespace geoconn {

namespace {

constexpr std::uint64_t kMaxExponent = 0x7fffffffull;

struct Lexer {
    enum class Kind { Int, Ident, Plus, Minus, Star, Caret, End };
    struct Token {
        Kind kind;
        std::string text;
        std::size_t pos;
    };

    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
        if (i_ < s_.size() && s_[i_] == '#') i_ = s_.size(); // comment to end
        std::size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Kind::End, "", start};
            return;
        }
        char c = s_[i_];
        if (std::isdigit((unsigned char)c)) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit((unsigned char)s_[j])) ++j;
            tok_ = {Kind::Int, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum((unsigned char)s_[j]) || s_[j] == '_'))
                ++j;
            tok_ = {Kind::Ident, s_.substr(i_, j - i_), start};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
        case '+': tok_ = {Kind::Plus, "+", start}; return;
        case '-': tok_ = {Kind::Minus, "-", start}; return;
        case '*': tok_ = {Kind::Star, "*", start}; return;
        case '^': tok_ = {Kind::Caret, "^", start}; return;
        default:
            throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token tok_{Kind::End, "", 0};
};

Fq literal_mod_p(const std::string& digits, const Field& F) {
    Fq acc = F.zero();
    Fq ten = F.from_int(10);
    for (char c : digits) acc = F.add(F.mul(acc, ten), F.from_int(c - '0'));
    return acc;
}

std::uint32_t literal_exponent(const Lexer::Token& tok) {
    std::uint64_t v = 0;
    for (char c : tok.text) {
        v = v * 10 + (c - '0');
        if (v > kMaxExponent) throw parse_error("exponent too large", tok.pos);
    }
    return (std::uint32_t)v;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ctx) {
    using Kind = Lexer::Kind;
    const Field& F = *ctx->field();
    const bool has_gen = F.extension_degree() > 1;
    Lexer lex(text);

    std::vector<Term> terms;

    auto parse_term = [&](bool negative) {
        Fq coeff = F.one();
        Monomial mono = Monomial::one(ctx->nvars());
        bool any = false;
        if (lex.peek().kind == Kind::Int) {
            coeff = literal_mod_p(lex.take().text, F);
            any = true;
        }
        while (true) {
            if (lex.peek().kind == Kind::Star) {
                lex.take();
                if (lex.peek().kind != Kind::Ident)
                    throw parse_error("expected a variable after '*'", lex.peek().pos);
            }
            if (lex.peek().kind != Kind::Ident) break;
            auto name = lex.take();
            std::uint32_t exp = 1;
            if (lex.peek().kind == Kind::Caret) {
                lex.take();
                if (lex.peek().kind != Kind::Int)
                    throw parse_error("expected an exponent after '^'", lex.peek().pos);
                exp = literal_exponent(lex.take());
            }
            if (has_gen && name.text == "t") {
                coeff = F.mul(coeff, F.pow(F.generator_element(), exp));
            } else {
                int idx = ctx->var_index(name.text);
                if (idx < 0)
                    throw parse_error("unknown variable " + name.text, name.pos);
                mono = mono.mul(Monomial::variable(ctx->nvars(), (std::size_t)idx, exp));
            }
            any = true;
        }
        if (!any) throw parse_error("expected a term", lex.peek().pos);
        terms.push_back({std::move(mono), negative ? F.neg(coeff) : coeff});
    };

    bool negative = false;
    if (lex.peek().kind == Kind::Plus) {
        lex.take();
    } else if (lex.peek().kind == Kind::Minus) {
        lex.take();
        negative = true;
    }
    parse_term(negative);
    while (lex.peek().kind != Kind::End) {
        auto sign = lex.take();
        if (sign.kind == Kind::Plus) {
            parse_term(false);
        } else if (sign.kind == Kind::Minus) {
            parse_term(true);
        } else {
            throw parse_error("expected '+' or '-'", sign.pos);
        }
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

} // namespace geoconn
