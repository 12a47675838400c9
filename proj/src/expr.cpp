#include "lns/expr.hpp"

#include <cctype>
#include <vector>

namespace lns {

ExprPtr make_literal(PosRational value) {
    auto e = std::make_unique<Expr>();
    e->kind = Expr::Kind::Literal;
    e->literal = std::make_unique<PosRational>(std::move(value));
    return e;
}

namespace {

ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_unique<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

struct Token {
    enum class Kind { Number, Plus, Star, Slash, LParen, RParen, End };
    Kind kind;
    std::size_t pos;
    Int num{0}, den{1};  // Number only
};

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n') {
            ++i;
            continue;
        }
        if (c == '-') throw ParseError("'-' is not supported: Level 1 has no subtraction", i);
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t end_num = digits(i);
            Token t{Token::Kind::Number, i, Int(std::string(text.substr(i, end_num - i))), 1};
            // "N/D" with no intervening space is a single rational literal
            if (end_num < text.size() && text[end_num] == '/' && end_num + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[end_num + 1]))) {
                std::size_t end_den = digits(end_num + 1);
                t.den = Int(std::string(text.substr(end_num + 1, end_den - end_num - 1)));
                end_num = end_den;
            }
            if (t.num == 0)
                throw ParseError("literals must be positive", i);
            if (t.den == 0)
                throw ParseError("literal denominator must be positive", i);
            out.push_back(std::move(t));
            i = end_num;
            continue;
        }
        Token t{Token::Kind::End, i, 0, 1};
        switch (c) {
            case '+': t.kind = Token::Kind::Plus; break;
            case '*': t.kind = Token::Kind::Star; break;
            case '/': t.kind = Token::Kind::Slash; break;
            case '(': t.kind = Token::Kind::LParen; break;
            case ')': t.kind = Token::Kind::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back(t);
        ++i;
    }
    out.push_back(Token{Token::Kind::End, text.size(), 0, 1});
    return out;
}

struct Parser {
    const std::vector<Token>& toks;
    std::size_t at = 0;

    const Token& peek() const { return toks[at]; }
    const Token& take() { return toks[at++]; }

    ExprPtr expr() {
        ExprPtr e = term();
        while (peek().kind == Token::Kind::Plus) {
            take();
            e = make_binary(Expr::Kind::Add, std::move(e), term());
        }
        return e;
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (peek().kind == Token::Kind::Star) {
                take();
                e = make_binary(Expr::Kind::Mul, std::move(e), factor());
            } else if (peek().kind == Token::Kind::Slash) {
                take();
                e = make_binary(Expr::Kind::Div, std::move(e), factor());
            } else {
                return e;
            }
        }
    }

    ExprPtr factor() {
        const Token& t = take();
        if (t.kind == Token::Kind::Number) return make_literal(PosRational(t.num, t.den));
        if (t.kind == Token::Kind::LParen) {
            ExprPtr e = expr();
            const Token& close = take();
            if (close.kind != Token::Kind::RParen)
                throw ParseError("expected ')'", close.pos);
            return e;
        }
        throw ParseError("expected a literal or '('", t.pos);
    }
};

}  // namespace

ExprPtr make_add(ExprPtr lhs, ExprPtr rhs) {
    return make_binary(Expr::Kind::Add, std::move(lhs), std::move(rhs));
}
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs) {
    return make_binary(Expr::Kind::Mul, std::move(lhs), std::move(rhs));
}
ExprPtr make_div(ExprPtr lhs, ExprPtr rhs) {
    return make_binary(Expr::Kind::Div, std::move(lhs), std::move(rhs));
}

ExprPtr parse_expression(std::string_view text) {
    std::vector<Token> toks = lex(text);
    Parser p{toks};
    ExprPtr e = p.expr();
    if (p.peek().kind != Token::Kind::End)
        throw ParseError("unexpected trailing input", p.peek().pos);
    return e;
}

std::string to_string(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Literal:
            if (e.literal->den == 1) return e.literal->num.get_str();
            return e.literal->num.get_str() + "/" + e.literal->den.get_str();
        case Expr::Kind::Add:
            return "(" + to_string(*e.lhs) + " + " + to_string(*e.rhs) + ")";
        case Expr::Kind::Mul:
            return "(" + to_string(*e.lhs) + " * " + to_string(*e.rhs) + ")";
        case Expr::Kind::Div:
            return "(" + to_string(*e.lhs) + " / " + to_string(*e.rhs) + ")";
    }
    return "";
}

}  // namespace lns
