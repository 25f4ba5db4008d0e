#include "adjl/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "adjl/errors.hpp"
#include "adjl/groebner.hpp"
#include "adjl/newton.hpp"
#include "adjl/syzygy.hpp"

namespace adjl {

namespace {

struct Token {
    enum class Type { Ident, Number, Sym, End };
    Type type = Type::End;
    std::string text;
    int col = 0;  // 1-based
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    const size_t n = s.size();
    while (i < n) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Type::Ident, s.substr(i, j - i), col});
            i = j;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Type::Number, s.substr(i, j - i), col});
            i = j;
        } else if (std::string("+-*^(),[]/").find(c) != std::string::npos) {
            out.push_back({Token::Type::Sym, std::string(1, c), col});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", 1, col);
        }
    }
    out.push_back({Token::Type::End, "", static_cast<int>(n) + 1});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const RingPtr& ring)
        : toks_(lex(text)), ring_(ring) {
        const auto& names = ring->vars();
        for (size_t v = 0; v < names.size(); ++v) vars_[names[v]] = static_cast<int>(v);
    }

    ParsedQuery query() {
        ParsedQuery q;
        if (peek().type == Token::Type::Ident && peek().text == "pointbasis") {
            q.pointBasisQuery = true;
            next();
            expectSym("(");
            q.expr = idealExpr();
            expectSym(")");
        } else {
            q.expr = idealExpr();
        }
        expectEnd();
        return q;
    }

    Poly polynomialOnly() {
        Poly p = polyExpr();
        expectEnd();
        return p;
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
    RingPtr ring_;
    std::map<std::string, int> vars_;

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    bool acceptSym(const std::string& s) {
        if (peek().type == Token::Type::Sym && peek().text == s) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expectSym(const std::string& s) {
        if (!acceptSym(s))
            throw ParseError("expected '" + s + "'", 1, peek().col);
    }

    void expectEnd() {
        if (peek().type != Token::Type::End)
            throw ParseError("unexpected trailing input", 1, peek().col);
    }

    int nat() {
        if (peek().type != Token::Type::Number)
            throw ParseError("expected a natural number", 1, peek().col);
        Token t = next();
        if (t.text.size() > 6) throw ParseError("exponent too large", 1, t.col);
        return std::stoi(t.text);
    }

    ChartStep step() {
        expectSym("[");
        ChartStep st;
        if (peek().type == Token::Type::Ident && peek().text == "inf") {
            next();
            st.atInfinity = true;
            st.center = Fq();
        } else {
            // A rational chart center, possibly negative.
            bool neg = acceptSym("-");
            if (peek().type != Token::Type::Number)
                throw ParseError("expected a chart center: [c] or [inf]", 1, peek().col);
            Rat v = ratLiteral();
            if (neg) v = -v;
            st.atInfinity = false;
            st.center = Fq(v);
        }
        expectSym("]");
        return st;
    }

    Rat ratLiteral() {
        Token t = next();
        Int num(t.text);
        if (acceptSym("/")) {
            if (peek().type != Token::Type::Number)
                throw ParseError("expected a denominator", 1, peek().col);
            Token d = next();
            Int den(d.text);
            if (den == 0) throw ParseError("zero denominator", 1, d.col);
            Rat q(num, den);
            q.canonicalize();
            return q;
        }
        return Rat(num);
    }

    ExprPtr idealExpr() {
        if (peek().type != Token::Type::Ident)
            throw ParseError("expected an ideal expression", 1, peek().col);
        Token head = next();
        auto node = std::make_shared<IdealExpr>();
        const std::string& kw = head.text;

        if (kw == "ideal") {
            node->kind = IdealExpr::Kind::Gens;
            expectSym("(");
            node->polys.push_back(polyExpr());
            while (acceptSym(",")) node->polys.push_back(polyExpr());
            expectSym(")");
        } else if (kw == "adjoint" || kw == "closure") {
            node->kind = kw == "adjoint" ? IdealExpr::Kind::Adjoint : IdealExpr::Kind::Closure;
            expectSym("(");
            node->args.push_back(idealExpr());
            expectSym(")");
        } else if (kw == "quotient" || kw == "sum" || kw == "product") {
            node->kind = kw == "quotient" ? IdealExpr::Kind::Quotient
                       : kw == "sum"      ? IdealExpr::Kind::Sum
                                          : IdealExpr::Kind::Product;
            expectSym("(");
            node->args.push_back(idealExpr());
            expectSym(",");
            node->args.push_back(idealExpr());
            expectSym(")");
        } else if (kw == "power" || kw == "fitting") {
            node->kind = kw == "power" ? IdealExpr::Kind::Power : IdealExpr::Kind::Fitting;
            expectSym("(");
            node->args.push_back(idealExpr());
            expectSym(",");
            node->natArg = nat();
            expectSym(")");
        } else if (kw == "transform") {
            node->kind = IdealExpr::Kind::Transform;
            expectSym("(");
            node->args.push_back(idealExpr());
            expectSym(",");
            node->steps.push_back(step());
            while (acceptSym(",")) node->steps.push_back(step());
            expectSym(")");
        } else if (kw == "pointbasis") {
            throw ParseError("pointbasis(...) is only allowed at the top level", 1, head.col);
        } else {
            throw ParseError("unknown operation '" + kw + "'", 1, head.col);
        }
        return node;
    }

    // polyExpr := ['-'] term (('+'|'-') term)*
    Poly polyExpr() {
        bool neg = acceptSym("-");
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            if (acceptSym("+")) {
                p = p + term();
            } else if (acceptSym("-")) {
                p = p - term();
            } else {
                return p;
            }
        }
    }

    // term := factor ('*' factor)*
    Poly term() {
        Poly p = factor();
        while (acceptSym("*")) p = p * factor();
        return p;
    }

    // factor := base ['^' nat]
    Poly factor() {
        Poly p = base();
        if (acceptSym("^")) {
            int e = nat();
            Poly q = Poly::constant(ring_, Rat(1));
            for (int i = 0; i < e; ++i) q = q * p;
            return q;
        }
        return p;
    }

    Poly base() {
        const Token& t = peek();
        if (t.type == Token::Type::Sym && t.text == "(") {
            next();
            Poly p = polyExpr();
            expectSym(")");
            return p;
        }
        if (t.type == Token::Type::Ident) {
            auto it = vars_.find(t.text);
            if (it == vars_.end())
                throw ParseError("'" + t.text + "' is not a variable of the ring", 1, t.col);
            next();
            return Poly::variable(ring_, it->second);
        }
        if (t.type == Token::Type::Number) {
            Rat v = ratLiteral();
            return Poly::constant(ring_, v);
        }
        throw ParseError("expected a polynomial", 1, t.col);
    }
};

}  // namespace

ParsedQuery parseQuery(const std::string& text, const RingPtr& ring) {
    Parser p(text, ring);
    return p.query();
}

Poly parsePolynomial(const std::string& text, const RingPtr& ring) {
    Parser p(text, ring);
    return p.polynomialOnly();
}

std::pair<Ideal, std::vector<std::string>> adjointAllEngines(const Ideal& I) {
    static const AdjointMethod kOrder[] = {
        AdjointMethod::Monomial,   AdjointMethod::PointBasis, AdjointMethod::Definition,
        AdjointMethod::Quotient,   AdjointMethod::Fitting,
    };
    std::optional<Ideal> ref;
    std::string refName;
    std::vector<std::string> ran;
    for (AdjointMethod m : kOrder) {
        std::optional<Ideal> a;
        try {
            a = adjointOf(I, m);
        } catch (const UnsupportedError&) {
            continue;
        }
        const std::string name = adjointMethodName(m);
        if (!ref) {
            ref = *a;
            refName = name;
        } else if (!idealEquals(*ref, *a)) {
            throw InternalCheckError("adjoint engines disagree: " + refName + " vs " + name);
        }
        ran.push_back(name);
    }
    if (!ref) {
        // No engine applies; let the default dispatch raise its diagnostic.
        return {adjointOf(I, AdjointMethod::Auto), {}};
    }
    return {*ref, ran};
}

Ideal evaluateExpr(const ExprPtr& e, const RingPtr& ring, const EvalConfig& cfg) {
    if (!e) throw PreconditionError("empty expression");
    using K = IdealExpr::Kind;
    switch (e->kind) {
        case K::Gens:
            return Ideal(ring, e->polys);
        case K::Adjoint: {
            Ideal I = evaluateExpr(e->args[0], ring, cfg);
            if (cfg.crosscheck) return adjointAllEngines(I).first;
            return adjointOf(I, cfg.method);
        }
        case K::Closure:
            return closureOf(evaluateExpr(e->args[0], ring, cfg));
        case K::Quotient:
            return idealColon(evaluateExpr(e->args[0], ring, cfg),
                              evaluateExpr(e->args[1], ring, cfg));
        case K::Sum:
            return idealSum(evaluateExpr(e->args[0], ring, cfg),
                            evaluateExpr(e->args[1], ring, cfg));
        case K::Product:
            return idealProduct(evaluateExpr(e->args[0], ring, cfg),
                                evaluateExpr(e->args[1], ring, cfg));
        case K::Power:
            return idealPower(evaluateExpr(e->args[0], ring, cfg), e->natArg);
        case K::Fitting:
            return fittingIdeal(evaluateExpr(e->args[0], ring, cfg), e->natArg);
        case K::Transform: {
            Ideal J = evaluateExpr(e->args[0], ring, cfg);
            for (const ChartStep& st : e->steps) J = transformIdeal(J, st, true);
            return J;
        }
    }
    throw PreconditionError("unhandled expression kind");
}

}  // namespace adjl
