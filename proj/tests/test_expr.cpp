#include "doctest.h"

#include <string>
#include <vector>

#include "adjl/expr.hpp"
#include "adjl/newton.hpp"

using namespace adjl;

namespace {
RingPtr R2() { return makeRing({"x", "y"}); }

Ideal evalQ(const std::string& text, const RingPtr& r,
            EvalConfig cfg = EvalConfig{}) {
    ParsedQuery q = parseQuery(text, r);
    REQUIRE(!q.pointBasisQuery);
    return evaluateExpr(q.expr, r, cfg);
}

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Poly> v;
    for (const char* g : gens) v.push_back(parsePolynomial(g, r));
    return Ideal(r, v);
}
}  // namespace

TEST_CASE("polynomial parsing") {
    RingPtr r = R2();
    CHECK(parsePolynomial("(x+y)^2 - (x-y)^2", r) == parsePolynomial("4*x*y", r));
    CHECK(parsePolynomial("x^2 - 2*y", r).toString() == "x^2 - 2*y");
    CHECK(parsePolynomial("1/2*x + 1/2*x", r) == parsePolynomial("x", r));
    CHECK(parsePolynomial("2/4", r) == parsePolynomial("1/2", r));
    CHECK(parsePolynomial("-x*y + 2*x*y", r) == parsePolynomial("x*y", r));
    CHECK(parsePolynomial("x^0", r) == parsePolynomial("1", r));
    CHECK(parsePolynomial("x - x", r).isZero());
}

TEST_CASE("parse errors carry positions") {
    RingPtr r = R2();
    auto colOf = [&](const std::string& text) {
        try {
            parsePolynomial(text, r);
        } catch (const ParseError& e) {
            return e.col;
        }
        return -1;
    };
    CHECK(colOf("x + * y") == 5);
    CHECK(colOf("x + z") == 5);   // unknown variable
    CHECK(colOf("x + ") == 5);    // dangling operator
    CHECK(colOf("(x + y") == 7);  // unclosed parenthesis
    CHECK(colOf("x ^ y") == 5);   // exponent must be a natural number
    CHECK(colOf("x y") == 3);     // implicit multiplication is not accepted

    CHECK_THROWS_AS(parseQuery("mystery(ideal(x))", r), ParseError);
    CHECK_THROWS_AS(parseQuery("adjoint(pointbasis(ideal(x)))", r), ParseError);
    CHECK_THROWS_AS(parseQuery("power(ideal(x), 1234567)", r), ParseError);
}

TEST_CASE("query evaluation composes the operations") {
    RingPtr r = R2();
    Ideal m = maximalIdeal(r);

    CHECK(idealEquals(evalQ("adjoint(ideal(x^2, y^3))", r), m));
    CHECK(idealEquals(evalQ("closure(ideal(x^2, y^3))", r), I(r, {"x^2", "x*y^2", "y^3"})));
    CHECK(idealEquals(evalQ("quotient(ideal(x^2, x*y), ideal(x))", r), m));
    CHECK(idealEquals(evalQ("sum(ideal(x^2), ideal(y))", r), I(r, {"x^2", "y"})));
    CHECK(idealEquals(evalQ("product(ideal(x, y), ideal(x, y))", r), idealPower(m, 2)));
    CHECK(idealEquals(evalQ("power(ideal(x, y), 3)", r), idealPower(m, 3)));
    CHECK(evalQ("power(ideal(x, y), 0)", r).isUnitIdeal());
    CHECK(idealEquals(evalQ("fitting(ideal(x, y), 1)", r), m));
    CHECK(idealEquals(evalQ("adjoint(power(ideal(x, y), 3))", r), idealPower(m, 2)));

    CHECK(idealEquals(evalQ("transform(ideal(x^6, y^4), [0])", r), I(r, {"x^2", "y^4"})));
    CHECK(idealEquals(evalQ("transform(ideal(x^6, y^4), [0], [inf])", r),
                      I(r, {"x^2", "y^2"})));
    CHECK(idealEquals(evalQ("transform(ideal(x^2 - y^2, y^3), [1])", r),
                      evalQ("transform(ideal(x^2 - y^2, y^3), [2/2])", r)));

    ParsedQuery q = parseQuery("pointbasis(ideal(x^2, y^3))", r);
    CHECK(q.pointBasisQuery);
    CHECK(q.expr->kind == IdealExpr::Kind::Gens);
}

TEST_CASE("evaluation respects the configured method") {
    RingPtr r = R2();
    EvalConfig mono;
    mono.method = AdjointMethod::Monomial;
    CHECK_THROWS_AS(evalQ("adjoint(ideal(x^3, y^2 - 2*x^2))", r, mono), UnsupportedError);
    CHECK(idealEquals(evalQ("adjoint(ideal(x^3, y^2 - 2*x^2))", r), maximalIdeal(r)));

    EvalConfig cross;
    cross.crosscheck = true;
    CHECK(idealEquals(evalQ("adjoint(ideal(x^2, y^3))", r, cross), maximalIdeal(r)));
}

TEST_CASE("every applicable engine runs under the crosscheck") {
    RingPtr r = R2();
    auto [adj, names] = adjointAllEngines(I(r, {"x^2", "y^3"}));
    CHECK(idealEquals(adj, maximalIdeal(r)));
    CHECK(names.size() >= 4);

    auto [adj2, names2] = adjointAllEngines(I(r, {"x^3", "y^2 - 2*x^2"}));
    CHECK(idealEquals(adj2, maximalIdeal(r)));
    // The facet engine sits this one out.
    for (const std::string& n : names2) CHECK(n != "monomial");
    CHECK(names2.size() >= 3);
}
