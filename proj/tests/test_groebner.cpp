#include "doctest.h"

#include "adjl/errors.hpp"
#include "adjl/expr.hpp"
#include "adjl/groebner.hpp"
#include "oracles.hpp"

using namespace adjl;

namespace {
RingPtr R2() { return makeRing({"x", "y"}); }
Poly P(const RingPtr& r, const std::string& s) { return parsePolynomial(s, r); }
Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Poly> v;
    for (const char* g : gens) v.push_back(parsePolynomial(g, r));
    return Ideal(r, v);
}
}  // namespace

TEST_CASE("normal form certificate") {
    RingPtr r = R2();
    Ideal a = I(r, {"x^2 - y", "x*y - 1"});
    const std::vector<Poly>& gb = a.basis();
    Poly f = P(r, "x^4 + x*y^2 + 3");
    std::vector<Poly> q;
    Poly rem = normalForm(f, gb, MonomialOrder::degrevlex(), &q);
    Poly rebuilt = rem;
    REQUIRE(q.size() == gb.size());
    for (size_t i = 0; i < gb.size(); ++i) rebuilt = rebuilt + q[i] * gb[i];
    CHECK(rebuilt == f);
}

TEST_CASE("membership agrees with the truncation oracle") {
    RingPtr r = R2();
    Ideal a = I(r, {"x^2", "y^3"});
    // colength 6, so m^6 sits inside the ideal.
    testing::TruncationOracle oracle(a, 6);
    for (const char* s :
         {"x^2", "y^3", "x^2*y", "x^2 + y^3", "x^3 - x^2*y^2", "x", "y", "x*y", "y^2", "x*y^2",
          "x*y^2 + x^2", "x^2 - y^2"}) {
        Poly f = P(r, s);
        CHECK(idealMem(f, a) == oracle.contains(f));
    }
    CHECK(idealMem(P(r, "x^2"), a));
    CHECK_FALSE(idealMem(P(r, "x*y^2"), a));
}

TEST_CASE("ideal operations") {
    RingPtr r = R2();
    Ideal m = maximalIdeal(r);

    CHECK(idealEquals(idealColonPoly(I(r, {"x^2", "x*y"}), P(r, "x")), m));
    CHECK(idealEquals(idealColon(I(r, {"x^2", "x*y", "y^2"}), m), m));
    CHECK(idealEquals(idealIntersection(I(r, {"x"}), I(r, {"y"})), I(r, {"x*y"})));
    CHECK(idealEquals(idealSum(I(r, {"x"}), I(r, {"y"})), m));
    CHECK(idealEquals(idealProduct(I(r, {"x", "y"}), I(r, {"x", "y"})), idealPower(m, 2)));
    CHECK(idealEquals(idealPower(m, 0), Ideal::unitIdeal(r)));
    CHECK(idealContains(m, idealPower(m, 3)));
    CHECK_FALSE(idealContains(idealPower(m, 3), m));

    // Saturation strips the origin component: x*m^2 saturated by m is (x).
    Ideal xm2 = idealProduct(I(r, {"x"}), idealPower(m, 2));
    CHECK(idealEquals(saturate(xm2, m), I(r, {"x"})));
}

TEST_CASE("elimination finds the branch relation") {
    RingPtr r3 = makeRing({"t", "x", "y"});
    Ideal a = I(r3, {"x - t^2", "y - t^3"});
    Ideal e = eliminate(a, {0});
    for (const Poly& g : e.gens())
        for (const auto& [exp, c] : g.terms()) {
            CHECK(exp[0] == 0);
            (void)c;
        }
    CHECK(idealMem(P(r3, "x^3 - y^2"), e));
    CHECK_FALSE(idealMem(P(r3, "x^2 - y"), e));
}

TEST_CASE("zero dimensionality at the origin") {
    RingPtr r = R2();
    CHECK(zeroDimAtOrigin(I(r, {"x^2", "y^3"})));
    CHECK(zeroDimAtOrigin(maximalIdeal(r)));
    CHECK_FALSE(zeroDimAtOrigin(I(r, {"x"})));
    CHECK_FALSE(zeroDimAtOrigin(I(r, {"x", "y - 1"})));  // vanishes away from 0
    CHECK_FALSE(zeroDimAtOrigin(Ideal::unitIdeal(r)));
    CHECK_FALSE(zeroDimAtOrigin(Ideal::zeroIdeal(r)));
}

TEST_CASE("colength and staircase") {
    RingPtr r = R2();
    CHECK(colength(I(r, {"x^2", "y^3"})) == 6);
    CHECK(colength(idealPower(maximalIdeal(r), 2)) == 3);
    CHECK(colength(I(r, {"x^2", "y^2"})) == 4);
    CHECK(colength(Ideal::unitIdeal(r)) == 0);

    auto sc = staircaseMonomials(idealPower(maximalIdeal(r), 2));
    CHECK(sc.size() == 3);
    CHECK(staircaseMonomials(Ideal::unitIdeal(r)).empty());
    CHECK_THROWS_AS(staircaseMonomials(I(r, {"x"})), PreconditionError);
    CHECK_THROWS_AS(colength(I(r, {"x"})), PreconditionError);
}

TEST_CASE("order and localization") {
    RingPtr r = R2();
    CHECK(idealOrder(I(r, {"x^3", "x*y", "y^4"})) == 2);
    CHECK(idealOrder(maximalIdeal(r)) == 1);

    CHECK(idealEquals(localizeAtOrigin(I(r, {"x^2*(x - 1)", "y"})), I(r, {"x^2", "y"})));
    CHECK(localizeAtOrigin(I(r, {"x - 1", "y - 1"})).isUnitIdeal());
    CHECK(idealEquals(localizeAtOrigin(I(r, {"x^2", "y^3"})), I(r, {"x^2", "y^3"})));
}

TEST_CASE("canonical generators are minimal and deterministic") {
    RingPtr r = R2();
    Ideal a = I(r, {"x^2", "x*y", "y^2", "x^2 + x*y"});
    auto g1 = canonicalGenerators(a);
    auto g2 = canonicalGenerators(I(r, {"y^2", "x^2", "x*y"}));
    REQUIRE(g1.size() == 3);
    REQUIRE(g2.size() == 3);
    for (size_t i = 0; i < g1.size(); ++i) CHECK(g1[i] == g2[i]);

    auto gm = canonicalGenerators(maximalIdeal(r));
    REQUIRE(gm.size() == 2);
    CHECK(idealEquals(Ideal(r, gm), maximalIdeal(r)));
}

TEST_CASE("pair limit reports a resource problem") {
    RingPtr r = R2();
    GroebnerLimits limits;
    limits.pairLimit = 0;
    std::vector<Poly> gens = {P(r, "x^2 + y"), P(r, "x*y + x")};
    CHECK_THROWS_AS(groebnerBasis(r, gens, MonomialOrder::degrevlex(), limits),
                    ResourceLimitError);
}
