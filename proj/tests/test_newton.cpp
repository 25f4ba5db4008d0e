#include "doctest.h"

#include <algorithm>

#include "adjl/expr.hpp"
#include "adjl/newton.hpp"

using namespace adjl;

namespace {
Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Poly> v;
    for (const char* g : gens) v.push_back(parsePolynomial(g, r));
    return Ideal(r, v);
}
}  // namespace

TEST_CASE("facets of a plane staple") {
    auto facets = newtonFacets({{3, 0}, {0, 2}}, 2);
    std::vector<std::pair<std::vector<long>, long>> got;
    for (const Facet& f : facets) got.emplace_back(f.normal, f.offset);
    std::sort(got.begin(), got.end());
    std::vector<std::pair<std::vector<long>, long>> want = {
        {{0, 1}, 0}, {{1, 0}, 0}, {{2, 3}, 6}};
    std::sort(want.begin(), want.end());
    CHECK(got == want);
}

TEST_CASE("monomial closures") {
    RingPtr r = makeRing({"x", "y"});
    Ideal m = maximalIdeal(r);

    CHECK(idealEquals(monomialClosure(I(r, {"x^2", "y^3"})), I(r, {"x^2", "x*y^2", "y^3"})));
    CHECK(idealEquals(monomialClosure(I(r, {"x^3", "y^3"})), idealPower(m, 3)));
    CHECK(idealEquals(monomialClosure(I(r, {"x^2", "y^2"})), idealPower(m, 2)));
    // Already closed inputs are fixed.
    for (const Ideal& a : {I(r, {"x^2", "x*y^2", "y^3"}), I(r, {"x*y", "x^3", "y^3"}),
                           idealPower(m, 4), I(r, {"x"})}) {
        CHECK(idealEquals(monomialClosure(a), a));
        CHECK(idealEquals(monomialClosure(monomialClosure(a)), monomialClosure(a)));
    }

    RingPtr r4 = makeRing({"x", "y", "z", "w"});
    Ideal m4 = maximalIdeal(r4);
    CHECK(idealEquals(monomialClosure(I(r4, {"x^2", "y^2", "z^2", "w^2"})), idealPower(m4, 2)));
}

TEST_CASE("monomial adjoints") {
    RingPtr r = makeRing({"x", "y"});
    Ideal m = maximalIdeal(r);

    CHECK(monomialAdjoint(m).isUnitIdeal());
    CHECK(idealEquals(monomialAdjoint(I(r, {"x^3", "y^4"})), idealPower(m, 2)));
    CHECK(idealEquals(monomialAdjoint(I(r, {"x^2", "y^3"})), m));
    CHECK(idealEquals(monomialAdjoint(I(r, {"x^5", "y^2"})), I(r, {"y", "x^2"})));
    CHECK(idealEquals(monomialAdjoint(I(r, {"x^6", "y^4"})),
                      I(r, {"x^4", "x^3*y", "x*y^2", "y^3"})));
}

TEST_CASE("adjoints of powers of the maximal ideal match the closed form") {
    // In d variables the adjoint of m^n is the whole ring for n < d and
    // m^(n-d+1) otherwise; this closed form lives only here, as the oracle.
    for (int d = 2; d <= 4; ++d) {
        std::vector<std::string> vars = {"x", "y", "z", "w"};
        vars.resize(d);
        RingPtr r = makeRing(vars);
        Ideal m = maximalIdeal(r);
        int nTop = d == 2 ? 6 : (d == 3 ? 5 : 5);
        for (int n = 1; n <= nTop; ++n) {
            Ideal adj = monomialAdjoint(idealPower(m, n));
            if (n < d)
                CHECK(adj.isUnitIdeal());
            else
                CHECK(idealEquals(adj, idealPower(m, n - d + 1)));
        }
    }
}

TEST_CASE("regular sequences in three and four variables") {
    RingPtr r3 = makeRing({"x", "y", "z"});
    CHECK(monomialAdjoint(I(r3, {"x^2", "y^3", "z^4"})).isUnitIdeal());
    CHECK(idealEquals(monomialAdjoint(I(r3, {"x^3", "y^3", "z^3"})), maximalIdeal(r3)));
    CHECK(monomialAdjoint(I(r3, {"x^2", "y^2", "z^2"})).isUnitIdeal());

    RingPtr r4 = makeRing({"x", "y", "z", "w"});
    CHECK(monomialAdjoint(I(r4, {"x^2", "y^2", "z^2", "w^2"})).isUnitIdeal());
    // The only compact facet of (x^3,y^3,z^3,w^3) is a+b+c+d >= 3, so its
    // closure is m^3 and the adjoint is trivially the whole ring (n < d).
    Ideal m4 = maximalIdeal(r4);
    CHECK(idealEquals(monomialClosure(I(r4, {"x^3", "y^3", "z^3", "w^3"})), idealPower(m4, 3)));
    CHECK(monomialAdjoint(I(r4, {"x^3", "y^3", "z^3", "w^3"})).isUnitIdeal());
    CHECK(idealEquals(monomialAdjoint(idealPower(m4, 5)), idealPower(m4, 2)));
}
