#include "doctest.h"

#include "adjl/errors.hpp"
#include "adjl/upoly.hpp"

using namespace adjl;

namespace {
UPoly fromRoots(const std::vector<Rat>& roots) {
    UPoly p = UPoly::constant(Fq(ratOf(1)));
    for (const Rat& r : roots) p = p * UPoly::linearRoot(Fq(r));
    return p;
}
}  // namespace

TEST_CASE("univariate arithmetic") {
    UPoly y = UPoly::variable();
    UPoly p = (y - UPoly::constant(Fq(ratOf(1)))) * (y + UPoly::constant(Fq(ratOf(1))));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Fq(ratOf(-1)));
    CHECK(p.coeff(1).isZero());
    CHECK(p.coeff(2) == Fq(ratOf(1)));
    CHECK(p.evaluate(Fq(ratOf(2))) == Fq(ratOf(3)));

    auto [q, r] = p.divrem(y - UPoly::constant(Fq(ratOf(1))));
    CHECK(r.isZero());
    CHECK(q == y + UPoly::constant(Fq(ratOf(1))));
    CHECK(p.divExact(y + UPoly::constant(Fq(ratOf(1)))) == y - UPoly::constant(Fq(ratOf(1))));

    CHECK(p.derivative() == (y + y));
    CHECK((p - p).isZero());
    CHECK(p.monic() == p);
    CHECK(p.scaled(Fq(ratOf(3))).monic() == p);
}

TEST_CASE("gcd and squarefree decomposition") {
    UPoly a = fromRoots({ratOf(1), ratOf(1), ratOf(-2)});
    UPoly b = fromRoots({ratOf(1), ratOf(3)});
    CHECK(upolyGcd(a, b) == fromRoots({ratOf(1)}));
    CHECK(upolyGcd(UPoly(), UPoly()).isZero());

    auto parts = squarefreeDecomposition(a.scaled(Fq(ratOf(5))));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[0].first == fromRoots({ratOf(-2)}));
    CHECK(parts[1].second == 2);
    CHECK(parts[1].first == fromRoots({ratOf(1)}));
}

TEST_CASE("splitting over the rationals") {
    UPoly y = UPoly::variable();

    auto f1 = splitUnivariate(fromRoots({ratOf(1), ratOf(-1)}));
    REQUIRE(f1.size() == 2);
    for (const FactorInfo& fi : f1) {
        CHECK(fi.factor.degree() == 1);
        CHECK(fi.multiplicity == 1);
        CHECK(fi.provenIrreducible);
    }

    // y^2 - 2 is irreducible and certified as such.
    UPoly p2 = y * y - UPoly::constant(Fq(ratOf(2)));
    auto f2 = splitUnivariate(p2);
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].factor.degree() == 2);
    CHECK(f2[0].provenIrreducible);

    // y^3 - 1 = (y - 1)(y^2 + y + 1).
    UPoly p3 = y * y * y - UPoly::constant(Fq(ratOf(1)));
    auto f3 = splitUnivariate(p3);
    REQUIRE(f3.size() == 2);
    bool sawLinear = false, sawQuadratic = false;
    for (const FactorInfo& fi : f3) {
        if (fi.factor.degree() == 1) {
            sawLinear = true;
            CHECK(fi.factor.evaluate(Fq(ratOf(1))).isZero());
        }
        if (fi.factor.degree() == 2) {
            sawQuadratic = true;
            CHECK(fi.provenIrreducible);
        }
    }
    CHECK(sawLinear);
    CHECK(sawQuadratic);

    // Multiplicities survive: (y - 1/2)^2.
    auto f4 = splitUnivariate(fromRoots({ratOf(1, 2), ratOf(1, 2)}));
    REQUIRE(f4.size() == 1);
    CHECK(f4[0].multiplicity == 2);
    CHECK(f4[0].factor == fromRoots({ratOf(1, 2)}));
}

TEST_CASE("splitting over a quadratic extension") {
    auto F = std::make_shared<const NumberField>(std::vector<Rat>{ratOf(-2), ratOf(0), ratOf(1)});
    Fq s = Fq::gen(F);
    UPoly y = UPoly::variable(F);

    // y^2 - 2 splits as (y - s)(y + s) over Q(s).
    UPoly p = y * y - UPoly::constant(Fq::embed(F, ratOf(2)), F);
    auto f = splitUnivariate(p);
    REQUIRE(f.size() == 2);
    for (const FactorInfo& fi : f) {
        CHECK(fi.factor.degree() == 1);
        Fq root = -fi.factor.coeff(0);
        CHECK(root * root == Fq::embed(F, ratOf(2)));
    }

    // y^2 - 3 stays irreducible over Q(s), certified.
    UPoly q = y * y - UPoly::constant(Fq::embed(F, ratOf(3)), F);
    auto g = splitUnivariate(q);
    REQUIRE(g.size() == 1);
    CHECK(g[0].factor.degree() == 2);
    CHECK(g[0].provenIrreducible);

    // Degree three with genuinely extension coefficients is out of scope.
    UPoly cube = y * y * y - UPoly::constant(s, F);
    CHECK_THROWS_AS(splitUnivariate(cube), UnsupportedSplittingError);
}
