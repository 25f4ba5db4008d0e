#include "doctest.h"

#include "adjl/expr.hpp"
#include "adjl/syzygy.hpp"

using namespace adjl;

namespace {
RingPtr R2() { return makeRing({"x", "y"}); }
Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Poly> v;
    for (const char* g : gens) v.push_back(parsePolynomial(g, r));
    return Ideal(r, v);
}
}  // namespace

TEST_CASE("syzygy rows kill the generators") {
    RingPtr r = R2();
    for (const Ideal& a : {maximalIdeal(r), idealPower(maximalIdeal(r), 2),
                           I(r, {"x^2", "x*y^2", "y^3"}), I(r, {"x^3", "y^2 - 2*x^2"})}) {
        SyzygyPresentation pres = syzygyPresentation(a);
        CHECK_FALSE(pres.rows.empty());
        for (const auto& row : pres.rows) {
            REQUIRE(row.size() == pres.gens.size());
            Poly sum(r);
            for (size_t i = 0; i < row.size(); ++i) sum = sum + row[i] * pres.gens[i];
            CHECK(sum.isZero());
        }
    }
}

TEST_CASE("fitting ideals of the maximal ideal") {
    RingPtr r = R2();
    Ideal m = maximalIdeal(r);
    CHECK(fittingIdeal(m, 0).isZeroIdeal());
    CHECK(idealEquals(fittingIdeal(m, 1), m));
    CHECK(fittingIdeal(m, 2).isUnitIdeal());
    CHECK(fittingIdeal(m, 5).isUnitIdeal());
}

TEST_CASE("fitting ideals of the squared maximal ideal") {
    RingPtr r = R2();
    Ideal m2 = idealPower(maximalIdeal(r), 2);
    CHECK(idealEquals(fittingIdeal(m2, 1), m2));
    CHECK(idealEquals(fittingIdeal(m2, 2), maximalIdeal(r)));
    CHECK(fittingIdeal(m2, 3).isUnitIdeal());
}

TEST_CASE("fitting ideal of a satellite ideal") {
    RingPtr r = R2();
    Ideal a = I(r, {"x^2", "x*y^2", "y^3"});
    CHECK(idealEquals(fittingIdeal(a, 2), maximalIdeal(r)));
    CHECK(fittingIdeal(a, 3).isUnitIdeal());
}

TEST_CASE("fitting ideals are presentation independent") {
    RingPtr r = R2();
    Ideal two = maximalIdeal(r);
    Ideal three = I(r, {"x", "y", "x + y"});
    CHECK(idealEquals(fittingIdeal(two, 1), fittingIdeal(three, 1)));
    CHECK(fittingIdeal(three, 2).isUnitIdeal());

    Ideal m2a = idealPower(maximalIdeal(r), 2);
    Ideal m2b = I(r, {"x^2", "x*y", "y^2", "x^2 + y^2"});
    CHECK(idealEquals(fittingIdeal(m2a, 2), fittingIdeal(m2b, 2)));
}

TEST_CASE("principal ideals") {
    RingPtr r = R2();
    Ideal p = I(r, {"x^2 + y^3"});
    CHECK(fittingIdeal(p, 0).isZeroIdeal());  // a free module has no relations
    CHECK(fittingIdeal(p, 1).isUnitIdeal());
}
