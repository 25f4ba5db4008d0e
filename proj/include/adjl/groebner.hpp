#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "adjl/poly.hpp"

namespace adjl {

// Ideal in a polynomial ring. Copies share a cache holding the reduced monic
// degrevlex basis, which is unique per ideal and so doubles as an equality
// certificate.
class Ideal {
public:
    Ideal(RingPtr r, std::vector<Poly> gens);
    static Ideal zeroIdeal(RingPtr r) { return Ideal(std::move(r), {}); }
    static Ideal unitIdeal(RingPtr r);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }
    const std::vector<Poly>& basis() const;   // reduced monic degrevlex basis
    bool isZeroIdeal() const { return gens_.empty(); }
    bool isUnitIdeal() const;
    bool isMonomial() const;                  // every generator is a single term

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    struct Cache {
        std::mutex mu;
        std::optional<std::vector<Poly>> gb;
    };
    std::shared_ptr<Cache> cache_;
};

struct GroebnerLimits {
    size_t pairLimit = 200000;
};

// Reduced monic basis of the span of gens under the given order.
std::vector<Poly> groebnerBasis(const RingPtr& ring, const std::vector<Poly>& gens,
                                const MonomialOrder& order, const GroebnerLimits& limits = {});

// Full remainder of f modulo the (not necessarily reduced) basis gb. When
// quotients is non-null it receives one cofactor per basis element with
// f = sum quotients[k] * gb[k] + remainder.
Poly normalForm(const Poly& f, const std::vector<Poly>& gb, const MonomialOrder& order,
                std::vector<Poly>* quotients = nullptr);

Ideal maximalIdeal(const RingPtr& r);

bool idealMem(const Poly& f, const Ideal& I);
bool idealContains(const Ideal& outer, const Ideal& inner);
bool idealEquals(const Ideal& a, const Ideal& b);

Ideal idealSum(const Ideal& a, const Ideal& b);
Ideal idealProduct(const Ideal& a, const Ideal& b);
Ideal idealPower(const Ideal& a, int n);
Ideal idealIntersection(const Ideal& a, const Ideal& b);
Ideal idealColonPoly(const Ideal& I, const Poly& f);
Ideal idealColon(const Ideal& I, const Ideal& J);
Ideal saturate(const Ideal& I, const Ideal& J);   // I : J^infinity

// Ideal of elements not involving any of the listed variables, returned in
// the original ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// True when the zero set of I is exactly the origin, i.e. I is primary to
// the ideal of the variables (the unit ideal and the zero ideal both fail).
bool zeroDimAtOrigin(const Ideal& I);

// Vector-space dimension of ring/I; requires it to be finite.
long colength(const Ideal& I);

// The monomials outside the lead-term staircase of I, a vector-space basis
// of ring/I. Requires finite colength; capped well below the colength budget
// since callers materialize the list.
std::vector<ExpVec> staircaseMonomials(const Ideal& I);

// Minimum order of vanishing at the origin over the ideal; any generating
// set realizes it.
int idealOrder(const Ideal& I);

// Intersection of the primary components supported at the origin. Requires
// a finite zero set (the interesting case: transforms of finite-colength
// ideals); returns the unit ideal when nothing vanishes at the origin.
Ideal localizeAtOrigin(const Ideal& I);

// Minimal, primitively scaled, deterministically sorted generating set.
std::vector<Poly> canonicalGenerators(const Ideal& I);

}  // namespace adjl
