#pragma once

#include <vector>

#include "adjl/groebner.hpp"

namespace adjl {

// Supporting facet of the exponent polyhedron conv(exps) + R_{>=0}^d:
// { w : <normal, w> >= offset } holds on the polyhedron with equality on a
// face of dimension d - 1. Normals are primitive with nonnegative entries.
struct Facet {
    std::vector<long> normal;
    long offset;
};

// All facets of the exponent polyhedron of the given monomials; d <= 4.
std::vector<Facet> newtonFacets(const std::vector<ExpVec>& exps, int nvars);

// Integral closure of a nonzero monomial ideal: the monomials whose exponent
// lies in the exponent polyhedron.
Ideal monomialClosure(const Ideal& I);

// Adjoint of a nonzero monomial ideal: the monomials w with w + (1,..,1)
// interior to the exponent polyhedron (strictly inside every facet).
Ideal monomialAdjoint(const Ideal& I);

}  // namespace adjl
