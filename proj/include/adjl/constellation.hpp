#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adjl/groebner.hpp"

namespace adjl {

// One blowup step. The chart [c] puts the direction y = c*x at the new
// origin via x -> x, y -> x*(y + c); the chart [inf] puts the vertical
// direction x = 0 there via x -> x*y, y -> y. In either chart the new
// exceptional curve is a coordinate axis: {x = 0} for [c], {y = 0} for [inf].
struct ChartStep {
    bool atInfinity = false;
    Fq center;  // used when !atInfinity; may lie in an extension field
};

struct InfNearPoint {
    explicit InfNearPoint(const RingPtr& r) : ring(r), xTotal(r), yTotal(r) {}

    int id = 0;
    int parent = -1;  // -1 marks the root
    int depth = 0;
    ChartStep step;          // how this point sits over its parent
    RingPtr ring;            // local coordinates at the point
    FieldPtr field;          // nullptr over the rationals
    int degOverRoot = 1;     // residue field degree over the root
    std::vector<int> proximateTo;  // ids of points whose exceptional curve
                                   // passes through this point (parent included)
    Poly xTotal, yTotal;     // the root coordinates written in local coordinates
    std::vector<std::pair<int, Poly>> excThrough;  // (ancestor id, local equation
                                                   // of its exceptional curve here)
    std::string path;        // printable route from the root, e.g. "[0][inf]"
};

// A finite set of points infinitely near the origin, closed under taking
// parents, with the root at index 0 and parents listed before children.
class Constellation {
public:
    RingPtr rootRing;
    std::vector<InfNearPoint> points;

    const InfNearPoint& at(int id) const;
    // Ids along the chain root..id, inclusive.
    std::vector<int> chainTo(int id) const;
    // Ids of the points proximate to id (scan of proximateTo lists).
    std::vector<int> proximateToThis(int id) const;
};

// A constellation together with the multiplicity of an ideal at each point.
struct PointBasis {
    Constellation cons;
    std::vector<int> mult;  // aligned with cons.points
};

// Base points of an ideal of finite colength in two variables, with the
// order of the successive transforms at each. Directions whose splitting
// falls outside the supported field fragment raise PartialConstellationError.
PointBasis basePoints(const Ideal& I);

// Transform of J under one blowup step: substitute the chart, divide the
// exceptional coordinate to the order of J, and optionally cut the result
// down to its component at the new origin.
Ideal transformIdeal(const Ideal& J, const ChartStep& step, bool localize);

// Transform along the chain from the root to the given point.
Ideal transformAtPoint(const Ideal& I, const Constellation& c, int id, bool localize);

// Order of vanishing at the point of the pullback of f, given in the root
// ring; f must be nonzero. The ideal version takes the minimum over
// generators.
int valuationValue(const Constellation& c, int id, const Poly& f);
int valuationValue(const Constellation& c, int id, const Ideal& I);

// An ancestor's local coordinate pair written in a descendant's chart.
std::pair<Poly, Poly> pullbackBetween(const Constellation& c, int ancestor, int descendant);

// Sum over the chain through the point of the pullback orders of each chain
// point's coordinate pair. Equals 1 plus the sum of the values at the points
// this one is proximate to; the correction term between an ideal's valuation
// values and its multiplier ideal's.
int jacobianValue(const Constellation& c, int id);

// r_i*deg_i - sum of r_q*deg_q over points q proximate to i; nonnegative at
// every point of a point basis.
long proximityExcess(const PointBasis& pb, int id);
bool proximityInequalitiesHold(const PointBasis& pb);

// Intersection numbers on the surface dominating the whole constellation:
// self-intersection of the exceptional curve of a point, and the degree of
// the canonical class on it.
long exceptionalSelfIntersection(const Constellation& c, int id);
long exceptionalCanonicalDegree(const Constellation& c, int id);

// Sum of deg_p * r_p (r_p + 1) / 2: the colength of the integral closure of
// any ideal with the given point basis.
long hoskinDeligneColength(const PointBasis& pb);

// Valuation value of the ideal with the given multiplicities at each point:
// the multiplicity there plus the values at the points it is proximate to.
std::vector<int> valuationTargets(const Constellation& c, const std::vector<int>& mult);

// Largest ideal whose pullback at each point vanishes to at least the target
// order (targets <= 0 impose nothing). Root ring must be over the rationals.
Ideal reconstructIdeal(const Constellation& c, const std::vector<int>& targets);

// Same ideal, computed above a subideal already known to satisfy the targets
// (verified, not trusted): only the staircase complement of `known` is
// solved for, which keeps the linear system small for high powers.
Ideal reconstructIdealAbove(const Constellation& c, const std::vector<int>& targets,
                            const Ideal& known);

// Integral closure of a finite-colength ideal in two variables: reconstruct
// from its own point basis.
Ideal integralClosureByPoints(const Ideal& I);

}  // namespace adjl
