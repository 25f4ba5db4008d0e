#pragma once

#include <optional>
#include <string>

#include "adjl/constellation.hpp"

namespace adjl {

// Engines computing the same ideal by different routes; Auto picks the facet
// engine for monomial input and the point-basis engine otherwise.
enum class AdjointMethod { Auto, Quotient, PointBasis, Definition, Fitting, Monomial };

AdjointMethod adjointMethodFromName(const std::string& name);
std::string adjointMethodName(AdjointMethod m);

// Two elements of I generating it up to integral closure, certified by the
// witness identity I^(n+1) = (a, b) I^n.
struct Reduction {
    Poly a, b;
    int witnessN = 0;
    int schedule = 0;  // which deterministic coefficient schedule produced it
};

// Search the deterministic schedules for a two-element reduction of a
// finite-colength ideal in two variables. Throws NoReductionError only after
// exhausting every schedule up to the colength witness bound.
Reduction findReduction(const Ideal& I);

// Number of deterministic coefficient schedules the search can draw on.
int reductionScheduleCount();

// Test one schedule in isolation: a certified reduction with witness
// n <= nLimit, or nothing when the schedule fails within that bound.
std::optional<Reduction> tryReductionSchedule(const Ideal& I, int schedule, int nLimit);

// Integral closure: facet description for monomial ideals (up to four
// variables), point-basis reconstruction otherwise (two variables, finite
// colength). Principal ideals and the zero and unit ideals are their own
// closures.
Ideal closureOf(const Ideal& I);

Ideal adjointOf(const Ideal& I, AdjointMethod method = AdjointMethod::Auto);

// Integral closure of I^n, from one point-basis computation (facet engine
// for monomial input).
Ideal closureOfPower(const Ideal& I, int n);

// Adjoint of I^n, computed by scaling the point basis of I once instead of
// expanding the power (monomial input goes through the facet engine).
Ideal adjointOfPower(const Ideal& I, int n);

// Least n0 in [1, nMax] with adjoint(I^(n+1)) = I * adjoint(I^n) for every
// n in [n0, nMax]; nMax + 1 when even n = nMax fails.
int stabilizationIndex(const Ideal& I, int nMax);

}  // namespace adjl
