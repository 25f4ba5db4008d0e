#include "adjl/adjoint.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "adjl/errors.hpp"
#include "adjl/newton.hpp"
#include "adjl/syzygy.hpp"

namespace adjl {

namespace {

// Common monomial factor of all generators; the zero vector when none.
ExpVec idealMonomialContent(const Ideal& I) {
    ExpVec v;
    bool first = true;
    for (const Poly& g : I.gens()) {
        ExpVec c = g.monomialContent();
        if (first) {
            v = c;
            first = false;
        } else {
            for (size_t i = 0; i < v.size(); ++i) v[i] = std::min(v[i], c[i]);
        }
    }
    return v;
}

bool isZeroExp(const ExpVec& e) {
    for (int32_t x : e)
        if (x != 0) return false;
    return true;
}

Ideal scaleByMonomial(const Ideal& I, const ExpVec& v) {
    Poly mono = Poly::monomial(I.ring(), v, Fq(1));
    std::vector<Poly> gens;
    gens.reserve(I.gens().size());
    for (const Poly& g : I.gens()) gens.push_back(g * mono);
    return Ideal(I.ring(), std::move(gens));
}

// Candidate pairs for the reduction search. The witness containment below
// is an identity of polynomial ideals, so a candidate is usable only when
// it vanishes exactly at the origin: a pair that is a perfectly good
// reduction in the local ring still fails the polynomial identity when its
// members share zeros elsewhere, and two generic combinations of three or
// more generators do acquire such zeros (Bezout). Besides full weighted
// combinations the table therefore carries splits that pit a subset of the
// generators against its complement, which keeps the surplus intersections
// on the coordinate curves cut out by the subset sums. Schedule 0 is the
// plain first-and-last pair.
struct ScheduleSpec {
    bool split;  // subset-vs-complement pair instead of two full combinations
    long p;      // split: subset selector; full: first weight
    long q;      // split: shared weight; full: second weight
};
constexpr ScheduleSpec kSchedules[] = {
    {false, 1, 2}, {true, 3, 1},  {false, 1, 3}, {true, 1, 1},  {false, 2, 3},
    {true, 2, 1},  {false, 1, 4}, {true, 3, 2},  {false, 3, 4}, {true, 5, 1},
    {false, 1, 5}, {true, 6, 1},  {false, 2, 5}, {true, 7, 1},  {false, 3, 5},
    {true, 1, 2},  {false, 4, 5}, {true, 2, 2},  {false, 1, 6}, {true, 11, 1},
    {false, 5, 6}, {true, 13, 1}, {false, 1, 7}, {true, 15, 1}, {false, 3, 7},
    {true, 3, 3},  {false, 5, 7}, {true, 7, 2},  {false, 2, 9}, {true, 15, 2},
    {false, 7, 9},
};

// Weighted combination of the generators selected by the mask; the weight
// powers follow the generator index, so different masks with the same
// weight stay independent.
Poly weightedCombination(const std::vector<Poly>& gens, long w, unsigned long mask) {
    Poly s(gens.front().ring());
    Rat pw(1);
    for (size_t i = 0; i < gens.size() && i < 64; ++i) {
        if (mask & (1ul << i)) s = s + gens[i].scaled(Fq(pw));
        pw *= w;
    }
    return s;
}

std::pair<Poly, Poly> schedulePair(const std::vector<Poly>& gens, int schedule) {
    if (schedule == 0) return {gens.front(), gens.back()};
    size_t k = std::min<size_t>(gens.size(), 64);
    unsigned long all = k >= 64 ? ~0ul : (1ul << k) - 1;
    const ScheduleSpec& sp = kSchedules[schedule - 1];
    if (!sp.split)
        return {weightedCombination(gens, sp.p, all), weightedCombination(gens, sp.q, all)};
    // The selector picks a nonempty proper subset among gens[1..], reduced
    // modulo the number of such subsets, so gens.front() is never stranded.
    unsigned long span = (1ul << std::min<size_t>(k - 1, 16)) - 1;
    if (!span) return {gens.front(), gens.back()};
    unsigned long pick = (1ul + (static_cast<unsigned long>(sp.p) - 1ul) % span) << 1;
    return {weightedCombination(gens, sp.q, all & ~pick), weightedCombination(gens, sp.q, pick)};
}

PointBasis adjointBasis(const Ideal& I, int power) {
    PointBasis pb = basePoints(I);
    for (int& r : pb.mult) r = std::max(0, power * r - 1);
    return pb;
}

Ideal adjointViaPointBasis(const Ideal& I) {
    PointBasis pb = adjointBasis(I, 1);
    return reconstructIdealAbove(pb.cons, valuationTargets(pb.cons, pb.mult), I);
}

// Valuation targets straight from the defining intersection: the value of
// the ideal at each point, less the correction term of the point. Targets
// that drop to zero or below impose nothing.
Ideal adjointViaDefinition(const Ideal& I) {
    PointBasis pb = basePoints(I);
    std::vector<int> targets = valuationTargets(pb.cons, pb.mult);
    for (size_t i = 0; i < targets.size(); ++i)
        targets[i] -= jacobianValue(pb.cons, static_cast<int>(i));
    return reconstructIdealAbove(pb.cons, targets, I);
}

// Quotient of a two-element reduction of the integral closure by the closure
// itself.
Ideal adjointViaQuotient(const Ideal& I) {
    Ideal C = closureOf(I);
    Reduction red = findReduction(C);
    Ideal I0(I.ring(), {red.a, red.b});
    return idealColon(I0, C);
}

// Minors of a presentation of the integral closure: the (s-2)-sized Fitting
// ideal, independent of the presentation chosen.
Ideal adjointViaFitting(const Ideal& I) {
    return fittingIdeal(closureOf(I), 2);
}

Ideal adjointDispatch(const Ideal& I, AdjointMethod method) {
    const RingPtr& R = I.ring();
    if (method == AdjointMethod::Monomial || (method == AdjointMethod::Auto && I.isMonomial())) {
        if (!I.isMonomial())
            throw UnsupportedError("the facet engine needs monomial generators");
        return monomialAdjoint(I);
    }
    if (R->nvars() != 2)
        throw UnsupportedError("non-monomial input is supported in two variables only");
    if (!zeroDimAtOrigin(I))
        throw UnsupportedError("non-principal input must vanish exactly at the origin");
    switch (method) {
        case AdjointMethod::Quotient: return adjointViaQuotient(I);
        case AdjointMethod::Definition: return adjointViaDefinition(I);
        case AdjointMethod::Fitting: return adjointViaFitting(I);
        case AdjointMethod::PointBasis:
        case AdjointMethod::Auto: return adjointViaPointBasis(I);
        default: throw UnsupportedError("unknown adjoint method");
    }
}

}  // namespace

AdjointMethod adjointMethodFromName(const std::string& name) {
    if (name == "auto") return AdjointMethod::Auto;
    if (name == "quotient") return AdjointMethod::Quotient;
    if (name == "point-basis") return AdjointMethod::PointBasis;
    if (name == "definition") return AdjointMethod::Definition;
    if (name == "fitting") return AdjointMethod::Fitting;
    if (name == "monomial") return AdjointMethod::Monomial;
    throw UnsupportedError("unknown method name: " + name);
}

std::string adjointMethodName(AdjointMethod m) {
    switch (m) {
        case AdjointMethod::Auto: return "auto";
        case AdjointMethod::Quotient: return "quotient";
        case AdjointMethod::PointBasis: return "point-basis";
        case AdjointMethod::Definition: return "definition";
        case AdjointMethod::Fitting: return "fitting";
        case AdjointMethod::Monomial: return "monomial";
    }
    return "auto";
}

Reduction findReduction(const Ideal& I) {
    if (I.ring()->nvars() != 2)
        throw PreconditionError("reductions are searched in two variables only");
    if (!zeroDimAtOrigin(I))
        throw PreconditionError("reduction search needs an ideal vanishing exactly at the origin");
    std::vector<Poly> gens = canonicalGenerators(I);
    long maxN = colength(I);
    int nSchedules = reductionScheduleCount();

    // Keep only pairs that vanish exactly at the origin; the others cannot
    // pass the witness containment no matter how deep it looks.
    struct Cand {
        int schedule;
        Poly a, b;
        Ideal pair;
    };
    std::vector<Cand> cands;
    for (int s = 0; s < nSchedules; ++s) {
        auto [a, b] = schedulePair(gens, s);
        Ideal pair(I.ring(), {a, b});
        if (zeroDimAtOrigin(pair)) cands.push_back(Cand{s, a, b, std::move(pair)});
    }

    std::vector<Ideal> pow{Ideal::unitIdeal(I.ring()), I};
    for (long n = 0; n <= maxN; ++n) {
        while (static_cast<long>(pow.size()) <= n + 1) pow.push_back(idealProduct(pow.back(), I));
        for (const Cand& c : cands)
            if (idealContains(idealProduct(c.pair, pow[n]), pow[n + 1]))
                return Reduction{c.a, c.b, static_cast<int>(n), c.schedule};
    }
    throw NoReductionError("no two-element reduction found within the witness bound " +
                           std::to_string(maxN));
}

int reductionScheduleCount() { return 1 + static_cast<int>(std::size(kSchedules)); }

std::optional<Reduction> tryReductionSchedule(const Ideal& I, int schedule, int nLimit) {
    if (I.ring()->nvars() != 2)
        throw PreconditionError("reductions are searched in two variables only");
    if (!zeroDimAtOrigin(I))
        throw PreconditionError("reduction search needs an ideal vanishing exactly at the origin");
    if (schedule < 0 || schedule >= reductionScheduleCount())
        throw PreconditionError("no such reduction schedule");
    std::vector<Poly> gens = canonicalGenerators(I);
    auto [a, b] = schedulePair(gens, schedule);
    Ideal I0(I.ring(), {a, b});
    if (!zeroDimAtOrigin(I0)) return std::nullopt;
    std::vector<Ideal> pow{Ideal::unitIdeal(I.ring()), I};
    for (long n = 0; n <= nLimit; ++n) {
        while (static_cast<long>(pow.size()) <= n + 1) pow.push_back(idealProduct(pow.back(), I));
        if (idealContains(idealProduct(I0, pow[n]), pow[n + 1]))
            return Reduction{a, b, static_cast<int>(n), schedule};
    }
    return std::nullopt;
}

Ideal closureOf(const Ideal& I) {
    if (I.isZeroIdeal() || I.isUnitIdeal()) return I;
    if (I.isMonomial()) return monomialClosure(I);
    if (canonicalGenerators(I).size() == 1) return I;  // principal, hence closed
    if (I.ring()->nvars() != 2)
        throw UnsupportedError("non-monomial closures are supported in two variables only");
    if (!zeroDimAtOrigin(I))
        throw UnsupportedError("non-principal closure input must vanish exactly at the origin");
    return integralClosureByPoints(I);
}

Ideal adjointOf(const Ideal& I, AdjointMethod method) {
    if (I.isZeroIdeal()) throw PreconditionError("adjoint of the zero ideal");
    if (I.isUnitIdeal()) return I;
    ExpVec content = idealMonomialContent(I);
    if (!isZeroExp(content)) {
        // adjoint(m I') = m adjoint(I') for a monomial (indeed any) factor m.
        std::vector<Poly> reduced;
        reduced.reserve(I.gens().size());
        for (const Poly& g : I.gens()) reduced.push_back(g.divExactMonomial(content));
        return scaleByMonomial(adjointOf(Ideal(I.ring(), std::move(reduced)), method), content);
    }
    if (canonicalGenerators(I).size() == 1) return I;  // adjoint(fR) = f adjoint(R)
    return adjointDispatch(I, method);
}

Ideal adjointOfPower(const Ideal& I, int n) {
    if (n < 1) throw PreconditionError("power must be at least 1");
    if (I.isZeroIdeal()) throw PreconditionError("adjoint of the zero ideal");
    if (I.isUnitIdeal()) return I;
    if (I.isMonomial()) return monomialAdjoint(idealPower(I, n));
    if (n == 1) return adjointOf(I);
    ExpVec content = idealMonomialContent(I);
    if (!isZeroExp(content)) {
        std::vector<Poly> reduced;
        reduced.reserve(I.gens().size());
        for (const Poly& g : I.gens()) reduced.push_back(g.divExactMonomial(content));
        ExpVec scaled = content;
        for (int32_t& e : scaled) e *= n;
        return scaleByMonomial(adjointOfPower(Ideal(I.ring(), std::move(reduced)), n), scaled);
    }
    if (canonicalGenerators(I).size() == 1) return idealPower(I, n);
    if (I.ring()->nvars() != 2)
        throw UnsupportedError("non-monomial input is supported in two variables only");
    if (!zeroDimAtOrigin(I))
        throw UnsupportedError("non-principal input must vanish exactly at the origin");
    // The point basis of I^n is the point basis of I scaled by n.
    PointBasis pb = adjointBasis(I, n);
    return reconstructIdealAbove(pb.cons, valuationTargets(pb.cons, pb.mult), idealPower(I, n));
}

Ideal closureOfPower(const Ideal& I, int n) {
    if (n < 1) throw PreconditionError("power must be at least 1");
    if (I.isZeroIdeal() || I.isUnitIdeal()) return I;
    if (I.isMonomial()) return monomialClosure(idealPower(I, n));
    if (n == 1) return closureOf(I);
    if (canonicalGenerators(I).size() == 1) return idealPower(I, n);
    if (I.ring()->nvars() != 2)
        throw UnsupportedError("non-monomial closures are supported in two variables only");
    if (!zeroDimAtOrigin(I))
        throw UnsupportedError("non-principal closure input must vanish exactly at the origin");
    PointBasis pb = basePoints(I);
    for (int& r : pb.mult) r *= n;
    return reconstructIdealAbove(pb.cons, valuationTargets(pb.cons, pb.mult), idealPower(I, n));
}

int stabilizationIndex(const Ideal& I, int nMax) {
    if (nMax < 1) throw PreconditionError("stabilization horizon must be at least 1");
    int lastFail = 0;
    Ideal prev = adjointOf(I);
    for (int n = 1; n <= nMax; ++n) {
        Ideal next = adjointOfPower(I, n + 1);
        if (!idealEquals(next, idealProduct(I, prev))) lastFail = n;
        prev = next;
    }
    return lastFail + 1;
}

}  // namespace adjl
