#include "adjl/constellation.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "adjl/errors.hpp"
#include "adjl/upoly.hpp"

namespace adjl {

namespace {

constexpr int kDepthCap = 48;
constexpr size_t kPointCap = 512;

// Images of the parent coordinates inside the child chart.
std::vector<Poly> chartImages(const RingPtr& childRing, const ChartStep& step) {
    Poly x = Poly::variable(childRing, 0);
    Poly y = Poly::variable(childRing, 1);
    if (step.atInfinity) return {x * y, y};
    Poly c = Poly::constant(childRing, step.center);
    return {x, x * (y + c)};
}

ExpVec excExponent(const ChartStep& step, int r) {
    return step.atInfinity ? ExpVec{0, static_cast<int32_t>(r)}
                           : ExpVec{static_cast<int32_t>(r), 0};
}

Fq originValue(const Poly& g) { return g.coeff(ExpVec{0, 0}); }

bool vanishAtOrigin(const std::vector<Poly>& gens) {
    for (const Poly& g : gens)
        if (!originValue(g).isZero()) return false;
    return true;
}

// Restriction of g to {x = 0}, as a univariate polynomial in the second
// variable over the coefficient field of g's ring.
UPoly restrictToSecondVar(const Poly& g) {
    const FieldPtr& f = g.ring()->field();
    int d = -1;
    for (const auto& t : g.terms())
        if (t.first[0] == 0) d = std::max(d, static_cast<int>(t.first[1]));
    if (d < 0) return UPoly(f);
    std::vector<Fq> c(static_cast<size_t>(d) + 1, Fq(0));
    for (const auto& t : g.terms())
        if (t.first[0] == 0) c[t.first[1]] = t.second;
    return UPoly(f, std::move(c));
}

std::string stepLabel(const ChartStep& step) {
    if (step.atInfinity) return "[inf]";
    return "[" + step.center.toString() + "]";
}

// Transform of each generator under one step: substitute the chart and
// divide out the exceptional coordinate to the order r. Every term of a
// generator has total degree at least its order, which is at least r, so
// the division is exact generator by generator.
std::vector<Poly> transformGens(const std::vector<Poly>& gens, const RingPtr& childRing,
                                const ChartStep& step, int r) {
    std::vector<Poly> images = chartImages(childRing, step);
    ExpVec exc = excExponent(step, r);
    std::vector<Poly> out;
    out.reserve(gens.size());
    for (const Poly& g : gens)
        out.push_back(g.substitute(childRing, images).divExactMonomial(exc));
    return out;
}

struct Builder {
    Constellation cons;
    std::vector<int> mult;

    int addPoint(InfNearPoint p) {
        if (cons.points.size() >= kPointCap)
            throw ResourceLimitError("constellation larger than " + std::to_string(kPointCap) + " points");
        p.id = static_cast<int>(cons.points.size());
        cons.points.push_back(std::move(p));
        mult.push_back(0);
        return cons.points.back().id;
    }

    void makeChild(const InfNearPoint& parent, const Ideal& J, int r, const ChartStep& step,
                   const FieldPtr& childField, int childDeg) {
        RingPtr childRing = sameField(childField, parent.field)
                                ? parent.ring
                                : makeRing(cons.rootRing->vars(), childField);
        Ideal Jc(childRing, transformGens(J.gens(), childRing, step, r));

        std::vector<Poly> imgs = chartImages(childRing, step);
        InfNearPoint child(childRing);
        child.parent = parent.id;
        child.depth = parent.depth + 1;
        child.step = step;
        child.ring = childRing;
        child.field = childField;
        child.degOverRoot = childDeg;
        child.xTotal = parent.xTotal.substitute(childRing, imgs);
        child.yTotal = parent.yTotal.substitute(childRing, imgs);
        child.path = parent.path + stepLabel(step);
        // Exceptional curves through the child: the parent's own, whose local
        // equation is the exceptional coordinate, plus every older curve whose
        // strict transform still passes through the new origin.
        child.excThrough.emplace_back(parent.id, Poly::variable(childRing, step.atInfinity ? 1 : 0));
        for (const auto& anc : parent.excThrough) {
            int m = *anc.second.ord();
            Poly strict = anc.second.substitute(childRing, imgs).divExactMonomial(excExponent(step, m));
            if (originValue(strict).isZero()) child.excThrough.emplace_back(anc.first, strict);
        }
        for (const auto& pr : child.excThrough) child.proximateTo.push_back(pr.first);
        std::sort(child.proximateTo.begin(), child.proximateTo.end());

        int cid = addPoint(std::move(child));
        expand(cid, Jc);
    }

    void expand(int pid, const Ideal& J) {
        // J is the successive transform at this point. It vanishes at the
        // origin; it may also vanish at points away from the origin (sibling
        // directions dragged along from earlier levels), but those never meet
        // the new exceptional curve and so touch neither the order at the
        // origin nor the direction search below.
        const InfNearPoint parent = cons.points[pid];
        if (parent.depth >= kDepthCap)
            throw ResourceLimitError("blowup chain deeper than " + std::to_string(kDepthCap));
        int r = idealOrder(J);
        mult[pid] = r;

        // Directions y = c x: common roots of the transformed generators on
        // the new exceptional curve in the finite chart. The restriction of
        // g(x, xy)/x^r to {x = 0} is the order-r part of g evaluated at (1, y),
        // so the gcd below is nonzero.
        UPoly G(parent.field);
        for (const Poly& t : transformGens(J.gens(), parent.ring, ChartStep{false, Fq(0)}, r))
            G = upolyGcd(G, restrictToSecondVar(t));
        if (G.degree() >= 1) {
            std::vector<FactorInfo> factors;
            try {
                factors = splitUnivariate(G);
            } catch (const UnsupportedSplittingError& e) {
                throw PartialConstellationError(e.what(), parent.path.empty() ? "root" : parent.path);
            }
            for (const FactorInfo& fi : factors) {
                int d = fi.factor.degree();
                Fq center;
                FieldPtr childField = parent.field;
                int childDeg = parent.degOverRoot;
                if (d == 1) {
                    center = -fi.factor.coeff(0);
                } else {
                    if (!fi.provenIrreducible)
                        throw PartialConstellationError(
                            "direction polynomial of degree " + std::to_string(d) + " not resolved",
                            parent.path.empty() ? "root" : parent.path);
                    if (parent.field)
                        throw PartialConstellationError(
                            "direction needs a second field extension",
                            parent.path.empty() ? "root" : parent.path);
                    std::vector<Rat> mp;
                    mp.reserve(fi.factor.coeffs().size());
                    for (const Fq& a : fi.factor.coeffs()) mp.push_back(a.rational());
                    childField = std::make_shared<const NumberField>(std::move(mp));
                    center = Fq::gen(childField);
                    childDeg = d;
                }
                makeChild(cons.points[pid], J, r, ChartStep{false, center}, childField, childDeg);
            }
        }

        // The vertical direction {x = 0} lands at the origin of the infinite
        // chart exactly when every transformed generator vanishes there.
        if (vanishAtOrigin(transformGens(J.gens(), parent.ring, ChartStep{true, Fq(0)}, r)))
            makeChild(cons.points[pid], J, r, ChartStep{true, Fq(0)}, parent.field, parent.degOverRoot);
    }
};

}  // namespace

const InfNearPoint& Constellation::at(int id) const {
    if (id < 0 || static_cast<size_t>(id) >= points.size())
        throw PreconditionError("no point with id " + std::to_string(id));
    return points[id];
}

std::vector<int> Constellation::chainTo(int id) const {
    std::vector<int> chain;
    for (int cur = at(id).id; cur != -1; cur = points[cur].parent) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::vector<int> Constellation::proximateToThis(int id) const {
    std::vector<int> out;
    for (const InfNearPoint& q : points)
        if (std::find(q.proximateTo.begin(), q.proximateTo.end(), id) != q.proximateTo.end())
            out.push_back(q.id);
    return out;
}

PointBasis basePoints(const Ideal& I) {
    const RingPtr& r = I.ring();
    if (r->nvars() != 2) throw PreconditionError("point bases need exactly two variables");
    if (!zeroDimAtOrigin(I))
        throw PreconditionError("point bases need an ideal vanishing exactly at the origin");
    Builder b;
    b.cons.rootRing = r;
    InfNearPoint root(r);
    root.parent = -1;
    root.depth = 0;
    root.ring = r;
    root.field = r->field();
    root.degOverRoot = 1;
    root.xTotal = Poly::variable(r, 0);
    root.yTotal = Poly::variable(r, 1);
    b.addPoint(std::move(root));
    b.expand(0, I);
    return {std::move(b.cons), std::move(b.mult)};
}

Ideal transformIdeal(const Ideal& J, const ChartStep& step, bool localize) {
    const RingPtr& ring = J.ring();
    if (ring->nvars() != 2) throw PreconditionError("transforms need exactly two variables");
    if (J.isZeroIdeal()) throw PreconditionError("transform of the zero ideal");
    FieldPtr childField = ring->field();
    if (!step.atInfinity && step.center.field()) {
        if (childField && !sameField(childField, step.center.field()))
            throw AmbientMismatchError("chart center lies in a different extension field");
        childField = step.center.field();
    }
    RingPtr childRing = sameField(childField, ring->field()) ? ring : makeRing(ring->vars(), childField);
    Ideal out(childRing, transformGens(J.gens(), childRing, step, idealOrder(J)));
    return localize ? localizeAtOrigin(out) : out;
}

Ideal transformAtPoint(const Ideal& I, const Constellation& c, int id, bool localize) {
    if (!sameRing(I.ring(), c.rootRing))
        throw AmbientMismatchError("ideal does not live in the constellation's root ring");
    Ideal J = I;
    for (int pid : c.chainTo(id)) {
        if (pid == 0) continue;
        J = transformIdeal(J, c.at(pid).step, false);
        if (localize) J = localizeAtOrigin(J);
    }
    return J;
}

int valuationValue(const Constellation& c, int id, const Poly& f) {
    if (!sameRing(f.ring(), c.rootRing))
        throw AmbientMismatchError("polynomial does not live in the constellation's root ring");
    if (f.isZero()) throw PreconditionError("valuation of the zero polynomial");
    const InfNearPoint& p = c.at(id);
    return *f.substitute(p.ring, {p.xTotal, p.yTotal}).ord();
}

int valuationValue(const Constellation& c, int id, const Ideal& I) {
    if (I.isZeroIdeal()) throw PreconditionError("valuation of the zero ideal");
    int v = -1;
    for (const Poly& g : I.gens()) {
        int w = valuationValue(c, id, g);
        if (v < 0 || w < v) v = w;
    }
    return v;
}

std::pair<Poly, Poly> pullbackBetween(const Constellation& c, int ancestor, int descendant) {
    std::vector<int> chain = c.chainTo(descendant);
    auto pos = std::find(chain.begin(), chain.end(), ancestor);
    if (pos == chain.end())
        throw PreconditionError("pullback source is not an ancestor of the target point");
    Poly px = Poly::variable(c.at(ancestor).ring, 0);
    Poly py = Poly::variable(c.at(ancestor).ring, 1);
    for (auto it = pos + 1; it != chain.end(); ++it) {
        const InfNearPoint& s = c.at(*it);
        std::vector<Poly> imgs = chartImages(s.ring, s.step);
        px = px.substitute(s.ring, imgs);
        py = py.substitute(s.ring, imgs);
    }
    return {px, py};
}

int jacobianValue(const Constellation& c, int id) {
    int sum = 0;
    for (int q : c.chainTo(id)) {
        auto [px, py] = pullbackBetween(c, q, id);
        sum += std::min(*px.ord(), *py.ord());
    }
    return sum;
}

long proximityExcess(const PointBasis& pb, int id) {
    const Constellation& c = pb.cons;
    long s = static_cast<long>(pb.mult[id]) * c.at(id).degOverRoot;
    for (int q : c.proximateToThis(id)) s -= static_cast<long>(pb.mult[q]) * c.at(q).degOverRoot;
    return s;
}

bool proximityInequalitiesHold(const PointBasis& pb) {
    for (const InfNearPoint& p : pb.cons.points)
        if (proximityExcess(pb, p.id) < 0) return false;
    return true;
}

long exceptionalSelfIntersection(const Constellation& c, int id) {
    long s = -static_cast<long>(c.at(id).degOverRoot);
    for (int q : c.proximateToThis(id)) s -= c.at(q).degOverRoot;
    return s;
}

long exceptionalCanonicalDegree(const Constellation& c, int id) {
    long s = -static_cast<long>(c.at(id).degOverRoot);
    for (int q : c.proximateToThis(id)) s += c.at(q).degOverRoot;
    return s;
}

long hoskinDeligneColength(const PointBasis& pb) {
    long s = 0;
    for (size_t i = 0; i < pb.mult.size(); ++i) {
        long r = pb.mult[i];
        s += pb.cons.points[i].degOverRoot * (r * (r + 1) / 2);
    }
    return s;
}

std::vector<int> valuationTargets(const Constellation& c, const std::vector<int>& mult) {
    if (mult.size() != c.points.size())
        throw PreconditionError("one multiplicity per constellation point expected");
    std::vector<int> rho(mult.size(), 0);
    for (size_t i = 0; i < c.points.size(); ++i) {
        int s = mult[i];
        for (int a : c.points[i].proximateTo) s += rho[a];
        rho[i] = s;
    }
    return rho;
}

namespace {

// Basis of { f in the span of the given monomials : v_p(f) >= targets[p] },
// by exact rational elimination on the vanishing conditions of the pullbacks
// below each target order.
std::vector<Poly> valuationKernel(const Constellation& c, const std::vector<int>& targets,
                                  const std::vector<ExpVec>& cols) {
    const RingPtr& R = c.rootRing;
    size_t nc = cols.size();

    // One row per (point, low-order exponent of the pullback, residue field
    // coordinate): the pullback of a member must vanish below the target.
    std::vector<std::vector<Rat>> rows;
    for (size_t pi = 0; pi < c.points.size(); ++pi) {
        int need = targets[pi];
        if (need <= 0) continue;
        const InfNearPoint& p = c.points[pi];
        int fdeg = p.field ? p.field->degree() : 1;
        std::map<ExpVec, size_t> blockAt;
        for (size_t j = 0; j < nc; ++j) {
            Poly mono = Poly::monomial(R, cols[j], Fq(1));
            Poly pull = mono.substituteTruncated(p.ring, {p.xTotal, p.yTotal}, need - 1);
            for (const auto& term : pull.terms()) {
                auto it = blockAt.find(term.first);
                if (it == blockAt.end()) {
                    it = blockAt.emplace(term.first, rows.size()).first;
                    for (int k = 0; k < fdeg; ++k) rows.emplace_back(nc, Rat(0));
                }
                const std::vector<Rat>& co = term.second.coords();
                for (size_t k = 0; k < co.size(); ++k) rows[it->second + k][j] = co[k];
            }
        }
    }

    // Exact kernel over the rationals.
    size_t nr = rows.size();
    std::vector<size_t> pivotCol;
    size_t rank = 0;
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t sel = nr;
        for (size_t i = rank; i < nr; ++i)
            if (rows[i][col] != 0) { sel = i; break; }
        if (sel == nr) continue;
        std::swap(rows[rank], rows[sel]);
        Rat inv = 1 / rows[rank][col];
        for (size_t j = col; j < nc; ++j) rows[rank][j] *= inv;
        for (size_t i = 0; i < nr; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (size_t j = col; j < nc; ++j) rows[i][j] -= f * rows[rank][j];
        }
        pivotCol.push_back(col);
        ++rank;
    }

    std::vector<bool> isPivot(nc, false);
    for (size_t col : pivotCol) isPivot[col] = true;
    std::vector<Poly> gens;
    for (size_t fc = 0; fc < nc; ++fc) {
        if (isPivot[fc]) continue;
        Poly f(R);
        f.addTerm(cols[fc], Fq(1));
        for (size_t rI = 0; rI < rank; ++rI)
            if (rows[rI][fc] != 0) f.addTerm(cols[pivotCol[rI]], Fq(-rows[rI][fc]));
        gens.push_back(std::move(f));
    }
    return gens;
}

void checkReconstructArgs(const Constellation& c, const std::vector<int>& targets) {
    if (c.rootRing->field()) throw UnsupportedError("reconstruction needs a rational root ring");
    if (targets.size() != c.points.size())
        throw PreconditionError("one valuation target per constellation point expected");
}

}  // namespace

Ideal reconstructIdeal(const Constellation& c, const std::vector<int>& targets) {
    checkReconstructArgs(c, targets);
    const RingPtr& R = c.rootRing;
    int delta = 0;
    for (int t : targets) delta = std::max(delta, t);
    if (delta <= 0) return Ideal::unitIdeal(R);

    // Every monomial of degree delta meets every target (a pullback only
    // raises the order), so the ideal is generated in degrees <= delta and
    // the columns below suffice.
    std::vector<ExpVec> cols;
    for (int d = 0; d <= delta; ++d)
        for (int a = d; a >= 0; --a)
            cols.push_back(ExpVec{static_cast<int32_t>(a), static_cast<int32_t>(d - a)});
    return Ideal(R, valuationKernel(c, targets, cols));
}

Ideal reconstructIdealAbove(const Constellation& c, const std::vector<int>& targets,
                            const Ideal& known) {
    checkReconstructArgs(c, targets);
    const RingPtr& R = c.rootRing;
    if (!sameRing(known.ring(), R))
        throw AmbientMismatchError("known subideal lives in a different ring");
    int delta = 0;
    for (int t : targets) delta = std::max(delta, t);
    if (delta <= 0) return Ideal::unitIdeal(R);

    // The target ideal splits as known plus its intersection with the span
    // of the monomials under the staircase of known, so it is enough to
    // solve the vanishing conditions on that complement. The containment of
    // known itself is re-verified here rather than trusted.
    for (const Poly& g : known.gens())
        for (size_t pi = 0; pi < c.points.size(); ++pi)
            if (targets[pi] > 0 && valuationValue(c, static_cast<int>(pi), g) < targets[pi])
                throw InternalCheckError("supplied subideal violates a valuation target");

    std::vector<ExpVec> cols = staircaseMonomials(known);
    std::vector<Poly> gens = known.gens();
    for (Poly& g : valuationKernel(c, targets, cols)) gens.push_back(std::move(g));
    return Ideal(R, std::move(gens));
}

Ideal integralClosureByPoints(const Ideal& I) {
    PointBasis pb = basePoints(I);
    return reconstructIdealAbove(pb.cons, valuationTargets(pb.cons, pb.mult), I);
}

}  // namespace adjl
