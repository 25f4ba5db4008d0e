#include "adjl/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "adjl/errors.hpp"
#include "adjl/upoly.hpp"

namespace adjl {

namespace {

const MonomialOrder kDegrevlex = MonomialOrder::degrevlex();

bool isSingleTerm(const Poly& p) { return p.nterms() == 1; }

// Minimal monomial generating set (monic) from a list of term exponents.
std::vector<ExpVec> minimalExps(std::vector<ExpVec> exps) {
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    std::vector<ExpVec> keep;
    for (const ExpVec& e : exps) {
        bool redundant = false;
        for (const ExpVec& f : exps)
            if (f != e && expDivides(f, e)) { redundant = true; break; }
        if (!redundant) keep.push_back(e);
    }
    return keep;
}

std::vector<Poly> monomialBasis(const RingPtr& ring, const std::vector<Poly>& gens) {
    std::vector<ExpVec> exps;
    for (const Poly& g : gens) exps.push_back(g.terms().begin()->first);
    std::vector<ExpVec> keep = minimalExps(std::move(exps));
    std::sort(keep.begin(), keep.end(),
              [&](const ExpVec& a, const ExpVec& b) { return kDegrevlex.less(a, b); });
    std::vector<Poly> out;
    out.reserve(keep.size());
    for (ExpVec& e : keep) out.push_back(Poly::monomial(ring, std::move(e), Fq(1)));
    return out;
}

struct SPair {
    int i, j;
    ExpVec lcm;
};

// Pair-set maintenance in the style of Gebauer and Moeller: new pairs with a
// strictly smaller lcm supersede others, duplicate lcms collapse (dropping
// the whole class when a member has coprime leads), and old pairs whose lcm
// the new lead divides without matching either mixed lcm are discarded.
void updatePairs(std::vector<SPair>& pairs, const std::vector<ExpVec>& leads, int t) {
    const ExpVec& lt = leads[static_cast<size_t>(t)];
    std::vector<SPair> cand;
    cand.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) cand.push_back({i, t, expLcm(leads[static_cast<size_t>(i)], lt)});

    std::vector<char> drop(cand.size(), 0);
    for (size_t a = 0; a < cand.size(); ++a)
        for (size_t b = 0; b < cand.size(); ++b) {
            if (a == b || drop[a]) continue;
            if (cand[b].lcm != cand[a].lcm && expDivides(cand[b].lcm, cand[a].lcm)) drop[a] = 1;
        }

    std::map<ExpVec, std::vector<size_t>> classes;
    for (size_t a = 0; a < cand.size(); ++a)
        if (!drop[a]) classes[cand[a].lcm].push_back(a);
    for (auto& entry : classes) {
        std::vector<size_t>& members = entry.second;
        bool coprime = false;
        for (size_t a : members)
            if (expCoprime(leads[static_cast<size_t>(cand[a].i)], lt)) { coprime = true; break; }
        if (coprime) {
            for (size_t a : members) drop[a] = 1;
        } else {
            for (size_t k = 1; k < members.size(); ++k) drop[members[k]] = 1;
        }
    }

    std::vector<SPair> kept;
    for (auto& p : pairs) {
        bool divisible = expDivides(lt, p.lcm);
        if (divisible && expLcm(leads[static_cast<size_t>(p.i)], lt) != p.lcm &&
            expLcm(leads[static_cast<size_t>(p.j)], lt) != p.lcm)
            continue;
        kept.push_back(std::move(p));
    }
    for (size_t a = 0; a < cand.size(); ++a)
        if (!drop[a]) kept.push_back(std::move(cand[a]));
    pairs = std::move(kept);
}

Poly sPolynomial(const Poly& f, const Poly& g, const ExpVec& lcm, const MonomialOrder& order) {
    auto [ef, cf] = f.leading(order);
    auto [eg, cg] = g.leading(order);
    Poly mf = Poly::monomial(f.ring(), expDiff(lcm, ef), cf.inverse());
    Poly mg = Poly::monomial(g.ring(), expDiff(lcm, eg), cg.inverse());
    return mf * f - mg * g;
}

std::vector<Poly> interReduce(std::vector<Poly> basis, const MonomialOrder& order) {
    // Minimal subset: drop any element whose lead another kept lead divides.
    std::sort(basis.begin(), basis.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading(order).first, b.leading(order).first);
    });
    std::vector<Poly> minimal;
    std::vector<ExpVec> keptLeads;
    for (Poly& g : basis) {
        ExpVec lt = g.leading(order).first;
        bool covered = false;
        for (const ExpVec& e : keptLeads)
            if (expDivides(e, lt)) { covered = true; break; }
        if (!covered) {
            keptLeads.push_back(std::move(lt));
            minimal.push_back(std::move(g));
        }
    }
    // Tail reduction; lead terms are stable, so one pass suffices.
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normalForm(minimal[i], others, order);
        minimal[i] = minimal[i].scaled(minimal[i].leading(order).second.inverse());
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
        return order.less(a.leading(order).first, b.leading(order).first);
    });
    return minimal;
}

long smallestPair(const std::vector<SPair>& pairs, const MonomialOrder& order) {
    long best = 0;
    for (size_t k = 1; k < pairs.size(); ++k)
        if (order.less(pairs[k].lcm, pairs[static_cast<size_t>(best)].lcm)) best = static_cast<long>(k);
    return best;
}

}  // namespace

std::vector<Poly> groebnerBasis(const RingPtr& ring, const std::vector<Poly>& gens,
                                const MonomialOrder& order, const GroebnerLimits& limits) {
    std::vector<Poly> G;
    std::vector<ExpVec> leads;
    std::vector<SPair> pairs;
    for (const Poly& g : gens) {
        if (!sameRing(g.ring(), ring)) throw AmbientMismatchError("basis generator from a different ring");
        if (g.isZero()) continue;
        Poly m = g.scaled(g.leading(order).second.inverse());
        G.push_back(std::move(m));
        leads.push_back(G.back().leading(order).first);
        updatePairs(pairs, leads, static_cast<int>(G.size()) - 1);
    }
    size_t processed = 0;
    while (!pairs.empty()) {
        long k = smallestPair(pairs, order);
        SPair p = std::move(pairs[static_cast<size_t>(k)]);
        pairs.erase(pairs.begin() + k);
        if (++processed > limits.pairLimit)
            throw ResourceLimitError("basis computation exceeded the pair budget");
        Poly s = sPolynomial(G[static_cast<size_t>(p.i)], G[static_cast<size_t>(p.j)], p.lcm, order);
        Poly r = normalForm(s, G, order);
        if (r.isZero()) continue;
        G.push_back(r.scaled(r.leading(order).second.inverse()));
        leads.push_back(G.back().leading(order).first);
        updatePairs(pairs, leads, static_cast<int>(G.size()) - 1);
    }
    if (G.empty()) return G;
    return interReduce(std::move(G), order);
}

Poly normalForm(const Poly& f, const std::vector<Poly>& gb, const MonomialOrder& order,
                std::vector<Poly>* quotients) {
    if (quotients) quotients->assign(gb.size(), Poly(f.ring()));
    std::vector<ExpVec> leads;
    std::vector<Fq> leadCoefs;
    leads.reserve(gb.size());
    for (const Poly& g : gb) {
        auto [e, c] = g.leading(order);
        leads.push_back(std::move(e));
        leadCoefs.push_back(std::move(c));
    }
    Poly p = f;
    Poly rem(f.ring());
    while (!p.isZero()) {
        auto [e, c] = p.leading(order);
        bool reduced = false;
        for (size_t k = 0; k < gb.size(); ++k) {
            if (!expDivides(leads[k], e)) continue;
            Poly mono = Poly::monomial(f.ring(), expDiff(e, leads[k]), c / leadCoefs[k]);
            p = p - mono * gb[k];
            if (quotients) (*quotients)[k] = (*quotients)[k] + mono;
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly t = Poly::monomial(f.ring(), e, c);
            rem = rem + t;
            p = p - t;
        }
    }
    return rem;
}

// ------------------------------------------------------------------- Ideal

Ideal::Ideal(RingPtr r, std::vector<Poly> gens)
    : ring_(std::move(r)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw PreconditionError("ideal needs a ring");
    for (Poly& g : gens) {
        if (g.isZero()) continue;
        if (!sameRing(g.ring(), ring_)) throw AmbientMismatchError("generator from a different ring");
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unitIdeal(RingPtr r) {
    Poly one = Poly::constant(r, Fq(1));
    return Ideal(std::move(r), {std::move(one)});
}

const std::vector<Poly>& Ideal::basis() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->gb) {
        if (isMonomial()) cache_->gb = monomialBasis(ring_, gens_);
        else cache_->gb = groebnerBasis(ring_, gens_, kDegrevlex);
    }
    return *cache_->gb;
}

bool Ideal::isUnitIdeal() const {
    for (const Poly& g : gens_)
        if (g.isConstant() && !g.isZero()) return true;
    if (gens_.empty()) return false;
    const std::vector<Poly>& b = basis();
    return b.size() == 1 && b[0].isConstant();
}

bool Ideal::isMonomial() const {
    for (const Poly& g : gens_)
        if (!isSingleTerm(g)) return false;
    return true;
}

Ideal maximalIdeal(const RingPtr& r) {
    std::vector<Poly> gens;
    for (int i = 0; i < r->nvars(); ++i) gens.push_back(Poly::variable(r, i));
    return Ideal(r, std::move(gens));
}

// -------------------------------------------------------------- membership

bool idealMem(const Poly& f, const Ideal& I) {
    if (!sameRing(f.ring(), I.ring())) throw AmbientMismatchError("membership across rings");
    if (f.isZero()) return true;
    if (I.isZeroIdeal()) return false;
    if (I.isMonomial()) {
        const std::vector<Poly>& b = I.basis();
        for (const auto& [e, c] : f.terms()) {
            bool covered = false;
            for (const Poly& m : b)
                if (expDivides(m.terms().begin()->first, e)) { covered = true; break; }
            if (!covered) return false;
        }
        return true;
    }
    return normalForm(f, I.basis(), kDegrevlex).isZero();
}

bool idealContains(const Ideal& outer, const Ideal& inner) {
    for (const Poly& g : inner.gens())
        if (!idealMem(g, outer)) return false;
    return true;
}

bool idealEquals(const Ideal& a, const Ideal& b) {
    if (!sameRing(a.ring(), b.ring())) return false;
    const std::vector<Poly>& ba = a.basis();
    const std::vector<Poly>& bb = b.basis();
    if (ba.size() != bb.size()) return false;
    for (size_t i = 0; i < ba.size(); ++i)
        if (ba[i] != bb[i]) return false;
    return true;
}

// -------------------------------------------------------------- arithmetic

Ideal idealSum(const Ideal& a, const Ideal& b) {
    if (!sameRing(a.ring(), b.ring())) throw AmbientMismatchError("sum across rings");
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal idealProduct(const Ideal& a, const Ideal& b) {
    if (!sameRing(a.ring(), b.ring())) throw AmbientMismatchError("product across rings");
    if (a.isZeroIdeal() || b.isZeroIdeal()) return Ideal::zeroIdeal(a.ring());
    if (a.isMonomial() && b.isMonomial()) {
        std::vector<ExpVec> exps;
        for (const Poly& f : a.gens())
            for (const Poly& g : b.gens())
                exps.push_back(expSum(f.terms().begin()->first, g.terms().begin()->first));
        std::vector<Poly> gens;
        for (ExpVec& e : minimalExps(std::move(exps)))
            gens.push_back(Poly::monomial(a.ring(), std::move(e), Fq(1)));
        return Ideal(a.ring(), std::move(gens));
    }
    std::vector<Poly> gens;
    gens.reserve(a.gens().size() * b.gens().size());
    for (const Poly& f : a.gens())
        for (const Poly& g : b.gens()) gens.push_back(f * g);
    Ideal prod(a.ring(), std::move(gens));
    if (prod.gens().size() > 16) return Ideal(a.ring(), prod.basis());
    return prod;
}

Ideal idealPower(const Ideal& a, int n) {
    if (n < 0) throw PreconditionError("negative ideal power");
    if (n == 0) return Ideal::unitIdeal(a.ring());
    Ideal r = a;
    for (int i = 1; i < n; ++i) r = idealProduct(r, a);
    return r;
}

namespace {

// Shared elimination trick: tag f in I with t and g in J with 1 - t, then
// kill t. The result generates I intersect J.
std::vector<Poly> intersectionGens(const Ideal& a, const Ideal& b) {
    const RingPtr& ring = a.ring();
    std::vector<std::string> bigVars = ring->vars();
    bigVars.insert(bigVars.begin(), "@t");
    RingPtr big = makeRing(bigVars, ring->field());
    Poly t = Poly::variable(big, 0);
    Poly oneMinusT = Poly::constant(big, Fq(1)) - t;
    std::vector<Poly> gens;
    for (const Poly& f : a.gens()) gens.push_back(t * f.insertVar(big, 0));
    for (const Poly& g : b.gens()) gens.push_back(oneMinusT * g.insertVar(big, 0));
    std::vector<Poly> gb = groebnerBasis(big, gens, MonomialOrder::block(1));
    std::vector<Poly> kept;
    for (const Poly& p : gb) {
        bool usesT = false;
        for (const auto& [e, c] : p.terms())
            if (e[0] != 0) { usesT = true; break; }
        if (!usesT) kept.push_back(p.dropVar(ring, 0));
    }
    return kept;
}

}  // namespace

Ideal idealIntersection(const Ideal& a, const Ideal& b) {
    if (!sameRing(a.ring(), b.ring())) throw AmbientMismatchError("intersection across rings");
    if (a.isZeroIdeal() || b.isZeroIdeal()) return Ideal::zeroIdeal(a.ring());
    if (a.isUnitIdeal()) return b;
    if (b.isUnitIdeal()) return a;
    if (a.isMonomial() && b.isMonomial()) {
        std::vector<ExpVec> exps;
        for (const Poly& f : a.gens())
            for (const Poly& g : b.gens())
                exps.push_back(expLcm(f.terms().begin()->first, g.terms().begin()->first));
        std::vector<Poly> gens;
        for (ExpVec& e : minimalExps(std::move(exps)))
            gens.push_back(Poly::monomial(a.ring(), std::move(e), Fq(1)));
        return Ideal(a.ring(), std::move(gens));
    }
    return Ideal(a.ring(), intersectionGens(a, b));
}

Ideal idealColonPoly(const Ideal& I, const Poly& f) {
    if (!sameRing(I.ring(), f.ring())) throw AmbientMismatchError("colon across rings");
    if (f.isZero()) return Ideal::unitIdeal(I.ring());
    if (I.isZeroIdeal()) return I;
    if (I.isMonomial() && isSingleTerm(f)) {
        const ExpVec& m = f.terms().begin()->first;
        std::vector<ExpVec> exps;
        for (const Poly& g : I.gens())
            exps.push_back(expDiff(expLcm(g.terms().begin()->first, m), m));
        std::vector<Poly> gens;
        for (ExpVec& e : minimalExps(std::move(exps)))
            gens.push_back(Poly::monomial(I.ring(), std::move(e), Fq(1)));
        return Ideal(I.ring(), std::move(gens));
    }
    Ideal meet = idealIntersection(I, Ideal(I.ring(), {f}));
    std::vector<Poly> gens;
    std::vector<Poly> divisor = {f};
    for (const Poly& g : meet.basis()) {
        std::vector<Poly> q;
        Poly r = normalForm(g, divisor, kDegrevlex, &q);
        if (!r.isZero())
            throw InternalCheckError("element of an intersection with a principal ideal not divisible");
        gens.push_back(q[0]);
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal idealColon(const Ideal& I, const Ideal& J) {
    if (!sameRing(I.ring(), J.ring())) throw AmbientMismatchError("colon across rings");
    if (J.isZeroIdeal()) return Ideal::unitIdeal(I.ring());
    bool first = true;
    Ideal acc = Ideal::unitIdeal(I.ring());
    for (const Poly& g : J.gens()) {
        Ideal part = idealColonPoly(I, g);
        acc = first ? part : idealIntersection(acc, part);
        first = false;
    }
    return acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    Ideal cur = I;
    for (int round = 0; round < 256; ++round) {
        Ideal next = idealColon(cur, J);
        if (idealEquals(next, cur)) return cur;
        cur = next;
    }
    throw ResourceLimitError("saturation did not stabilize");
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
    const RingPtr& ring = I.ring();
    std::vector<char> elim(static_cast<size_t>(ring->nvars()), 0);
    for (int v : vars) {
        if (v < 0 || v >= ring->nvars()) throw PreconditionError("eliminated variable out of range");
        elim[static_cast<size_t>(v)] = 1;
    }
    std::vector<int> perm;  // new position -> old position
    for (int v = 0; v < ring->nvars(); ++v)
        if (elim[static_cast<size_t>(v)]) perm.push_back(v);
    int k = static_cast<int>(perm.size());
    for (int v = 0; v < ring->nvars(); ++v)
        if (!elim[static_cast<size_t>(v)]) perm.push_back(v);
    std::vector<std::string> newVars;
    for (int v : perm) newVars.push_back(ring->vars()[static_cast<size_t>(v)]);
    RingPtr permuted = makeRing(newVars, ring->field());
    auto mapPoly = [&](const Poly& p, const RingPtr& target, bool inverse) {
        Poly out(target);
        for (const auto& [e, c] : p.terms()) {
            ExpVec e2(e.size(), 0);
            for (size_t pos = 0; pos < e.size(); ++pos) {
                if (inverse) e2[static_cast<size_t>(perm[pos])] = e[pos];
                else e2[pos] = e[static_cast<size_t>(perm[pos])];
            }
            out.addTerm(e2, c);
        }
        return out;
    };
    std::vector<Poly> gens;
    for (const Poly& g : I.gens()) gens.push_back(mapPoly(g, permuted, false));
    std::vector<Poly> gb = groebnerBasis(permuted, gens, MonomialOrder::block(k));
    std::vector<Poly> kept;
    for (const Poly& p : gb) {
        bool usesElim = false;
        for (const auto& [e, c] : p.terms())
            for (int pos = 0; pos < k && !usesElim; ++pos)
                if (e[static_cast<size_t>(pos)] != 0) usesElim = true;
        if (!usesElim) kept.push_back(mapPoly(p, ring, true));
    }
    return Ideal(ring, std::move(kept));
}

// ----------------------------------------------------- origin-local queries

namespace {

UPoly toUnivariate(const Poly& p, int var) {
    std::vector<Fq> coeffs;
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (static_cast<int>(i) != var && e[i] != 0)
                throw PreconditionError("polynomial is not univariate in the requested variable");
        size_t d = static_cast<size_t>(e[static_cast<size_t>(var)]);
        if (coeffs.size() <= d) coeffs.resize(d + 1, Fq());
        coeffs[d] = c;
    }
    return UPoly(p.ring()->field(), std::move(coeffs));
}

bool staircaseFinite(const std::vector<Poly>& basis, int nvars, const MonomialOrder& order) {
    for (int i = 0; i < nvars; ++i) {
        bool purePower = false;
        for (const Poly& g : basis) {
            const ExpVec e = g.leading(order).first;
            bool pure = e[static_cast<size_t>(i)] > 0;
            for (size_t j = 0; j < e.size() && pure; ++j)
                if (static_cast<int>(j) != i && e[j] != 0) pure = false;
            if (pure) { purePower = true; break; }
        }
        if (!purePower) return false;
    }
    return true;
}

}  // namespace

bool zeroDimAtOrigin(const Ideal& I) {
    if (I.isZeroIdeal()) return false;
    if (I.isUnitIdeal()) return false;
    const RingPtr& ring = I.ring();
    for (int i = 0; i < ring->nvars(); ++i) {
        std::vector<int> others;
        for (int j = 0; j < ring->nvars(); ++j)
            if (j != i) others.push_back(j);
        Ideal proj = others.empty() ? I : eliminate(I, others);
        if (proj.isZeroIdeal()) return false;
        UPoly g(ring->field());
        for (const Poly& p : proj.gens()) g = upolyGcd(g, toUnivariate(p, i));
        if (g.degree() < 1) return false;
        bool pure = true;
        for (int d = 0; d < g.degree(); ++d)
            if (!g.coeff(d).isZero()) { pure = false; break; }
        if (!pure) return false;
    }
    return true;
}

long colength(const Ideal& I) {
    constexpr long kCap = 4000000;
    if (I.isZeroIdeal()) throw PreconditionError("colength of the zero ideal is infinite");
    if (I.isUnitIdeal()) return 0;
    const std::vector<Poly>& b = I.basis();
    int n = I.ring()->nvars();
    if (!staircaseFinite(b, n, kDegrevlex))
        throw PreconditionError("colength requested for an ideal of positive dimension");
    std::vector<ExpVec> leads;
    leads.reserve(b.size());
    for (const Poly& g : b) leads.push_back(g.leading(kDegrevlex).first);
    std::set<ExpVec> seen;
    std::queue<ExpVec> frontier;
    ExpVec origin(static_cast<size_t>(n), 0);
    frontier.push(origin);
    seen.insert(origin);
    long count = 0;
    while (!frontier.empty()) {
        ExpVec e = std::move(frontier.front());
        frontier.pop();
        bool inIdeal = false;
        for (const ExpVec& l : leads)
            if (expDivides(l, e)) { inIdeal = true; break; }
        if (inIdeal) continue;
        if (++count > kCap) throw ResourceLimitError("colength exceeded the counting budget");
        for (int i = 0; i < n; ++i) {
            ExpVec f = e;
            ++f[static_cast<size_t>(i)];
            if (seen.insert(f).second) frontier.push(std::move(f));
        }
    }
    return count;
}

std::vector<ExpVec> staircaseMonomials(const Ideal& I) {
    constexpr size_t kCap = 200000;
    if (I.isZeroIdeal()) throw PreconditionError("staircase of the zero ideal is infinite");
    const std::vector<Poly>& b = I.basis();
    int n = I.ring()->nvars();
    if (!I.isUnitIdeal() && !staircaseFinite(b, n, kDegrevlex))
        throw PreconditionError("staircase requested for an ideal of positive dimension");
    std::vector<ExpVec> leads;
    leads.reserve(b.size());
    for (const Poly& g : b) leads.push_back(g.leading(kDegrevlex).first);
    std::set<ExpVec> seen;
    std::queue<ExpVec> frontier;
    ExpVec origin(static_cast<size_t>(n), 0);
    frontier.push(origin);
    seen.insert(origin);
    std::vector<ExpVec> out;
    while (!frontier.empty()) {
        ExpVec e = std::move(frontier.front());
        frontier.pop();
        bool inIdeal = false;
        for (const ExpVec& l : leads)
            if (expDivides(l, e)) { inIdeal = true; break; }
        if (inIdeal) continue;
        if (out.size() >= kCap) throw ResourceLimitError("staircase exceeded the listing budget");
        out.push_back(e);
        for (int i = 0; i < n; ++i) {
            ExpVec f = out.back();
            ++f[static_cast<size_t>(i)];
            if (seen.insert(f).second) frontier.push(std::move(f));
        }
    }
    return out;
}

int idealOrder(const Ideal& I) {
    if (I.isZeroIdeal()) throw PreconditionError("order of the zero ideal is infinite");
    int best = -1;
    for (const Poly& g : I.gens()) {
        int o = *g.ord();
        if (best < 0 || o < best) best = o;
    }
    return best;
}

Ideal localizeAtOrigin(const Ideal& I) {
    if (I.isZeroIdeal() || I.isUnitIdeal()) return I;
    if (zeroDimAtOrigin(I)) return I;
    if (!staircaseFinite(I.basis(), I.ring()->nvars(), kDegrevlex))
        throw PreconditionError("origin localization supported only for finite zero sets");
    Ideal rest = saturate(I, maximalIdeal(I.ring()));
    return saturate(I, rest);
}

std::vector<Poly> canonicalGenerators(const Ideal& I) {
    if (I.isZeroIdeal()) return {};
    std::vector<Poly> g = I.basis();
    if (!I.isMonomial()) {
        // The reduced basis can still be redundant as a generating set.
        bool changed = true;
        while (changed && g.size() > 1) {
            changed = false;
            for (size_t i = g.size(); i-- > 0;) {
                std::vector<Poly> others;
                others.reserve(g.size() - 1);
                for (size_t j = 0; j < g.size(); ++j)
                    if (j != i) others.push_back(g[j]);
                if (idealMem(g[i], Ideal(I.ring(), others))) {
                    g.erase(g.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
    }
    for (Poly& p : g) p = p.normalizedPrimitive();
    std::sort(g.begin(), g.end(), [](const Poly& a, const Poly& b) {
        ExpVec la = a.leading(kDegrevlex).first, lb = b.leading(kDegrevlex).first;
        int da = expDeg(la), db = expDeg(lb);
        if (da != db) return da < db;
        int s = kDegrevlex.cmp(la, lb);
        if (s != 0) return s > 0;
        return compareCanonical(a, b) > 0;
    });
    return g;
}

}  // namespace adjl
