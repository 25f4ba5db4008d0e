#include "adjl/newton.hpp"

#include <algorithm>
#include <set>

#include "adjl/errors.hpp"

namespace adjl {

namespace {

// Row-reduce a small rational matrix in place; returns the pivot columns.
std::vector<int> rowReduce(std::vector<std::vector<Rat>>& m) {
    std::vector<int> pivots;
    size_t row = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t piv = row;
        while (piv < m.size() && sgn(m[piv][col]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == row || sgn(m[r][col]) == 0) continue;
            Rat f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

size_t matrixRank(std::vector<std::vector<Rat>> m) { return rowReduce(m).size(); }

// One-dimensional nullspace vector of m (d columns), or empty when the
// nullity is not exactly one.
std::vector<Rat> nullspaceVector(std::vector<std::vector<Rat>> m, size_t d) {
    std::vector<int> pivots = rowReduce(m);
    if (pivots.size() + 1 != d) return {};
    std::vector<char> isPivot(d, 0);
    for (int c : pivots) isPivot[static_cast<size_t>(c)] = 1;
    size_t freeCol = 0;
    while (freeCol < d && isPivot[freeCol]) ++freeCol;
    std::vector<Rat> v(d, Rat(0));
    v[freeCol] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
        v[static_cast<size_t>(pivots[r])] = -m[r][freeCol];
    return v;
}

// Scale a nonzero rational vector to primitive integers.
std::vector<long> primitiveIntegers(const std::vector<Rat>& v) {
    Int L = 1, G = 0;
    for (const Rat& q : v) {
        if (sgn(q) == 0) continue;
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den().get_mpz_t());
        Int n = abs(q.get_num());
        mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), n.get_mpz_t());
    }
    if (sgn(G) == 0) return {};
    std::vector<long> out;
    out.reserve(v.size());
    for (const Rat& q : v) {
        Rat s = q * Rat(L, G);
        s.canonicalize();
        if (s.get_den() != 1 || !s.get_num().fits_slong_p())
            throw InternalCheckError("facet normal does not fit a machine integer");
        out.push_back(s.get_num().get_si());
    }
    return out;
}

long dotNormal(const std::vector<long>& a, const ExpVec& e) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * e[i];
    return s;
}

std::vector<ExpVec> minimalMonomials(std::vector<ExpVec> exps) {
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

void pointSubsets(size_t n, size_t k, std::vector<size_t>& cur, size_t start,
                  std::vector<std::vector<size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        pointSubsets(n, k, cur, i + 1, out);
        cur.pop_back();
    }
}

std::vector<ExpVec> idealExponents(const Ideal& I) {
    if (I.isZeroIdeal()) throw PreconditionError("the zero ideal has no exponent polyhedron");
    if (!I.isMonomial()) throw PreconditionError("monomial engine requires a monomial ideal");
    std::vector<ExpVec> exps;
    exps.reserve(I.gens().size());
    for (const Poly& g : I.gens()) exps.push_back(g.terms().begin()->first);
    return minimalMonomials(std::move(exps));
}

}  // namespace

std::vector<Facet> newtonFacets(const std::vector<ExpVec>& expsIn, int nvars) {
    if (nvars < 1 || nvars > 4)
        throw UnsupportedError("exponent polyhedra supported in at most 4 variables");
    std::vector<ExpVec> exps = minimalMonomials(expsIn);
    if (exps.empty()) throw PreconditionError("facets of an empty exponent set");
    const size_t d = static_cast<size_t>(nvars);
    std::set<std::pair<std::vector<long>, long>> seen;
    std::vector<Facet> facets;

    // A facet's hyperplane is pinned by tight generator points S and tight
    // coordinate directions D with |S| + |D| = d: the normal is orthogonal to
    // the differences within S and vanishes on the axes in D.
    for (size_t nS = 1; nS <= std::min(d, exps.size()); ++nS) {
        size_t nD = d - nS;
        std::vector<std::vector<size_t>> pointSets, axisSets;
        std::vector<size_t> cur;
        pointSubsets(exps.size(), nS, cur, 0, pointSets);
        pointSubsets(d, nD, cur, 0, axisSets);
        for (const auto& S : pointSets)
            for (const auto& D : axisSets) {
                std::vector<std::vector<Rat>> m;
                for (size_t k = 1; k < S.size(); ++k) {
                    std::vector<Rat> row(d);
                    for (size_t i = 0; i < d; ++i)
                        row[i] = Rat(exps[S[k]][i] - exps[S[0]][i]);
                    m.push_back(std::move(row));
                }
                for (size_t ax : D) {
                    std::vector<Rat> row(d, Rat(0));
                    row[ax] = 1;
                    m.push_back(std::move(row));
                }
                std::vector<Rat> v = nullspaceVector(std::move(m), d);
                if (v.empty()) continue;
                std::vector<long> a = primitiveIntegers(v);
                if (a.empty()) continue;
                bool anyNeg = false, anyPos = false;
                for (long x : a) {
                    if (x < 0) anyNeg = true;
                    if (x > 0) anyPos = true;
                }
                if (anyNeg && anyPos) continue;
                if (anyNeg)
                    for (long& x : a) x = -x;
                long c = dotNormal(a, exps[0]);
                for (const ExpVec& e : exps) c = std::min(c, dotNormal(a, e));
                bool supportsS = true;
                for (size_t k : S)
                    if (dotNormal(a, exps[k]) != c) { supportsS = false; break; }
                if (!supportsS) continue;
                if (!seen.insert({a, c}).second) continue;
                // Facet test: the tight points and tight axes span dim d - 1.
                std::vector<std::vector<Rat>> span;
                const ExpVec* base = nullptr;
                for (const ExpVec& e : exps) {
                    if (dotNormal(a, e) != c) continue;
                    if (!base) { base = &e; continue; }
                    std::vector<Rat> row(d);
                    for (size_t i = 0; i < d; ++i) row[i] = Rat(e[i] - (*base)[i]);
                    span.push_back(std::move(row));
                }
                for (size_t i = 0; i < d; ++i) {
                    if (a[i] != 0) continue;
                    std::vector<Rat> row(d, Rat(0));
                    row[i] = 1;
                    span.push_back(std::move(row));
                }
                if (matrixRank(std::move(span)) != d - 1) continue;
                facets.push_back({std::move(a), c});
            }
    }
    std::sort(facets.begin(), facets.end(), [](const Facet& x, const Facet& y) {
        if (x.normal != y.normal) return x.normal < y.normal;
        return x.offset < y.offset;
    });
    return facets;
}

namespace {

// Shared generator enumeration: lattice points of [0, cmax]^d passing the
// facet test, minimalized by divisibility. The minimal generators of both
// the closure and the adjoint lie in that box: past cmax along axis i every
// facet inequality keeps at least the slack of one step.
Ideal latticeIdeal(const Ideal& I, bool interior) {
    const RingPtr& ring = I.ring();
    std::vector<ExpVec> exps = idealExponents(I);
    std::vector<Facet> facets = newtonFacets(exps, ring->nvars());
    long cmax = 0;
    for (const Facet& f : facets) cmax = std::max(cmax, f.offset);
    const size_t d = static_cast<size_t>(ring->nvars());
    double volume = 1;
    for (size_t i = 0; i < d; ++i) volume *= static_cast<double>(cmax + 1);
    if (volume > 5e6) throw ResourceLimitError("exponent box too large to enumerate");
    std::vector<ExpVec> hits;
    ExpVec w(d, 0);
    while (true) {
        bool ok = true;
        for (const Facet& f : facets) {
            long lhs = dotNormal(f.normal, w);
            if (interior) {
                long shift = 0;
                for (long x : f.normal) shift += x;
                if (lhs + shift < f.offset + 1) { ok = false; break; }
            } else if (lhs < f.offset) {
                ok = false;
                break;
            }
        }
        if (ok) hits.push_back(w);
        size_t i = 0;
        while (i < d) {
            if (w[i] < cmax) { ++w[i]; break; }
            w[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    std::vector<Poly> gens;
    for (ExpVec& e : minimalMonomials(std::move(hits)))
        gens.push_back(Poly::monomial(ring, std::move(e), Fq(1)));
    return Ideal(ring, std::move(gens));
}

}  // namespace

Ideal monomialClosure(const Ideal& I) { return latticeIdeal(I, false); }

Ideal monomialAdjoint(const Ideal& I) { return latticeIdeal(I, true); }

}  // namespace adjl
