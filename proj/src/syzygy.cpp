#include "adjl/syzygy.hpp"

#include <algorithm>
#include <functional>

#include "adjl/errors.hpp"

namespace adjl {

namespace {

const MonomialOrder kOrder = MonomialOrder::degrevlex();

using Row = std::vector<Poly>;

Row zeroRow(const RingPtr& ring, size_t n) { return Row(n, Poly(ring)); }

Row scaledRow(const Row& r, const Poly& c) {
    Row out;
    out.reserve(r.size());
    for (const Poly& p : r) out.push_back(p * c);
    return out;
}

Row scaledRow(const Row& r, const Fq& c) {
    Row out;
    out.reserve(r.size());
    for (const Poly& p : r) out.push_back(p.scaled(c));
    return out;
}

void addRowInPlace(Row& a, const Row& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] + b[i];
}

void subRowInPlace(Row& a, const Row& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] = a[i] - b[i];
}

Poly dotRow(const Row& a, const std::vector<Poly>& f) {
    Poly acc(f.front().ring());
    for (size_t i = 0; i < a.size(); ++i) acc = acc + a[i] * f[i];
    return acc;
}

bool rowIsZero(const Row& r) {
    for (const Poly& p : r)
        if (!p.isZero()) return false;
    return true;
}

}  // namespace

SyzygyPresentation syzygyPresentation(const Ideal& I) {
    const RingPtr& ring = I.ring();
    SyzygyPresentation pres;
    pres.gens = I.gens();
    const size_t s = pres.gens.size();
    if (s == 0) return pres;

    // Tracked basis run. Every S-pair is processed (no pair is discarded by
    // any criterion) and its reduction to zero across the final basis is
    // recorded as one relation row over the basis elements.
    std::vector<Poly> G;
    std::vector<Row> rep;  // G[k] = rep[k] . gens
    for (size_t i = 0; i < s; ++i) {
        const Poly& f = pres.gens[i];
        Fq lcInv = f.leading(kOrder).second.inverse();
        G.push_back(f.scaled(lcInv));
        Row r = zeroRow(ring, s);
        r[i] = Poly::constant(ring, lcInv);
        rep.push_back(std::move(r));
    }

    struct Pair { size_t i, j; };
    std::vector<Pair> pairs;
    for (size_t j = 1; j < s; ++j)
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j});

    std::vector<Row> relG;  // relations among the basis elements
    constexpr size_t kPairLimit = 100000;
    size_t processed = 0;
    while (!pairs.empty()) {
        Pair pr = pairs.back();
        pairs.pop_back();
        if (++processed > kPairLimit)
            throw ResourceLimitError("presentation computation exceeded the pair budget");
        ExpVec ei = G[pr.i].leading(kOrder).first;
        ExpVec ej = G[pr.j].leading(kOrder).first;
        ExpVec lcm = expLcm(ei, ej);
        Poly mi = Poly::monomial(ring, expDiff(lcm, ei), Fq(1));
        Poly mj = Poly::monomial(ring, expDiff(lcm, ej), Fq(1));
        Poly spoly = mi * G[pr.i] - mj * G[pr.j];
        std::vector<Poly> quot;
        Poly rem = normalForm(spoly, G, kOrder, &quot);
        Row rel = zeroRow(ring, G.size());
        rel[pr.i] = rel[pr.i] + mi;
        rel[pr.j] = rel[pr.j] - mj;
        for (size_t k = 0; k < G.size(); ++k) rel[k] = rel[k] - quot[k];
        if (!rem.isZero()) {
            Fq lc = rem.leading(kOrder).second;
            Poly gNew = rem.scaled(lc.inverse());
            // rem = spoly - sum quot[k] G[k], so the new basis element's
            // expression over gens follows from the tracked rows.
            Row repNew = zeroRow(ring, s);
            addRowInPlace(repNew, scaledRow(rep[pr.i], mi));
            subRowInPlace(repNew, scaledRow(rep[pr.j], mj));
            for (size_t k = 0; k < G.size(); ++k)
                subRowInPlace(repNew, scaledRow(rep[k], quot[k]));
            repNew = scaledRow(repNew, lc.inverse());
            size_t t = G.size();
            G.push_back(std::move(gNew));
            rep.push_back(std::move(repNew));
            for (size_t k = 0; k < t; ++k) pairs.push_back({k, t});
            rel.resize(G.size(), Poly(ring));
            rel[t] = rel[t] - Poly::constant(ring, lc);
        }
        rel.resize(G.size(), Poly(ring));
        relG.push_back(std::move(rel));
    }
    for (Row& rel : relG) rel.resize(G.size(), Poly(ring));

    // Rewrite relations over the original generators: rel . G = (rel A) . gens
    // with A the tracked representation matrix, plus the rows of I - B A with
    // B expressing each generator over the basis.
    std::vector<Row> rows;
    for (const Row& rel : relG) {
        Row z = zeroRow(ring, s);
        for (size_t k = 0; k < rel.size(); ++k) {
            if (rel[k].isZero()) continue;
            addRowInPlace(z, scaledRow(rep[k], rel[k]));
        }
        if (!rowIsZero(z)) rows.push_back(std::move(z));
    }
    for (size_t j = 0; j < s; ++j) {
        std::vector<Poly> quot;
        Poly rem = normalForm(pres.gens[j], G, kOrder, &quot);
        if (!rem.isZero())
            throw InternalCheckError("generator fails to reduce to zero against its own basis");
        Row z = zeroRow(ring, s);
        z[j] = Poly::constant(ring, Fq(1));
        for (size_t k = 0; k < G.size(); ++k) {
            if (quot[k].isZero()) continue;
            subRowInPlace(z, scaledRow(rep[k], quot[k]));
        }
        if (!rowIsZero(z)) rows.push_back(std::move(z));
    }
    for (const Row& z : rows)
        if (!dotRow(z, pres.gens).isZero())
            throw InternalCheckError("presentation row does not annihilate the generators");
    pres.rows = std::move(rows);
    return pres;
}

namespace {

Poly determinant(const std::vector<std::vector<const Poly*>>& m, const RingPtr& ring) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(ring, Fq(1));
    if (n == 1) return *m[0][0];
    Poly acc(ring);
    // Expansion along the first column.
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0]->isZero()) continue;
        std::vector<std::vector<const Poly*>> minor;
        minor.reserve(n - 1);
        for (size_t rr = 0; rr < n; ++rr) {
            if (rr == r) continue;
            std::vector<const Poly*> row(m[rr].begin() + 1, m[rr].end());
            minor.push_back(std::move(row));
        }
        Poly term = *m[r][0] * determinant(minor, ring);
        if (r % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

void subsets(size_t n, size_t k, std::vector<size_t>& cur, size_t start,
             const std::function<void(const std::vector<size_t>&)>& fn) {
    if (cur.size() == k) {
        fn(cur);
        return;
    }
    for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets(n, k, cur, i + 1, fn);
        cur.pop_back();
    }
}

}  // namespace

Ideal fittingIdeal(const Ideal& I, int j) {
    if (j < 0) throw PreconditionError("fitting index must be nonnegative");
    const RingPtr& ring = I.ring();
    SyzygyPresentation pres = syzygyPresentation(I);
    int s = static_cast<int>(pres.gens.size());
    int k = s - j;
    if (k <= 0) return Ideal::unitIdeal(ring);
    if (k > static_cast<int>(pres.rows.size()) || k > s) return Ideal::zeroIdeal(ring);
    std::vector<Poly> minors;
    std::vector<size_t> rsel, csel;
    subsets(pres.rows.size(), static_cast<size_t>(k), rsel, 0, [&](const std::vector<size_t>& rs) {
        subsets(static_cast<size_t>(s), static_cast<size_t>(k), csel, 0,
                [&](const std::vector<size_t>& cs) {
                    std::vector<std::vector<const Poly*>> m(rs.size());
                    for (size_t a = 0; a < rs.size(); ++a) {
                        m[a].reserve(cs.size());
                        for (size_t b : cs) m[a].push_back(&pres.rows[rs[a]][b]);
                    }
                    Poly d = determinant(m, ring);
                    if (!d.isZero()) minors.push_back(std::move(d));
                });
    });
    return Ideal(ring, std::move(minors));
}

}  // namespace adjl
