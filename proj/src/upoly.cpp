#include "adjl/upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>

#include "adjl/errors.hpp"

namespace adjl {

// ---------------------------------------------------------------- UPoly core

UPoly::UPoly(FieldPtr f, std::vector<Fq> coeffs) : fld_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& x : c_) {
        if (!x.field()) continue;
        if (!fld_) fld_ = x.field();
        else if (!sameField(fld_, x.field()))
            throw AmbientMismatchError("univariate coefficients from different extension fields");
    }
    strip();
}

void UPoly::strip() {
    while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

FieldPtr UPoly::joinWith(const UPoly& o) const {
    if (!fld_) return o.fld_;
    if (!o.fld_) return fld_;
    if (!sameField(fld_, o.fld_))
        throw AmbientMismatchError("univariate operands over different extension fields");
    return fld_;
}

UPoly UPoly::variable(FieldPtr f) { return UPoly(std::move(f), {Fq(0), Fq(1)}); }

UPoly UPoly::constant(const Fq& a, FieldPtr f) { return UPoly(std::move(f), {a}); }

UPoly UPoly::linearRoot(const Fq& r, FieldPtr f) { return UPoly(std::move(f), {-r, Fq(1)}); }

Fq UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Fq();
    return c_[static_cast<size_t>(i)];
}

const Fq& UPoly::lead() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    FieldPtr f = joinWith(o);
    std::vector<Fq> c(std::max(c_.size(), o.c_.size()), Fq());
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPoly(f, std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
    FieldPtr f = joinWith(o);
    if (isZero() || o.isZero()) return UPoly(f);
    std::vector<Fq> c(c_.size() + o.c_.size() - 1, Fq());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].isZero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return UPoly(f, std::move(c));
}

UPoly UPoly::scaled(const Fq& a) const {
    std::vector<Fq> c = c_;
    for (auto& x : c) x = x * a;
    return UPoly(fld_, std::move(c));
}

bool UPoly::operator==(const UPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

UPoly UPoly::monic() const {
    if (isZero()) return *this;
    return scaled(lead().inverse());
}

UPoly UPoly::derivative() const {
    if (degree() < 1) return UPoly(fld_);
    std::vector<Fq> c(c_.size() - 1, Fq());
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Fq(static_cast<long>(i));
    return UPoly(fld_, std::move(c));
}

Fq UPoly::evaluate(const Fq& x) const {
    Fq acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& d) const {
    if (d.isZero()) throw PreconditionError("univariate division by zero");
    FieldPtr f = joinWith(d);
    int dn = d.degree();
    if (degree() < dn) return {UPoly(f), *this};
    std::vector<Fq> r = c_;
    std::vector<Fq> q(r.size() - static_cast<size_t>(dn), Fq());
    Fq dlInv = d.lead().inverse();
    for (int i = static_cast<int>(r.size()) - 1; i >= dn; --i) {
        size_t ui = static_cast<size_t>(i);
        if (r[ui].isZero()) continue;
        Fq coef = r[ui] * dlInv;
        q[ui - static_cast<size_t>(dn)] = coef;
        for (int j = 0; j <= dn; ++j)
            r[ui - static_cast<size_t>(dn) + static_cast<size_t>(j)] -= coef * d.c_[static_cast<size_t>(j)];
    }
    return {UPoly(f, std::move(q)), UPoly(f, std::move(r))};
}

UPoly UPoly::divExact(const UPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.isZero()) throw InternalCheckError("univariate division expected to be exact has a remainder");
    return q;
}

std::string UPoly::toString(const std::string& var) const {
    if (isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Fq a = coeff(i);
        if (a.isZero()) continue;
        std::string cs;
        bool neg = false;
        if (a.isRational()) {
            Rat q = a.rational();
            if (sgn(q) < 0) { neg = true; q = -q; }
            cs = ratToString(q);
        } else {
            cs = "(" + a.toString() + ")";
        }
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        bool one = (cs == "1") && i > 0;
        if (!one) os << cs;
        if (i > 0) {
            if (!one) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ------------------------------------------------------- gcd and squarefree

UPoly upolyGcd(UPoly a, UPoly b) {
    while (!b.isZero()) {
        UPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.isZero() ? a : a.monic();
}

std::vector<std::pair<UPoly, int>> squarefreeDecomposition(const UPoly& p) {
    if (p.isZero()) throw PreconditionError("squarefree decomposition of zero");
    std::vector<std::pair<UPoly, int>> out;
    UPoly f = p.monic();
    if (f.degree() == 0) return out;
    UPoly a0 = upolyGcd(f, f.derivative());
    UPoly b = f.divExact(a0);
    UPoly d = f.derivative().divExact(a0) - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly a = upolyGcd(b, d);
        if (a.degree() > 0) out.push_back({a, i});
        b = b.divExact(a);
        d = d.divExact(a) - b.derivative();
        ++i;
        if (i > p.degree() + 1)
            throw InternalCheckError("squarefree decomposition failed to terminate");
    }
    UPoly check = UPoly::constant(Fq(1), p.field());
    for (const auto& [part, mult] : out)
        for (int k = 0; k < mult; ++k) check = check * part;
    if (check != f) throw InternalCheckError("squarefree parts do not multiply back to the input");
    return out;
}

// ------------------------------------------------------------- square roots

namespace {

// Roots w of a rational quadratic A w^2 + B w + C (A != 0), exact.
std::vector<Rat> rationalQuadraticRoots(const Rat& A, const Rat& B, const Rat& C) {
    Rat disc = B * B - 4 * A * C;
    auto s = ratSqrt(disc);
    if (!s) return {};
    std::vector<Rat> out;
    out.push_back((-B + *s) / (2 * A));
    if (sgn(*s) != 0) out.push_back((-B - *s) / (2 * A));
    return out;
}

}  // namespace

std::optional<Fq> fieldSqrt(const Fq& a, const FieldPtr& ambient) {
    if (a.field() && !sameField(a.field(), ambient))
        throw AmbientMismatchError("square-root radicand lies outside the ambient field");
    if (!ambient) {
        auto s = ratSqrt(a.rational());
        if (!s) return std::nullopt;
        return Fq(*s);
    }
    int d = ambient->degree();
    if (d != 2) {
        if (a.isRational() && d % 2 == 1) {
            // An odd-degree field contains no quadratic subfield, so a
            // rational radicand has a root there only if it has one in Q.
            auto s = ratSqrt(a.rational());
            if (!s) return std::nullopt;
            return Fq(*s);
        }
        throw UnsupportedSplittingError("square roots supported only in quadratic extensions");
    }
    // Quadratic field Q[t]/(t^2 + c1 t + c0). For s = u + v t,
    //   s^2 = (u^2 - c0 v^2) + (2uv - c1 v^2) t.
    const Rat c0 = ambient->minPoly()[0];
    const Rat c1 = ambient->minPoly()[1];
    Rat d0, d1;
    if (a.isRational()) {
        d0 = a.rational();
        d1 = 0;
    } else {
        d0 = a.coords()[0];
        d1 = a.coords()[1];
    }
    auto makeRoot = [&](const Rat& u, const Rat& v) { return Fq(ambient, {u, v}); };
    if (sgn(d1) == 0) {
        if (auto s = ratSqrt(d0)) return Fq(*s).promoted(ambient);
        // v != 0 forces 2u = c1 v, hence v^2 (c1^2 - 4 c0) / 4 = d0.
        Rat disc = c1 * c1 - 4 * c0;
        if (sgn(disc) != 0) {
            if (auto v2 = ratSqrt(4 * d0 / disc); v2 && sgn(*v2) != 0) {
                Rat v = *v2, u = c1 * v / 2;
                Fq s = makeRoot(u, v);
                if (s * s == a) return s;
            }
        }
        return std::nullopt;
    }
    // d1 != 0 forces v != 0 and u = (d1 + c1 v^2) / (2v); eliminating u gives
    // (c1^2 - 4 c0) w^2 + (2 c1 d1 - 4 d0) w + d1^2 = 0 with w = v^2.
    Rat A = c1 * c1 - 4 * c0;
    Rat B = 2 * c1 * d1 - 4 * d0;
    Rat C = d1 * d1;
    std::vector<Rat> ws;
    if (sgn(A) == 0) {
        if (sgn(B) != 0) ws.push_back(-C / B);
    } else {
        ws = rationalQuadraticRoots(A, B, C);
    }
    for (const Rat& w : ws) {
        auto v = ratSqrt(w);
        if (!v || sgn(*v) == 0) continue;
        Rat u = (d1 + c1 * (*v) * (*v)) / (2 * (*v));
        Fq s = makeRoot(u, *v);
        if (s * s == a) return s;
    }
    return std::nullopt;
}

// ---------------------------------------------------- mod-p irreducibility

namespace {

using ModPoly = std::vector<uint64_t>;  // dense c0..cd over F_p, stripped

void mstrip(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t minv(uint64_t a, uint64_t p) {
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

ModPoly mmul(const ModPoly& a, const ModPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    mstrip(r);
    return r;
}

// Remainder modulo monic g.
ModPoly mrem(ModPoly a, const ModPoly& g, uint64_t p) {
    const size_t dg = g.size() - 1;
    while (a.size() > dg) {
        uint64_t lead = a.back();
        size_t shift = a.size() - 1 - dg;
        a.pop_back();
        if (lead != 0)
            for (size_t i = 0; i < dg; ++i) {
                uint64_t sub = (lead * g[i]) % p;
                a[i + shift] = (a[i + shift] + p - sub) % p;
            }
        mstrip(a);
    }
    return a;
}

ModPoly mpow(ModPoly base, uint64_t e, const ModPoly& g, uint64_t p) {
    ModPoly r = {1};
    base = mrem(std::move(base), g, p);
    while (e > 0) {
        if (e & 1) r = mrem(mmul(r, base, p), g, p);
        base = mrem(mmul(base, base, p), g, p);
        e >>= 1;
    }
    return r;
}

ModPoly mgcd(ModPoly a, ModPoly b, uint64_t p) {
    while (!b.empty()) {
        uint64_t inv = minv(b.back(), p);
        ModPoly bm = b;
        for (auto& x : bm) x = (x * inv) % p;
        a = mrem(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// g monic of degree n over F_p is irreducible iff X^(p^n) = X mod g and
// gcd(X^(p^(n/q)) - X, g) = 1 for every prime q dividing n.
bool rabinIrreducible(const ModPoly& g, uint64_t p) {
    const int n = static_cast<int>(g.size()) - 1;
    std::vector<int> primeDivs;
    int m = n;
    for (int q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            primeDivs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) primeDivs.push_back(m);
    std::vector<ModPoly> frob(static_cast<size_t>(n) + 1);
    frob[1] = mpow({0, 1}, p, g, p);
    for (int k = 2; k <= n; ++k) frob[static_cast<size_t>(k)] = mpow(frob[static_cast<size_t>(k) - 1], p, g, p);
    ModPoly x = mrem({0, 1}, g, p);
    if (frob[static_cast<size_t>(n)] != x) return false;
    for (int q : primeDivs) {
        ModPoly d = frob[static_cast<size_t>(n / q)];
        if (d.size() < 2) d.resize(2, 0);
        d[1] = (d[1] + p - 1) % p;
        mstrip(d);
        if (mgcd(d, g, p).size() != 1) return false;
    }
    return true;
}

// Primitive integer coefficient vector of a rational polynomial.
std::vector<Int> integerForm(const UPoly& h) {
    Int L = 1;
    for (const auto& c : h.coeffs()) {
        if (!c.isRational()) throw PreconditionError("integer form needs rational coefficients");
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.rational().get_den().get_mpz_t());
    }
    std::vector<Int> a;
    a.reserve(h.coeffs().size());
    for (const auto& c : h.coeffs()) {
        const Rat& q = c.rational();
        a.push_back(q.get_num() * (L / q.get_den()));
    }
    return a;
}

// Attempt a modular certificate of irreducibility over Q for monic h of
// degree >= 2 with rational coefficients. false means "no verdict".
bool modularIrreducibilityWitness(const UPoly& h) {
    static const uint64_t primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 10007};
    std::vector<Int> a = integerForm(h);
    for (uint64_t p : primes) {
        if (mpz_fdiv_ui(a.back().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
        ModPoly g(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            g[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
        uint64_t inv = minv(g.back(), p);
        for (auto& x : g) x = (x * inv) % p;
        if (rabinIrreducible(g, p)) return true;
    }
    return false;
}

// ------------------------------------------------------ rational root scan

// All positive divisors of |n| (n != 0), or nullopt past the trial budget.
std::optional<std::vector<Int>> smallDivisors(Int n, unsigned long budget) {
    n = abs(n);
    if (sgn(n) == 0) throw PreconditionError("divisors of zero requested");
    std::vector<Int> divs;
    Int d = 1;
    unsigned long steps = 0;
    while (d * d <= n) {
        if (++steps > budget) return std::nullopt;
        if (n % d == 0) {
            divs.push_back(d);
            Int q = n / d;
            if (q != d) divs.push_back(q);
        }
        ++d;
    }
    return divs;
}

struct RootScan {
    std::vector<Rat> candidates;
    bool complete = false;
};

// Candidate rational roots u/v of h (constant term nonzero): u divides the
// constant term, v the leading coefficient of the primitive integer form.
RootScan rationalRootCandidates(const UPoly& h) {
    constexpr unsigned long kTrialBudget = 2'000'000;
    constexpr size_t kCandidateCap = 100'000;
    std::vector<Int> a = integerForm(h);
    auto du = smallDivisors(a.front(), kTrialBudget);
    auto dv = smallDivisors(a.back(), kTrialBudget);
    if (!du || !dv) return {};
    if (du->size() * dv->size() > kCandidateCap) return {};
    std::set<Rat> seen;
    for (const Int& u : *du)
        for (const Int& v : *dv) {
            Rat q(u, v);
            q.canonicalize();
            seen.insert(q);
            seen.insert(Rat(-q));
        }
    RootScan scan;
    scan.complete = true;
    scan.candidates.assign(seen.begin(), seen.end());
    return scan;
}

// Split every rational root off h (over Q). Returns false when the candidate
// enumeration was incomplete, in which case h is left unchanged.
bool extractRationalRoots(UPoly& h, std::vector<FactorInfo>& out) {
    FieldPtr f = h.field();
    while (h.degree() >= 1 && h.coeff(0).isZero()) {
        out.push_back({UPoly::variable(f), 1, true});
        h = h.divExact(UPoly::variable(f));
    }
    if (h.degree() < 1) return true;
    RootScan scan = rationalRootCandidates(h);
    if (!scan.complete) return false;
    for (const Rat& r : scan.candidates) {
        Fq fr(r);
        while (h.degree() >= 1 && h.evaluate(fr).isZero()) {
            out.push_back({UPoly::linearRoot(fr, f), 1, true});
            h = h.divExact(UPoly::linearRoot(fr, f));
        }
    }
    return true;
}

// ------------------------------------------------- squarefree-part splitting

// Split a monic quadratic by the quadratic formula; complete whenever
// fieldSqrt is (it throws where it is not).
std::vector<FactorInfo> splitQuadratic(const UPoly& h, const FieldPtr& ambient) {
    Fq B = h.coeff(1), C = h.coeff(0);
    Fq disc = B * B - Fq(4) * C;
    auto s = fieldSqrt(disc, ambient);
    if (!s) return {{h, 1, true}};
    Fq half = Fq(1) / Fq(2);
    Fq r1 = (-B + *s) * half;
    Fq r2 = (-B - *s) * half;
    std::vector<FactorInfo> out;
    out.push_back({UPoly::linearRoot(r1, ambient), 1, true});
    out.push_back({UPoly::linearRoot(r2, ambient), 1, true});
    return out;
}

std::vector<FactorInfo> splitSquarefreeQ(UPoly h);

// Lift factors of a rational polynomial, already split over Q, into the
// extension field kappa, refining them where kappa adds roots.
std::vector<FactorInfo> liftFactorsIntoExtension(const std::vector<FactorInfo>& qFactors,
                                                 const FieldPtr& kappa) {
    std::vector<FactorInfo> out;
    for (const FactorInfo& qf : qFactors) {
        std::vector<Fq> cs = qf.factor.coeffs();
        UPoly lifted(kappa, cs);
        int dg = lifted.degree();
        if (dg == 1) {
            out.push_back({lifted, 1, true});
        } else if (dg == 2) {
            if (!qf.provenIrreducible) {
                out.push_back({lifted, 1, false});
            } else {
                for (auto& fi : splitQuadratic(lifted, kappa)) out.push_back(std::move(fi));
            }
        } else if (!qf.provenIrreducible) {
            out.push_back({lifted, 1, false});
        } else if (kappa->degree() % dg != 0) {
            // A root would generate a degree-dg subfield, impossible here;
            // for a cubic the lack of roots already forces irreducibility.
            if (dg == 3) out.push_back({lifted, 1, true});
            else
                throw UnsupportedSplittingError(
                    "cannot certify a degree-" + std::to_string(dg) + " factor over an extension field");
        } else {
            throw UnsupportedSplittingError(
                "cannot split a degree-" + std::to_string(dg) + " factor over this extension field");
        }
    }
    return out;
}

// h monic squarefree over an extension field.
std::vector<FactorInfo> splitSquarefreeExt(const UPoly& h) {
    const FieldPtr& kappa = h.field();
    if (h.degree() == 1) return {{h, 1, true}};
    if (h.degree() == 2) return splitQuadratic(h, kappa);
    bool rationalCoeffs = true;
    for (const auto& c : h.coeffs())
        if (!c.isRational()) { rationalCoeffs = false; break; }
    if (!rationalCoeffs)
        throw UnsupportedSplittingError(
            "cannot split degree >= 3 polynomials with extension coefficients");
    UPoly overQ(nullptr, h.coeffs());
    return liftFactorsIntoExtension(splitSquarefreeQ(overQ), kappa);
}

// h monic squarefree over Q.
std::vector<FactorInfo> splitSquarefreeQ(UPoly h) {
    std::vector<FactorInfo> out;
    if (h.degree() == 1) {
        out.push_back({h, 1, true});
        return out;
    }
    if (h.degree() == 2) return splitQuadratic(h, nullptr);
    bool complete = extractRationalRoots(h, out);
    int dg = h.degree();
    if (dg == 0) return out;
    if (dg == 1) {
        out.push_back({h, 1, true});
    } else if (dg == 2) {
        for (auto& fi : splitQuadratic(h, nullptr)) out.push_back(std::move(fi));
    } else if (dg == 3) {
        // A cubic with certified-absent rational roots has no linear factor,
        // and any proper factorization of a cubic contains one.
        out.push_back({h, 1, complete});
    } else {
        out.push_back({h, 1, modularIrreducibilityWitness(h)});
    }
    return out;
}

}  // namespace

std::vector<FactorInfo> splitUnivariate(const UPoly& p) {
    if (p.isZero()) throw PreconditionError("cannot factor the zero polynomial");
    std::vector<FactorInfo> out;
    if (p.degree() == 0) return out;
    for (const auto& [part, mult] : squarefreeDecomposition(p)) {
        std::vector<FactorInfo> fs =
            part.field() ? splitSquarefreeExt(part) : splitSquarefreeQ(part);
        for (FactorInfo& fi : fs) {
            fi.multiplicity = mult;
            out.push_back(std::move(fi));
        }
    }
    std::sort(out.begin(), out.end(), [](const FactorInfo& a, const FactorInfo& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        for (int i = a.factor.degree(); i >= 0; --i) {
            int s = a.factor.coeff(i).cmp(b.factor.coeff(i));
            if (s != 0) return s < 0;
        }
        return false;
    });
    UPoly check = UPoly::constant(p.lead(), p.field());
    for (const auto& fi : out)
        for (int k = 0; k < fi.multiplicity; ++k) check = check * fi.factor;
    if (check != p)
        throw InternalCheckError("factor product does not reconstruct the input polynomial");
    return out;
}

}  // namespace adjl
