#include "adjl/field.hpp"

#include <sstream>

#include "adjl/errors.hpp"

namespace adjl {

namespace {

// Dense Q[t] helpers for NumberField internals.
void stripQ(std::vector<Rat>& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

std::vector<Rat> mulQ(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    stripQ(r);
    return r;
}

void subScaledQ(std::vector<Rat>& a, const std::vector<Rat>& b, const Rat& s, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    stripQ(a);
}

// Reduce v modulo the monic minimal polynomial, in place.
void reduceMod(std::vector<Rat>& v, const std::vector<Rat>& min) {
    const size_t d = min.size() - 1;
    while (v.size() > d) {
        Rat lead = v.back();
        size_t shift = v.size() - 1 - d;
        v.pop_back();
        if (sgn(lead) != 0)
            for (size_t i = 0; i < d; ++i) v[i + shift] -= lead * min[i];
        stripQ(v);
    }
}

}  // namespace

NumberField::NumberField(std::vector<Rat> minPoly, std::string genName)
    : min_(std::move(minPoly)), gen_(std::move(genName)) {
    if (min_.size() < 3) throw PreconditionError("number field needs a minimal polynomial of degree >= 2");
    if (min_.back() != 1) throw PreconditionError("minimal polynomial must be monic");
}

Fq::Fq(FieldPtr f, std::vector<Rat> coords) : fld_(std::move(f)), c_(std::move(coords)) {
    if (!fld_) {
        if (c_.size() != 1) throw PreconditionError("rational scalar needs exactly one coordinate");
        return;
    }
    c_.resize(static_cast<size_t>(fld_->degree()), Rat(0));
    // Collapse to plain rational when the element happens to lie in Q.
    bool pure = true;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) { pure = false; break; }
    if (pure) {
        c_.resize(1);
        fld_ = nullptr;
    }
}

Fq Fq::gen(const FieldPtr& f) {
    std::vector<Rat> c(static_cast<size_t>(f->degree()), Rat(0));
    c[1] = 1;
    return Fq(f, std::move(c));
}

Fq Fq::embed(const FieldPtr& f, const Rat& q) {
    if (!f) return Fq(q);
    std::vector<Rat> c(static_cast<size_t>(f->degree()), Rat(0));
    c[0] = q;
    return Fq(f, std::move(c));
}

bool Fq::isZero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Fq::isOne() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

const Rat& Fq::rational() const {
    if (fld_) throw PreconditionError("scalar is not rational");
    return c_[0];
}

FieldPtr Fq::join(const FieldPtr& a, const FieldPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b || a->sameAs(*b)) return a;
    throw AmbientMismatchError("scalars from different extension fields");
}

Fq Fq::promoted(const FieldPtr& f) const {
    if (sameField(fld_, f)) return *this;
    if (!fld_) {
        if (!f) return *this;
        std::vector<Rat> c(static_cast<size_t>(f->degree()), Rat(0));
        c[0] = c_[0];
        return Fq(f, std::move(c));
    }
    throw AmbientMismatchError("cannot move scalar between distinct extension fields");
}

Fq Fq::operator-() const {
    Fq r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Fq Fq::operator+(const Fq& o) const {
    FieldPtr f = join(fld_, o.fld_);
    if (!f) return Fq(c_[0] + o.c_[0]);
    // Coordinate vectors may be shorter than the degree (rationals collapse
    // to a single coordinate), so pad rather than add in place.
    std::vector<Rat> sum(static_cast<size_t>(f->degree()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) sum[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) sum[i] += o.c_[i];
    return Fq(f, std::move(sum));
}

Fq Fq::operator-(const Fq& o) const { return *this + (-o); }

Fq Fq::operator*(const Fq& o) const {
    FieldPtr f = join(fld_, o.fld_);
    if (!f) return Fq(c_[0] * o.c_[0]);
    Fq a = promoted(f), b = o.promoted(f);
    std::vector<Rat> prod = mulQ(a.c_, b.c_);
    reduceMod(prod, f->minPoly());
    prod.resize(static_cast<size_t>(f->degree()), Rat(0));
    return Fq(f, std::move(prod));
}

Fq Fq::inverse() const {
    if (isZero()) throw PreconditionError("inverse of zero");
    if (!fld_) return Fq(Rat(1) / c_[0]);
    // Extended Euclid in Q[t] between this element and the minimal polynomial.
    std::vector<Rat> r0 = fld_->minPoly(), r1 = c_;
    stripQ(r1);
    std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // coefficients on the element side
    while (!r1.empty()) {
        // r0 = q*r1 + r2 by long division.
        std::vector<Rat> q, r2 = r0;
        while (r2.size() >= r1.size() && !r2.empty()) {
            size_t shift = r2.size() - r1.size();
            Rat coef = r2.back() / r1.back();
            if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
            q[shift] += coef;
            subScaledQ(r2, r1, coef, shift);
        }
        std::vector<Rat> s2 = s0;
        {
            std::vector<Rat> qs = mulQ(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rat(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            stripQ(s2);
        }
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw InternalCheckError("minimal polynomial is not irreducible: non-unit gcd during inversion");
    // r0 = s0 * elem (mod min), so the inverse is s0 / r0.
    Rat scale = Rat(1) / r0[0];
    for (auto& x : s0) x *= scale;
    reduceMod(s0, fld_->minPoly());
    s0.resize(static_cast<size_t>(fld_->degree()), Rat(0));
    return Fq(fld_, std::move(s0));
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inverse(); }

bool Fq::operator==(const Fq& o) const {
    if (!sameField(fld_, o.fld_)) {
        // A rational may equal the Q-part of an extension element only if the
        // element is itself rational; our constructor collapses that case.
        return false;
    }
    return c_ == o.c_;
}

int Fq::cmp(const Fq& o) const {
    size_t n = std::max(c_.size(), o.c_.size());
    for (size_t i = 0; i < n; ++i) {
        Rat a = i < c_.size() ? c_[i] : Rat(0);
        Rat b = i < o.c_.size() ? o.c_[i] : Rat(0);
        int s = ::cmp(a, b);
        if (s != 0) return s;
    }
    return 0;
}

std::string Fq::toString() const {
    if (!fld_) return ratToString(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (sgn(a) < 0) { os << "-"; a = -a; }
        } else {
            os << (sgn(a) > 0 ? " + " : " - ");
            if (sgn(a) < 0) a = -a;
        }
        bool coefOne = (a == 1) && i > 0;
        if (!coefOne) os << ratToString(a);
        if (i > 0) {
            if (!coefOne) os << "*";
            os << fld_->genName();
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace adjl
