#include "adjl/poly.hpp"

#include <algorithm>
#include <sstream>

namespace adjl {

namespace {

void requireSameRing(const RingPtr& a, const RingPtr& b) {
    if (!sameRing(a, b)) throw AmbientMismatchError("polynomial operands from different rings");
}

void requireCoeffFits(const RingPtr& r, const Fq& a) {
    if (a.field() && !sameField(a.field(), r->field()))
        throw AmbientMismatchError("coefficient lies outside the ring's field");
}

}  // namespace

Poly::Poly(RingPtr r) : ring_(std::move(r)) {
    if (!ring_) throw PreconditionError("polynomial needs a ring");
}

Poly Poly::constant(RingPtr r, const Fq& a) {
    Poly p(std::move(r));
    p.addTerm(ExpVec(static_cast<size_t>(p.ring_->nvars()), 0), a);
    return p;
}

Poly Poly::variable(const RingPtr& r, int idx) {
    if (idx < 0 || idx >= r->nvars()) throw PreconditionError("variable index out of range");
    ExpVec e(static_cast<size_t>(r->nvars()), 0);
    e[static_cast<size_t>(idx)] = 1;
    return monomial(r, std::move(e), Fq(1));
}

Poly Poly::monomial(RingPtr r, ExpVec e, const Fq& a) {
    Poly p(std::move(r));
    p.addTerm(e, a);
    return p;
}

bool Poly::isConstant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && expDeg(terms_.begin()->first) == 0;
}

Fq Poly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Fq() : it->second;
}

void Poly::addTerm(const ExpVec& e, const Fq& a) {
    if (e.size() != static_cast<size_t>(ring_->nvars()))
        throw PreconditionError("exponent vector length does not match the ring");
    for (int32_t x : e)
        if (x < 0) throw PreconditionError("negative exponent");
    if (a.isZero()) return;
    requireCoeffFits(ring_, a);
    auto [it, inserted] = terms_.try_emplace(e, a);
    if (!inserted) {
        it->second += a;
        if (it->second.isZero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, -a);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    requireSameRing(ring_, o.ring_);
    Poly r = *this;
    for (const auto& [e, a] : o.terms_) r.addTerm(e, a);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    requireSameRing(ring_, o.ring_);
    Poly r(ring_);
    for (const auto& [e1, a1] : terms_)
        for (const auto& [e2, a2] : o.terms_) r.addTerm(expSum(e1, e2), a1 * a2);
    return r;
}

Poly Poly::scaled(const Fq& a) const {
    Poly r(ring_);
    if (a.isZero()) return r;
    requireCoeffFits(ring_, a);
    for (const auto& [e, c] : terms_) {
        Fq v = c * a;
        if (!v.isZero()) r.terms_.emplace(e, v);
    }
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw PreconditionError("negative polynomial power");
    Poly r = constant(ring_, Fq(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (!sameRing(ring_, o.ring_)) return false;
    return terms_ == o.terms_;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, a] : terms_) d = std::max(d, expDeg(e));
    return d;
}

std::optional<int> Poly::ord() const {
    if (terms_.empty()) return std::nullopt;
    int d = expDeg(terms_.begin()->first);
    for (const auto& [e, a] : terms_) d = std::min(d, expDeg(e));
    return d;
}

std::pair<ExpVec, Fq> Poly::leading(const MonomialOrder& o) const {
    if (terms_.empty()) throw PreconditionError("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (o.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

namespace {

class PowerTable {
public:
    PowerTable(const RingPtr& target, const std::vector<Poly>& images, int maxDeg)
        : target_(target), maxDeg_(maxDeg) {
        pows_.reserve(images.size());
        for (const auto& img : images) pows_.push_back({Poly::constant(target, Fq(1)), img});
    }

    const Poly& get(size_t var, int e) {
        auto& p = pows_[var];
        while (static_cast<int>(p.size()) <= e) {
            Poly next = p.back() * p[1];
            if (maxDeg_ >= 0) next = truncated(next);
            p.push_back(std::move(next));
        }
        return p[static_cast<size_t>(e)];
    }

    Poly truncated(const Poly& f) const {
        if (maxDeg_ < 0) return f;
        Poly r(target_);
        for (const auto& [e, a] : f.terms())
            if (expDeg(e) <= maxDeg_) r.addTerm(e, a);
        return r;
    }

private:
    RingPtr target_;
    int maxDeg_;
    std::vector<std::vector<Poly>> pows_;
};

Poly substituteImpl(const Poly& f, const RingPtr& target, const std::vector<Poly>& images, int maxDeg) {
    if (images.size() != static_cast<size_t>(f.ring()->nvars()))
        throw PreconditionError("substitution needs one image per variable");
    for (const auto& img : images) requireSameRing(img.ring(), target);
    PowerTable table(target, images, maxDeg);
    Poly acc(target);
    for (const auto& [e, a] : f.terms()) {
        Poly term = Poly::constant(target, a.field() ? a.promoted(target->field()) : a);
        for (size_t i = 0; i < images.size(); ++i) {
            if (e[i] == 0) continue;
            term = term * table.get(i, e[i]);
            if (maxDeg >= 0) term = table.truncated(term);
            if (term.isZero()) break;
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace

Poly Poly::substitute(const RingPtr& target, const std::vector<Poly>& images) const {
    return substituteImpl(*this, target, images, -1);
}

Poly Poly::substituteTruncated(const RingPtr& target, const std::vector<Poly>& images, int maxDeg) const {
    if (maxDeg < 0) throw PreconditionError("truncation degree must be nonnegative");
    return substituteImpl(*this, target, images, maxDeg);
}

ExpVec Poly::monomialContent() const {
    if (terms_.empty()) throw PreconditionError("monomial content of zero polynomial");
    ExpVec m = terms_.begin()->first;
    for (const auto& [e, a] : terms_)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Poly Poly::divExactMonomial(const ExpVec& m) const {
    Poly r(ring_);
    for (const auto& [e, a] : terms_) {
        if (!expDivides(m, e)) throw PreconditionError("monomial division is not exact");
        r.terms_.emplace(expDiff(e, m), a);
    }
    return r;
}

Poly Poly::inRing(const RingPtr& target) const {
    if (target->vars() != ring_->vars())
        throw AmbientMismatchError("ring change requires identical variables");
    Poly r(target);
    for (const auto& [e, a] : terms_) r.addTerm(e, a);
    return r;
}

Poly Poly::insertVar(const RingPtr& bigger, int pos) const {
    if (bigger->nvars() != ring_->nvars() + 1)
        throw PreconditionError("target ring must have exactly one more variable");
    Poly r(bigger);
    for (const auto& [e, a] : terms_) {
        ExpVec e2 = e;
        e2.insert(e2.begin() + pos, 0);
        r.addTerm(e2, a);
    }
    return r;
}

Poly Poly::dropVar(const RingPtr& smaller, int pos) const {
    if (smaller->nvars() != ring_->nvars() - 1)
        throw PreconditionError("target ring must have exactly one fewer variable");
    Poly r(smaller);
    for (const auto& [e, a] : terms_) {
        if (e[static_cast<size_t>(pos)] != 0)
            throw PreconditionError("cannot drop a variable the polynomial uses");
        ExpVec e2 = e;
        e2.erase(e2.begin() + pos);
        r.addTerm(e2, a);
    }
    return r;
}

Poly Poly::normalizedPrimitive() const {
    if (terms_.empty()) return *this;
    Int L = 1, G = 0;
    for (const auto& [e, a] : terms_) {
        const std::vector<Rat>& cs = a.coords();
        for (const Rat& q : cs) {
            if (sgn(q) == 0) continue;
            mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), q.get_den().get_mpz_t());
            Int n = abs(q.get_num());
            mpz_gcd(G.get_mpz_t(), G.get_mpz_t(), n.get_mpz_t());
        }
    }
    if (sgn(G) == 0) G = 1;
    Rat scale(L, G);
    scale.canonicalize();
    Poly r = scaled(Fq(scale));
    Fq lead = r.leading(MonomialOrder::degrevlex()).second;
    const std::vector<Rat>& lc = lead.coords();
    for (const Rat& q : lc) {
        if (sgn(q) == 0) continue;
        if (sgn(q) < 0) r = r.scaled(Fq(-1L));
        break;
    }
    return r;
}

std::string Poly::toString() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const ExpVec, Fq>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(sorted.begin(), sorted.end(),
              [&](const auto* a, const auto* b) { return ord.greater(a->first, b->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : sorted) {
        const ExpVec& e = t->first;
        Fq a = t->second;
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
        bool isConst = expDeg(e) == 0;
        bool one = (cs == "1") && !isConst;
        if (!one) os << cs;
        bool firstVar = one;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!firstVar || !one) os << "*";
            os << ring_->vars()[i];
            if (e[i] > 1) os << "^" << e[i];
            firstVar = false;
        }
        first = false;
    }
    return os.str();
}

int compareCanonical(const Poly& a, const Poly& b) {
    MonomialOrder ord = MonomialOrder::degrevlex();
    auto collect = [&](const Poly& p) {
        std::vector<const std::pair<const ExpVec, Fq>*> v;
        v.reserve(p.terms().size());
        for (const auto& t : p.terms()) v.push_back(&t);
        std::sort(v.begin(), v.end(),
                  [&](const auto* x, const auto* y) { return ord.greater(x->first, y->first); });
        return v;
    };
    auto va = collect(a), vb = collect(b);
    size_t n = std::min(va.size(), vb.size());
    for (size_t i = 0; i < n; ++i) {
        int s = ord.cmp(va[i]->first, vb[i]->first);
        if (s != 0) return s;
        s = va[i]->second.cmp(vb[i]->second);
        if (s != 0) return s;
    }
    if (va.size() != vb.size()) return va.size() < vb.size() ? -1 : 1;
    return 0;
}

}  // namespace adjl
