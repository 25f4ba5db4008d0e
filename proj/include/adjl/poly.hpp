#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjl/order.hpp"
#include "adjl/ring.hpp"

namespace adjl {

// Sparse multivariate polynomial over the ring's coefficient field.
// Terms are kept in a map with the plain lexicographic vector order as the
// storage key; mathematical orders are applied on demand.
class Poly {
public:
    explicit Poly(RingPtr r);
    static Poly constant(RingPtr r, const Fq& a);
    static Poly variable(const RingPtr& r, int idx);
    static Poly monomial(RingPtr r, ExpVec e, const Fq& a);

    const RingPtr& ring() const { return ring_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<ExpVec, Fq>& terms() const { return terms_; }
    size_t nterms() const { return terms_.size(); }
    bool isConstant() const;
    bool isMonomialTerm() const { return terms_.size() == 1; }

    Fq coeff(const ExpVec& e) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Fq& a) const;
    Poly pow(int n) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    void addTerm(const ExpVec& e, const Fq& a);          // in place

    int degree() const;                                  // total degree, -1 for zero
    std::optional<int> ord() const;                      // min term degree
    std::pair<ExpVec, Fq> leading(const MonomialOrder& o) const;

    // Image under x_i -> images[i], evaluated into the target ring. The
    // truncated variant drops every term of total degree above maxDeg at each
    // step; with images of order >= 0 the result agrees with the exact image
    // in all degrees <= maxDeg.
    Poly substitute(const RingPtr& target, const std::vector<Poly>& images) const;
    Poly substituteTruncated(const RingPtr& target, const std::vector<Poly>& images, int maxDeg) const;

    // Componentwise minimum of the support: the largest monomial dividing
    // every term. Requires a nonzero polynomial.
    ExpVec monomialContent() const;
    Poly divExactMonomial(const ExpVec& m) const;

    // Reinterpret over a ring with the same variables but an extension field.
    Poly inRing(const RingPtr& target) const;

    // Same polynomial with one variable inserted at position pos (exponent 0
    // everywhere), or removed (requires exponent 0 everywhere).
    Poly insertVar(const RingPtr& bigger, int pos) const;
    Poly dropVar(const RingPtr& smaller, int pos) const;

    // Scale to integer-primitive coordinates with a positive sign on the
    // degrevlex-leading coefficient. Canonical representative up to units.
    Poly normalizedPrimitive() const;

    std::string toString() const;

private:
    RingPtr ring_;
    std::map<ExpVec, Fq> terms_;
};

// Deterministic total order on polynomials in one ring: by degrevlex-leading
// monomial, then term by term. Used for canonical generator lists.
int compareCanonical(const Poly& a, const Poly& b);

}  // namespace adjl
