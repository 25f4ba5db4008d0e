#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adjl/rational.hpp"

namespace adjl {

// Simple extension Q[t]/(p(t)) with p monic irreducible of degree >= 2.
// Irreducibility is certified by the univariate splitter before a field is
// ever constructed; arithmetic here trusts it but inversion still detects a
// violation (non-unit gcd) and reports it loudly.
class NumberField {
public:
    // minPoly: coefficients c0..cd of a monic polynomial, cd = 1, d >= 2.
    explicit NumberField(std::vector<Rat> minPoly, std::string genName = "t");

    int degree() const { return static_cast<int>(min_.size()) - 1; }
    const std::vector<Rat>& minPoly() const { return min_; }
    const std::string& genName() const { return gen_; }
    bool sameAs(const NumberField& o) const { return min_ == o.min_; }

private:
    std::vector<Rat> min_;
    std::string gen_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Field scalar: a rational (fld == nullptr) or an element of a NumberField,
// stored by coordinates in the power basis 1, t, ..., t^(d-1).
class Fq {
public:
    Fq() : c_(1, Rat(0)) {}
    Fq(long n) : c_(1, ratOf(n)) {}                 // NOLINT implicit by design
    Fq(const Rat& q) : c_(1, q) {}                  // NOLINT implicit by design
    Fq(FieldPtr f, std::vector<Rat> coords);

    static Fq gen(const FieldPtr& f);               // the class of t
    static Fq embed(const FieldPtr& f, const Rat& q);

    bool isZero() const;
    bool isOne() const;
    bool isRational() const { return fld_ == nullptr; }
    const Rat& rational() const;                    // requires isRational()
    const FieldPtr& field() const { return fld_; }
    const std::vector<Rat>& coords() const { return c_; }

    Fq operator-() const;
    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq inverse() const;
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }

    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    // Total order used only for deterministic serialization and container keys.
    int cmp(const Fq& o) const;

    // Lift into the given field (identity when already there).
    Fq promoted(const FieldPtr& f) const;

    std::string toString() const;

private:
    static FieldPtr join(const FieldPtr& a, const FieldPtr& b);

    FieldPtr fld_;            // nullptr: plain rational
    std::vector<Rat> c_;      // size 1 or fld_->degree()
};

inline bool sameField(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->sameAs(*b);
}

}  // namespace adjl
