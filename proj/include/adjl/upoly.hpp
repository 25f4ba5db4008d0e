#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adjl/field.hpp"

namespace adjl {

// Dense univariate polynomial over Q or a number field, coefficients c0..cd.
// The field tag records the ambient field even when every coefficient happens
// to be rational.
class UPoly {
public:
    UPoly() = default;                                   // zero over Q
    explicit UPoly(FieldPtr f) : fld_(std::move(f)) {}   // zero over f
    UPoly(FieldPtr f, std::vector<Fq> coeffs);

    static UPoly variable(FieldPtr f = nullptr);
    static UPoly constant(const Fq& a, FieldPtr f = nullptr);
    static UPoly linearRoot(const Fq& r, FieldPtr f = nullptr);  // y - r

    bool isZero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const FieldPtr& field() const { return fld_; }
    const std::vector<Fq>& coeffs() const { return c_; }
    Fq coeff(int i) const;                               // zero beyond degree
    const Fq& lead() const;                              // requires nonzero

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Fq& a) const;
    bool operator==(const UPoly& o) const;
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly monic() const;
    UPoly derivative() const;
    Fq evaluate(const Fq& x) const;
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const;
    UPoly divExact(const UPoly& d) const;                // remainder must vanish

    std::string toString(const std::string& var = "y") const;

private:
    void strip();
    FieldPtr joinWith(const UPoly& o) const;

    FieldPtr fld_;        // nullptr: plain rationals
    std::vector<Fq> c_;
};

// Monic gcd (zero if both inputs are zero).
UPoly upolyGcd(UPoly a, UPoly b);

// Squarefree decomposition of nonzero p: monic pairwise-coprime squarefree
// parts with their multiplicities, sorted by multiplicity; the product of
// part^mult times the leading coefficient of p reconstructs p (verified).
std::vector<std::pair<UPoly, int>> squarefreeDecomposition(const UPoly& p);

struct FactorInfo {
    UPoly factor;                    // monic, degree >= 1
    int multiplicity = 1;
    bool provenIrreducible = false;  // over the ambient field of the input
};

// Monic factorization of p over its coefficient field. Linear factors are
// split off completely wherever the field permits; every returned factor of
// degree >= 2 carries an irreducibility verdict, and provenIrreducible =
// false marks a factor the splitter could not certify either way. Splitting
// requests outside the supported fragment (degree >= 3 with genuinely
// extension coefficients, towers of extensions, even extension degree >= 4
// square-root tests) throw UnsupportedSplittingError. The factored product
// is re-multiplied and compared against the input before returning.
std::vector<FactorInfo> splitUnivariate(const UPoly& p);

// Complete square-root test: returns an s with s^2 = a when one exists in
// the ambient field, nullopt when provably none exists. Complete for Q, for
// quadratic extensions, and for rational radicands in odd-degree extensions;
// other combinations throw UnsupportedSplittingError.
std::optional<Fq> fieldSqrt(const Fq& a, const FieldPtr& ambient);

}  // namespace adjl
