#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace adjl {

// Exact rational scalar. mpq_class keeps the canonical form we rely on:
// gcd(num, den) = 1 and den > 0 after canonicalize().
using Rat = mpq_class;
using Int = mpz_class;

inline Rat ratOf(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// "num" or "num/den", canonical form.
inline std::string ratToString(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Exact square root when q is a perfect square of a rational, else nullopt.
inline std::optional<Rat> ratSqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace adjl
