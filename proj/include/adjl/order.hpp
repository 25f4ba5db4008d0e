#pragma once

#include "adjl/ring.hpp"

namespace adjl {

// Monomial orders used by the basis machinery. Degrevlex is the default
// everywhere; the block order makes the first k variables heaviest, which
// turns a basis computation into an elimination of those variables.
class MonomialOrder {
public:
    static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block(int k) { return MonomialOrder(Kind::Block, k); }

    // Sign of a - b in this order.
    int cmp(const ExpVec& a, const ExpVec& b) const {
        switch (kind_) {
            case Kind::Degrevlex:
                return cmpDegrevlex(a, b, 0, static_cast<int>(a.size()));
            case Kind::Lex:
                for (size_t i = 0; i < a.size(); ++i)
                    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
                return 0;
            case Kind::Block: {
                int s = cmpDegrevlex(a, b, 0, k_);
                if (s != 0) return s;
                return cmpDegrevlex(a, b, k_, static_cast<int>(a.size()));
            }
        }
        return 0;
    }

    bool less(const ExpVec& a, const ExpVec& b) const { return cmp(a, b) < 0; }
    bool greater(const ExpVec& a, const ExpVec& b) const { return cmp(a, b) > 0; }

    bool isBlock() const { return kind_ == Kind::Block; }
    int blockSize() const { return k_; }

private:
    enum class Kind { Degrevlex, Lex, Block };
    MonomialOrder(Kind k, int blk) : kind_(k), k_(blk) {}

    // Degrevlex on the variable window [lo, hi): higher degree wins; on ties
    // the later variables are scanned first and a smaller exponent wins.
    static int cmpDegrevlex(const ExpVec& a, const ExpVec& b, int lo, int hi) {
        int da = 0, db = 0;
        for (int i = lo; i < hi; ++i) {
            da += a[static_cast<size_t>(i)];
            db += b[static_cast<size_t>(i)];
        }
        if (da != db) return da < db ? -1 : 1;
        for (int i = hi - 1; i >= lo; --i) {
            int32_t xa = a[static_cast<size_t>(i)], xb = b[static_cast<size_t>(i)];
            if (xa != xb) return xa > xb ? -1 : 1;
        }
        return 0;
    }

    Kind kind_;
    int k_;
};

}  // namespace adjl
