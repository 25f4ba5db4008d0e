#pragma once

#include <map>
#include <vector>

#include "adjl/groebner.hpp"

namespace adjl::testing {

// Ideal membership decided by linear algebra on truncations, with no basis
// machinery involved: when m^N lies inside I and every generator vanishes at
// the origin, f belongs to I exactly when its truncation below degree N lies
// in the rational span of the truncated monomial multiples of the
// generators. The caller supplies an N it has justified by hand.
class TruncationOracle {
public:
    TruncationOracle(const Ideal& I, int N) : ring_(I.ring()), N_(N) {
        buildColumns();
        for (const Poly& g : I.gens()) {
            if (g.isZero()) continue;
            addMultiples(g);
        }
    }

    bool contains(const Poly& f) const {
        std::vector<Rat> v = truncate(f);
        reduceAgainst(v);
        for (const Rat& c : v)
            if (c != 0) return false;
        return true;
    }

private:
    RingPtr ring_;
    int N_;
    std::vector<ExpVec> cols_;
    std::map<ExpVec, size_t> colIndex_;
    // Echelon rows, each stored with its pivot column.
    std::vector<std::pair<size_t, std::vector<Rat>>> rows_;

    void buildColumns() {
        int n = ring_->nvars();
        ExpVec e(n, 0);
        // All exponent vectors of total degree < N, lexicographic recursion.
        enumerate(e, 0, 0);
    }

    void enumerate(ExpVec& e, int pos, int used) {
        if (pos == ring_->nvars()) {
            colIndex_[e] = cols_.size();
            cols_.push_back(e);
            return;
        }
        for (int d = 0; d + used < N_; ++d) {
            e[pos] = d;
            enumerate(e, pos + 1, used + d);
        }
        e[pos] = 0;
    }

    std::vector<Rat> truncate(const Poly& f) const {
        std::vector<Rat> v(cols_.size(), Rat(0));
        for (const auto& [e, a] : f.terms()) {
            auto it = colIndex_.find(e);
            if (it == colIndex_.end()) continue;  // degree >= N, dropped
            v[it->second] = a.rational();
        }
        return v;
    }

    void reduceAgainst(std::vector<Rat>& v) const {
        for (const auto& [piv, row] : rows_) {
            if (v[piv] == 0) continue;
            Rat c = v[piv] / row[piv];
            for (size_t i = piv; i < v.size(); ++i) v[i] -= c * row[i];
        }
    }

    void insertRow(std::vector<Rat> v) {
        reduceAgainst(v);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] != 0) {
                rows_.emplace_back(i, std::move(v));
                return;
            }
        }
    }

    void addMultiples(const Poly& g) {
        for (const ExpVec& mu : cols_) {
            Poly m = Poly::monomial(ring_, mu, Fq(Rat(1)));
            insertRow(truncate(m * g));
        }
    }
};

}  // namespace adjl::testing
