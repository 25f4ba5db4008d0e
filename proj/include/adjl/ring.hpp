#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "adjl/errors.hpp"
#include "adjl/field.hpp"

namespace adjl {

// Exponent vector of a monomial; length = number of ring variables.
using ExpVec = std::vector<int32_t>;

class Ring {
public:
    explicit Ring(std::vector<std::string> vars, FieldPtr field = nullptr)
        : vars_(std::move(vars)), fld_(std::move(field)) {
        if (vars_.empty()) throw PreconditionError("ring needs at least one variable");
        for (size_t i = 0; i < vars_.size(); ++i)
            for (size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j]) throw PreconditionError("duplicate ring variable " + vars_[i]);
    }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const FieldPtr& field() const { return fld_; }
    int varIndex(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

private:
    std::vector<std::string> vars_;
    FieldPtr fld_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr makeRing(std::vector<std::string> vars, FieldPtr field = nullptr) {
    return std::make_shared<const Ring>(std::move(vars), std::move(field));
}

inline bool sameRing(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->vars() == b->vars() && sameField(a->field(), b->field());
}

inline int expDeg(const ExpVec& e) {
    int s = 0;
    for (int32_t x : e) s += x;
    return s;
}

inline bool expDivides(const ExpVec& a, const ExpVec& b) {  // x^a | x^b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline ExpVec expSum(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline ExpVec expDiff(const ExpVec& a, const ExpVec& b) {  // requires b | a
    ExpVec r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline ExpVec expLcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r = a;
    for (size_t i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

inline bool expCoprime(const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace adjl
