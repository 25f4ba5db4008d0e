#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "adjl/adjoint.hpp"
#include "adjl/constellation.hpp"

namespace adjl {

// Abstract syntax for ideal expressions accepted by the CLI and the corpus.
//
//   ideal(f1, ..., fk)        generators, parsed in the ambient ring
//   adjoint(E)                adjoint ideal
//   closure(E)                integral closure
//   quotient(E1, E2)          colon ideal E1 : E2
//   sum(E1, E2), product(E1, E2), power(E, n), fitting(E, n)
//   transform(E, [c]..., [inf]...)   weak transform along blow-up charts,
//                                    localized at the origin after each step
//
// A query is an expression, optionally wrapped in "pointbasis(...)" at the
// top level only.

struct IdealExpr;
using ExprPtr = std::shared_ptr<const IdealExpr>;

struct IdealExpr {
    enum class Kind {
        Gens,
        Adjoint,
        Closure,
        Quotient,
        Sum,
        Product,
        Power,
        Transform,
        Fitting,
    };

    Kind kind = Kind::Gens;
    std::vector<ExprPtr> args;
    std::vector<Poly> polys;       // Kind::Gens
    int natArg = 0;                // Kind::Power, Kind::Fitting
    std::vector<ChartStep> steps;  // Kind::Transform
};

struct ParsedQuery {
    bool pointBasisQuery = false;
    ExprPtr expr;
};

ParsedQuery parseQuery(const std::string& text, const RingPtr& ring);

// Parses a single polynomial in the ring's variables. Grammar: +, -, *, ^,
// parentheses, natural-number exponents, and rational literals written as
// "a" or "a/b". Multiplication is explicit.
Poly parsePolynomial(const std::string& text, const RingPtr& ring);

struct EvalConfig {
    AdjointMethod method = AdjointMethod::Auto;
    bool crosscheck = false;
};

Ideal evaluateExpr(const ExprPtr& e, const RingPtr& ring, const EvalConfig& cfg);

// Runs every adjoint engine that accepts I, checks pairwise agreement, and
// returns the common value together with the names of the engines that ran.
// Throws InternalCheckError on disagreement.
std::pair<Ideal, std::vector<std::string>> adjointAllEngines(const Ideal& I);

}  // namespace adjl
