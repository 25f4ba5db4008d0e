#pragma once

#include <vector>

#include "adjl/groebner.hpp"

namespace adjl {

// Presentation of an ideal by its generators: rows generate the full relation
// module { (a_1..a_s) : sum a_i gens[i] = 0 }. Built from a tracked basis
// computation that processes every S-pair and records its zero reduction, so
// the rows generate the relation module of the computed basis; the rows are
// then rewritten over the original generators.
struct SyzygyPresentation {
    std::vector<Poly> gens;                // the presented generators, nonzero
    std::vector<std::vector<Poly>> rows;   // each row has gens.size() entries
};

SyzygyPresentation syzygyPresentation(const Ideal& I);

// Ideal of (s - j)-minors of a presentation matrix of I viewed as a module,
// s = number of nonzero generators. Independent of the chosen presentation.
// j >= s gives the unit ideal; too few rows for a minor gives the zero ideal.
Ideal fittingIdeal(const Ideal& I, int j);

}  // namespace adjl
