#pragma once

#include <string>
#include <vector>

#include "adjl/corpus.hpp"

namespace adjl {

// Property-check harness over a corpus of ideals. Four suites:
//
//   identities      engine cross-agreement, closure/adjoint interplay,
//                   scaling and colon laws, reduction stability, and any
//                   expected adjoints recorded in the corpus
//   briancon_skoda  containments adjoint(I^(n+d-1)) <= I^n and relatives
//   stabilization   adjoint(I^(n+1)) = I adjoint(I^n) from n = 1 on, and
//                   the coefficient-ideal identity (two variables)
//   geometry        point-basis invariants: Hoskin-Deligne colength,
//                   proximity inequalities, intersection numbers, valuation
//                   formula, commutation of adjoint with transforms
//
// Each check lands in a CheckResult; a Skip records why a check does not
// apply to an entry and never hides a failure.

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
    std::string suite;
    std::string entry;
    std::string check;
    CheckStatus status = CheckStatus::Pass;
    std::string reason;   // empty for Pass
    std::string witness;  // CLI invocation that replays the check, when available
};

struct Report {
    std::vector<CheckResult> results;
    long long elapsedMs = 0;

    bool allPassed() const;
    int countOf(CheckStatus s) const;
    std::string toText() const;  // human-readable; timing footer included
    std::string toJson() const;  // byte-deterministic; no timing inside
};

struct SuiteOptions {
    int nMax = 3;               // power depth for the containment families
    std::string suite = "all";  // identities | briancon_skoda | stabilization |
                                // geometry | all
};

Report runSuites(const std::vector<CorpusEntry>& entries, const SuiteOptions& opt);

}  // namespace adjl
