#include "adjl/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <sstream>

#include "adjl/adjoint.hpp"
#include "adjl/expr.hpp"
#include "adjl/newton.hpp"
#include "json.hpp"

namespace adjl {

namespace {

struct SkipNote {
    std::string reason;
};
struct FailNote {
    std::string reason;
};

void require(bool ok, const std::string& reason) {
    if (!ok) throw FailNote{reason};
}

// Lazily computed per-entry state, shared across the suites so that the
// expensive objects (closures, powers, adjoints of powers) are built once.
struct EntryCtx {
    const CorpusEntry* e = nullptr;
    RingPtr ring;
    std::optional<Ideal> ideal;
    bool twoVarFinite = false;

    std::optional<Ideal> closureCache;
    std::optional<Ideal> adjointCache;
    std::optional<PointBasis> pbCache;
    std::map<int, Ideal> powerCache;
    std::map<int, Ideal> adjPowerCache;
    std::map<int, Ideal> cloPowerCache;
    std::optional<Reduction> reductionCache;

    const Ideal& I() const { return *ideal; }
    const Ideal& closure() {
        if (!closureCache) closureCache = closureOf(I());
        return *closureCache;
    }
    const Ideal& adjoint() {
        if (!adjointCache) adjointCache = adjointOf(I());
        return *adjointCache;
    }
    const PointBasis& pb() {
        if (!pbCache) pbCache = basePoints(I());
        return *pbCache;
    }
    const Ideal& power(int n) {
        auto it = powerCache.find(n);
        if (it == powerCache.end()) it = powerCache.emplace(n, idealPower(I(), n)).first;
        return it->second;
    }
    const Ideal& adjPower(int n) {
        auto it = adjPowerCache.find(n);
        if (it == adjPowerCache.end())
            it = adjPowerCache.emplace(n, adjointOfPower(I(), n)).first;
        return it->second;
    }
    const Ideal& cloPower(int n) {
        auto it = cloPowerCache.find(n);
        if (it == cloPowerCache.end())
            it = cloPowerCache.emplace(n, closureOfPower(I(), n)).first;
        return it->second;
    }
    const Reduction& reduction() {
        if (!reductionCache) reductionCache = findReduction(closure());
        return *reductionCache;
    }
};

std::string joinVars(const RingPtr& r) {
    std::string s;
    for (size_t i = 0; i < r->vars().size(); ++i) {
        if (i) s += ",";
        s += r->vars()[i];
    }
    return s;
}

std::string idealExprOf(const CorpusEntry& e) {
    std::string s = "ideal(";
    for (size_t i = 0; i < e.genStrings.size(); ++i) {
        if (i) s += ", ";
        s += e.genStrings[i];
    }
    return s + ")";
}

std::string evalWitness(const RingPtr& ring, const std::string& expr) {
    return "adjl eval \"" + expr + "\" --ring " + joinVars(ring);
}

// Point path "[0][inf]" as comma-separated CLI steps "[0],[inf]".
std::string pathAsSteps(const std::string& path) {
    std::string out;
    for (size_t i = 0; i < path.size(); ++i) {
        if (path[i] == '[' && i > 0) out += ',';
        out += path[i];
    }
    return out;
}

class Runner {
public:
    Runner(Report& rep, const SuiteOptions& opt) : rep_(rep), opt_(opt) {}

    bool selected(const std::string& suite) const {
        return opt_.suite == "all" || opt_.suite == suite;
    }
    int nMax() const { return opt_.nMax; }

    template <typename F>
    void check(const std::string& suite, const std::string& entry, const std::string& name,
               const std::string& witness, F&& body) {
        if (!selected(suite)) return;
        CheckResult r{suite, entry, name, CheckStatus::Pass, "", witness};
        try {
            body();
        } catch (const SkipNote& s) {
            r.status = CheckStatus::Skip;
            r.reason = s.reason;
        } catch (const FailNote& f) {
            r.status = CheckStatus::Fail;
            r.reason = f.reason;
        } catch (const UnsupportedError& ex) {
            r.status = CheckStatus::Skip;
            r.reason = ex.what();
        } catch (const std::exception& ex) {
            r.status = CheckStatus::Fail;
            r.reason = ex.what();
        }
        rep_.results.push_back(std::move(r));
    }

    void fail(const std::string& suite, const std::string& entry, const std::string& name,
              const std::string& reason) {
        rep_.results.push_back({suite, entry, name, CheckStatus::Fail, reason, ""});
    }

private:
    Report& rep_;
    const SuiteOptions& opt_;
};

void requireTwoVarFinite(const EntryCtx& c) {
    if (!c.twoVarFinite)
        throw SkipNote{"needs a two-variable ideal of finite colength at the origin"};
}

// ---- identities ----

void identitiesBuiltin(Runner& run) {
    const std::string suite = "identities";
    RingPtr r = makeRing({"x", "y"});
    const char* fs[] = {"x", "x^2 + y^3", "x*y - y^3"};
    for (const char* ftext : fs) {
        std::string name = std::string("principal_fixed(") + ftext + ")";
        run.check(suite, "(builtin)", name, evalWitness(r, std::string("adjoint(ideal(") + ftext + "))"),
                  [&] {
                      Ideal P(r, {parsePolynomial(ftext, r)});
                      require(idealEquals(adjointOf(P), P), "adjoint moved a principal ideal");
                      require(idealEquals(closureOf(P), P), "closure moved a principal ideal");
                  });
    }
}

void identitiesEntry(Runner& run, EntryCtx& c) {
    const std::string suite = "identities";
    const std::string& en = c.e->name;
    const std::string ie = idealExprOf(*c.e);

    run.check(suite, en, "engine_agreement", evalWitness(c.ring, "adjoint(" + ie + ")") + " --crosscheck",
              [&] {
                  requireTwoVarFinite(c);
                  auto [adj, names] = adjointAllEngines(c.I());
                  require(names.size() >= 2, "fewer than two engines accepted the input");
                  require(idealEquals(adj, c.adjoint()), "auto dispatch disagrees with the engines");
              });

    if (c.e->expectedAdjoint) {
        run.check(suite, en, "expected_adjoint", evalWitness(c.ring, "adjoint(" + ie + ")"), [&] {
            std::vector<Poly> gens;
            for (const std::string& gs : *c.e->expectedAdjoint)
                gens.push_back(parsePolynomial(gs, c.ring));
            require(idealEquals(c.adjoint(), Ideal(c.ring, gens)),
                    "adjoint differs from the value recorded in the corpus");
        });
    }

    run.check(suite, en, "closure_chain", evalWitness(c.ring, "adjoint(closure(" + ie + "))"), [&] {
        require(idealEquals(adjointOf(c.closure()), c.adjoint()),
                "adjoint of the closure differs from the adjoint");
    });

    run.check(suite, en, "closure_idempotent", evalWitness(c.ring, "closure(closure(" + ie + "))"),
              [&] {
                  require(idealEquals(closureOf(c.closure()), c.closure()),
                          "closure is not idempotent here");
              });

    run.check(suite, en, "adjoint_closed", evalWitness(c.ring, "closure(adjoint(" + ie + "))"), [&] {
        require(idealEquals(closureOf(c.adjoint()), c.adjoint()),
                "adjoint is not integrally closed here");
    });

    // adjoint(m I) = m adjoint(I) for monomial multipliers m.
    std::vector<std::string> mus = {c.ring->vars()[0]};
    if (c.ring->nvars() == 2) {
        mus.push_back(c.ring->vars()[1]);
        mus.push_back(c.ring->vars()[0] + "*" + c.ring->vars()[1]);
        mus.push_back(c.ring->vars()[0] + "^2");
    }
    for (const std::string& mu : mus) {
        run.check(suite, en, "scaling(" + mu + ")",
                  evalWitness(c.ring, "adjoint(product(ideal(" + mu + "), " + ie + "))"), [&] {
                      Ideal M(c.ring, {parsePolynomial(mu, c.ring)});
                      Ideal lhs = adjointOf(idealProduct(M, c.I()));
                      Ideal rhs = idealProduct(M, c.adjoint());
                      require(idealEquals(lhs, rhs), "adjoint does not commute with scaling by " + mu);
                      if (c.I().isMonomial()) {
                          require(idealEquals(monomialAdjoint(idealProduct(M, c.I())), rhs),
                                  "facet engine disagrees on the scaled ideal");
                      }
                  });
    }

    for (int n = 1; n <= run.nMax(); ++n) {
        run.check(suite, en, "power_colon(n=" + std::to_string(n) + ")",
                  evalWitness(c.ring, "quotient(adjoint(power(" + ie + ", " + std::to_string(n + 1) +
                                          ")), " + ie + ")"),
                  [&] {
                      if (!c.twoVarFinite && !c.I().isMonomial())
                          throw SkipNote{"power adjoints need monomial or two-variable input"};
                      require(idealEquals(idealColon(c.adjPower(n + 1), c.I()), c.adjPower(n)),
                              "adjoint(I^(n+1)) : I differs from adjoint(I^n)");
                  });
    }

    run.check(suite, en, "reduction_independence", evalWitness(c.ring, "adjoint(" + ie + ")"), [&] {
        requireTwoVarFinite(c);
        const Ideal& C = c.closure();
        const Reduction& r0 = c.reduction();
        Ideal I0(c.ring, {r0.a, r0.b});
        require(idealContains(idealProduct(I0, idealPower(C, r0.witnessN)),
                              idealPower(C, r0.witnessN + 1)),
                "recorded reduction fails its witness identity");
        std::optional<Reduction> second;
        for (int s = r0.schedule + 1; s < reductionScheduleCount() && !second; ++s)
            second = tryReductionSchedule(C, s, r0.witnessN + 2);
        if (!second) throw SkipNote{"no second reduction among the remaining schedules"};
        Ideal I1(c.ring, {second->a, second->b});
        Ideal q0 = idealColon(I0, C);
        Ideal q1 = idealColon(I1, C);
        require(idealEquals(q0, q1), "two reductions give different adjoint quotients");
        require(idealEquals(q0, c.adjoint()), "reduction quotient differs from the adjoint");
    });
}

void identitiesColonPairs(Runner& run, std::vector<EntryCtx>& ctxs) {
    const std::string suite = "identities";
    if (!run.selected(suite)) return;
    struct Fixed {
        const char* label;
        std::vector<const char*> gens;
    };
    const Fixed fixed[] = {
        {"m", {"x", "y"}},
        {"m2", {"x^2", "x*y", "y^2"}},
        {"xy2", {"x", "y^2"}},
        {"x2y3", {"x^2", "y^3"}},
    };
    int emitted = 0;
    for (EntryCtx& c : ctxs) {
        if (!c.ideal || !c.e->hasTag("pairs")) continue;
        for (const Fixed& f : fixed) {
            if (emitted >= 12) return;
            ++emitted;
            std::string fexpr = "ideal(";
            for (size_t i = 0; i < f.gens.size(); ++i)
                fexpr += std::string(i ? ", " : "") + f.gens[i];
            fexpr += ")";
            const std::string ie = idealExprOf(*c.e);
            run.check(suite, c.e->name, std::string("colon_pair(") + f.label + ")",
                      evalWitness(c.ring, "quotient(adjoint(product(" + ie + ", " + fexpr + ")), " +
                                              fexpr + ")"),
                      [&] {
                          requireTwoVarFinite(c);
                          std::vector<Poly> gens;
                          for (const char* g : f.gens) gens.push_back(parsePolynomial(g, c.ring));
                          Ideal F(c.ring, gens);
                          Ideal lhs = idealColon(adjointOf(idealProduct(c.I(), F)), F);
                          require(idealEquals(lhs, c.adjoint()),
                                  "adjoint(J I) : I differs from adjoint(J)");
                      });
        }
    }
}

// ---- briancon_skoda ----

void brianconSkodaEntry(Runner& run, EntryCtx& c) {
    const std::string suite = "briancon_skoda";
    const std::string& en = c.e->name;
    const std::string ie = idealExprOf(*c.e);
    const int d = c.ring->nvars();

    run.check(suite, en, "containment_chain", evalWitness(c.ring, "closure(" + ie + ")"), [&] {
        require(idealContains(c.closure(), c.I()), "ideal not inside its integral closure");
        require(idealContains(c.adjoint(), c.closure()), "closure not inside the adjoint");
    });

    for (int n = 1; n <= run.nMax(); ++n) {
        const std::string ns = std::to_string(n);
        run.check(suite, en, "bs_adjoint(n=" + ns + ")",
                  evalWitness(c.ring, "adjoint(power(" + ie + ", " + std::to_string(n + d - 1) + "))"),
                  [&] {
                      if (!c.twoVarFinite && !c.I().isMonomial())
                          throw SkipNote{"power adjoints need monomial or two-variable input"};
                      require(idealContains(c.power(n), c.adjPower(n + d - 1)),
                              "adjoint(I^(n+d-1)) is not inside I^n");
                  });
        run.check(suite, en, "bs_adjoint_slack(n=" + ns + ")",
                  evalWitness(c.ring, "adjoint(power(" + ie + ", " + std::to_string(n + d) + "))"),
                  [&] {
                      if (!c.twoVarFinite && !c.I().isMonomial())
                          throw SkipNote{"power adjoints need monomial or two-variable input"};
                      require(idealContains(c.power(n), c.adjPower(n + d)),
                              "adjoint(I^(n+d)) is not inside I^n");
                  });
        run.check(suite, en, "bs_closure(n=" + ns + ")",
                  evalWitness(c.ring, "closure(power(" + ie + ", " + std::to_string(n + d) + "))"),
                  [&] {
                      if (!c.twoVarFinite && !c.I().isMonomial())
                          throw SkipNote{"power closures need monomial or two-variable input"};
                      require(idealContains(c.power(n + 1), c.cloPower(n + d)),
                              "closure(I^(n+d)) is not inside I^(n+1)");
                  });
        if (d == 2) {
            run.check(suite, en, "huneke_colon(n=" + ns + ")",
                      evalWitness(c.ring, "quotient(closure(power(" + ie + ", " +
                                              std::to_string(n + 1) + ")), ideal(" +
                                              c.ring->vars()[0] + ", " + c.ring->vars()[1] + "))"),
                      [&] {
                          requireTwoVarFinite(c);
                          Ideal m = maximalIdeal(c.ring);
                          require(idealContains(c.power(n), idealColon(c.cloPower(n + 1), m)),
                                  "closure(I^(n+1)) : m is not inside I^n");
                      });
        }
    }
}

// ---- stabilization ----

void stabilizationEntry(Runner& run, EntryCtx& c) {
    const std::string suite = "stabilization";
    const std::string& en = c.e->name;
    const std::string ie = idealExprOf(*c.e);

    for (int n = 1; n <= run.nMax(); ++n) {
        run.check(suite, en, "stab_equality(n=" + std::to_string(n) + ")",
                  evalWitness(c.ring, "adjoint(power(" + ie + ", " + std::to_string(n + 1) + "))"),
                  [&] {
                      requireTwoVarFinite(c);
                      require(idealEquals(c.adjPower(n + 1), idealProduct(c.I(), c.adjPower(n))),
                              "adjoint(I^(n+1)) differs from I adjoint(I^n)");
                  });
    }

    run.check(suite, en, "coefficient_ideal",
              evalWitness(c.ring, "product(" + ie + ", adjoint(" + ie + "))"), [&] {
                  requireTwoVarFinite(c);
                  require(idealEquals(idealProduct(c.I(), c.adjoint()),
                                      idealProduct(c.closure(), c.adjoint())),
                          "I adjoint(I) differs from closure(I) adjoint(I)");
              });

    run.check(suite, en, "stab_index", evalWitness(c.ring, "adjoint(" + ie + ")"), [&] {
        requireTwoVarFinite(c);
        int idx = stabilizationIndex(c.I(), run.nMax());
        require(idx <= 1, "stabilization index " + std::to_string(idx) + " exceeds 1");
    });
}

// ---- geometry ----

void geometryEntry(Runner& run, EntryCtx& c) {
    const std::string suite = "geometry";
    const std::string& en = c.e->name;
    const std::string ie = idealExprOf(*c.e);

    run.check(suite, en, "hd_colength", evalWitness(c.ring, "closure(" + ie + ")"), [&] {
        requireTwoVarFinite(c);
        require(colength(c.closure()) == hoskinDeligneColength(c.pb()),
                "closure colength differs from the point-basis formula");
    });

    run.check(suite, en, "proximity", "", [&] {
        requireTwoVarFinite(c);
        require(proximityInequalitiesHold(c.pb()), "proximity inequality fails on the point basis");
    });

    run.check(suite, en, "basis_closure_invariant", evalWitness(c.ring, "closure(" + ie + ")"), [&] {
        requireTwoVarFinite(c);
        auto key = [](const PointBasis& pb) {
            std::vector<std::pair<std::string, int>> k;
            for (size_t i = 0; i < pb.cons.points.size(); ++i)
                k.emplace_back(pb.cons.points[i].path, pb.mult[i]);
            std::sort(k.begin(), k.end());
            return k;
        };
        require(key(basePoints(c.closure())) == key(c.pb()),
                "closure changed the point basis");
    });

    run.check(suite, en, "intersection_identity", "", [&] {
        requireTwoVarFinite(c);
        const Constellation& cons = c.pb().cons;
        for (const InfNearPoint& p : cons.points) {
            long e2 = exceptionalSelfIntersection(cons, p.id);
            long ke = exceptionalCanonicalDegree(cons, p.id);
            require(ke == -e2 - 2 * p.degOverRoot,
                    "canonical degree identity fails at point " +
                        (p.path.empty() ? std::string("(root)") : p.path));
        }
    });

    run.check(suite, en, "nef_closure", evalWitness(c.ring, "closure(" + ie + ")"), [&] {
        requireTwoVarFinite(c);
        PointBasis pbC = basePoints(c.closure());
        for (const InfNearPoint& p : pbC.cons.points)
            require(proximityExcess(pbC, p.id) >= 0,
                    "negative proximity excess at point " +
                        (p.path.empty() ? std::string("(root)") : p.path));
    });

    run.check(suite, en, "valuation_recursion", "", [&] {
        requireTwoVarFinite(c);
        const PointBasis& pb = c.pb();
        std::vector<int> targets = valuationTargets(pb.cons, pb.mult);
        for (const InfNearPoint& p : pb.cons.points)
            require(valuationValue(pb.cons, p.id, c.I()) == targets[p.id],
                    "substituted valuation differs from the proximity recursion at " +
                        (p.path.empty() ? std::string("(root)") : p.path));
    });

    run.check(suite, en, "valuation_formula", evalWitness(c.ring, "adjoint(" + ie + ")"), [&] {
        requireTwoVarFinite(c);
        const PointBasis& pb = c.pb();
        for (const InfNearPoint& p : pb.cons.points) {
            int vI = valuationValue(pb.cons, p.id, c.I());
            int lam = jacobianValue(pb.cons, p.id);
            int vAdj = valuationValue(pb.cons, p.id, c.adjoint());
            require(vAdj == std::max(0, vI - lam),
                    "adjoint valuation at " + (p.path.empty() ? std::string("(root)") : p.path) +
                        " is " + std::to_string(vAdj) + ", expected " +
                        std::to_string(std::max(0, vI - lam)));
        }
    });

    if (c.e->hasTag("transform")) {
        run.check(suite, en, "transform_commutation", "", [&] {
            requireTwoVarFinite(c);
            const Constellation& cons = c.pb().cons;
            int used = 0;
            for (const InfNearPoint& p : cons.points) {
                if (p.id == 0 || p.depth > 2 || p.field != nullptr) continue;
                if (used >= 4) break;
                ++used;
                Ideal t1 = adjointOf(transformAtPoint(c.I(), cons, p.id, true));
                Ideal t2 = transformAtPoint(c.adjoint(), cons, p.id, true);
                require(idealEquals(t1, t2),
                        "adjoint does not commute with the transform at " + p.path +
                            " (replay: adjl eval \"adjoint(transform(" + ie + ", " +
                            pathAsSteps(p.path) + "))\" --ring " + joinVars(c.ring) + ")");
            }
            if (used == 0) throw SkipNote{"no rational transform point within depth 2"};
        });
    }
}

EntryCtx makeCtx(const CorpusEntry& e) {
    EntryCtx c;
    c.e = &e;
    c.ring = makeRing(e.vars);
    std::vector<Poly> gens;
    gens.reserve(e.genStrings.size());
    for (const std::string& gs : e.genStrings) gens.push_back(parsePolynomial(gs, c.ring));
    c.ideal = Ideal(c.ring, gens);
    c.twoVarFinite = c.ring->nvars() == 2 && zeroDimAtOrigin(*c.ideal);
    return c;
}

}  // namespace

bool Report::allPassed() const {
    for (const CheckResult& r : results)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

int Report::countOf(CheckStatus s) const {
    int n = 0;
    for (const CheckResult& r : results) n += r.status == s ? 1 : 0;
    return n;
}

namespace {
const char* statusTag(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        case CheckStatus::Skip: return "SKIP";
    }
    return "FAIL";
}
const char* statusWord(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
    }
    return "fail";
}
}  // namespace

std::string Report::toText() const {
    std::ostringstream os;
    for (const CheckResult& r : results) {
        os << "[" << statusTag(r.status) << "] " << r.suite << "/" << r.entry << "/" << r.check;
        if (!r.reason.empty()) os << ": " << r.reason;
        os << "\n";
        if (r.status == CheckStatus::Fail && !r.witness.empty())
            os << "        replay: " << r.witness << "\n";
    }
    os << results.size() << " checks: " << countOf(CheckStatus::Pass) << " passed, "
       << countOf(CheckStatus::Fail) << " failed, " << countOf(CheckStatus::Skip) << " skipped\n";
    os << "elapsed " << elapsedMs << " ms\n";
    return os.str();
}

std::string Report::toJson() const {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
        nlohmann::ordered_json c;
        c["suite"] = r.suite;
        c["entry"] = r.entry;
        c["check"] = r.check;
        c["status"] = statusWord(r.status);
        c["reason"] = r.reason;
        c["witness"] = r.witness;
        j["checks"].push_back(std::move(c));
    }
    j["summary"] = {{"pass", countOf(CheckStatus::Pass)},
                    {"fail", countOf(CheckStatus::Fail)},
                    {"skip", countOf(CheckStatus::Skip)}};
    return j.dump(2) + "\n";
}

Report runSuites(const std::vector<CorpusEntry>& entries, const SuiteOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    Runner run(rep, opt);

    std::vector<EntryCtx> ctxs;
    ctxs.reserve(entries.size());
    for (const CorpusEntry& e : entries) {
        try {
            ctxs.push_back(makeCtx(e));
        } catch (const std::exception& ex) {
            run.fail("corpus", e.name, "entry_parse", ex.what());
        }
    }

    if (run.selected("identities")) {
        identitiesBuiltin(run);
        for (EntryCtx& c : ctxs) identitiesEntry(run, c);
        identitiesColonPairs(run, ctxs);
    }
    if (run.selected("briancon_skoda"))
        for (EntryCtx& c : ctxs) brianconSkodaEntry(run, c);
    if (run.selected("stabilization"))
        for (EntryCtx& c : ctxs) stabilizationEntry(run, c);
    if (run.selected("geometry"))
        for (EntryCtx& c : ctxs) geometryEntry(run, c);

    rep.elapsedMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    return rep;
}

}  // namespace adjl
