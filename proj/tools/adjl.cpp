#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adjl/adjoint.hpp"
#include "adjl/corpus.hpp"
#include "adjl/expr.hpp"
#include "adjl/harness.hpp"
#include "json.hpp"

namespace {

using namespace adjl;

std::vector<std::string> splitVars(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::string idealText(const Ideal& I) {
    if (I.isZeroIdeal()) return "ideal(0)";
    if (I.isUnitIdeal()) return "ideal(1)";
    std::string out = "ideal(";
    std::vector<Poly> gens = canonicalGenerators(I);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i) out += ", ";
        out += gens[i].toString();
    }
    return out + ")";
}

int runEval(const std::string& exprText, const std::string& ringSpec,
            const std::string& methodName, bool crosscheck, const std::string& format) {
    std::vector<std::string> vars = splitVars(ringSpec);
    if (vars.empty() || vars.size() > 4)
        throw PreconditionError("the ring needs between one and four variables");
    for (const std::string& v : vars)
        if (v.empty()) throw PreconditionError("empty variable name in --ring");
    RingPtr ring = makeRing(vars);

    EvalConfig cfg;
    cfg.method = adjointMethodFromName(methodName);
    cfg.crosscheck = crosscheck;

    ParsedQuery q = parseQuery(exprText, ring);
    if (q.pointBasisQuery) {
        Ideal I = evaluateExpr(q.expr, ring, cfg);
        PointBasis pb = basePoints(I);
        if (format == "structured") {
            nlohmann::ordered_json j;
            j["points"] = nlohmann::ordered_json::array();
            for (size_t i = 0; i < pb.cons.points.size(); ++i) {
                const InfNearPoint& p = pb.cons.points[i];
                nlohmann::ordered_json pj;
                pj["id"] = p.id;
                pj["path"] = p.path.empty() ? "(root)" : p.path;
                pj["depth"] = p.depth;
                pj["mult"] = pb.mult[i];
                pj["deg"] = p.degOverRoot;
                pj["prox"] = p.proximateTo;
                j["points"].push_back(std::move(pj));
            }
            std::cout << j.dump(2) << "\n";
        } else {
            for (size_t i = 0; i < pb.cons.points.size(); ++i) {
                const InfNearPoint& p = pb.cons.points[i];
                std::cout << "p" << p.id << " " << (p.path.empty() ? "(root)" : p.path)
                          << " depth " << p.depth << " mult " << pb.mult[i];
                if (p.degOverRoot > 1) std::cout << " deg " << p.degOverRoot;
                if (!p.proximateTo.empty()) {
                    std::cout << " prox {";
                    for (size_t k = 0; k < p.proximateTo.size(); ++k)
                        std::cout << (k ? "," : "") << p.proximateTo[k];
                    std::cout << "}";
                }
                std::cout << "\n";
            }
        }
        return 0;
    }

    Ideal R = evaluateExpr(q.expr, ring, cfg);
    if (format == "structured") {
        nlohmann::ordered_json j;
        j["result"] = idealText(R);
        j["generators"] = nlohmann::ordered_json::array();
        if (!R.isZeroIdeal() && !R.isUnitIdeal())
            for (const Poly& g : canonicalGenerators(R)) j["generators"].push_back(g.toString());
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << idealText(R) << "\n";
    }
    return 0;
}

int runSuitesCmd(const std::string& corpusPath, const std::string& suiteName, int nmax,
                 const std::string& format, const std::string& outPath) {
    if (suiteName != "all" && suiteName != "identities" && suiteName != "briancon_skoda" &&
        suiteName != "stabilization" && suiteName != "geometry")
        throw PreconditionError("unknown suite " + suiteName);
    if (nmax < 1 || nmax > 6) throw PreconditionError("--nmax must lie in 1..6");

    std::vector<CorpusEntry> entries = loadCorpusFile(corpusPath);
    SuiteOptions opt;
    opt.suite = suiteName;
    opt.nMax = nmax;
    Report rep = runSuites(entries, opt);

    if (format == "structured")
        std::cout << rep.toJson();
    else
        std::cout << rep.toText();

    if (!outPath.empty()) {
        std::ofstream out(outPath, std::ios::binary);
        if (!out) throw PreconditionError("cannot write report to " + outPath);
        out << rep.toJson();
    }
    return rep.allPassed() ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjoint ideals, integral closures, point bases, and reductions over Q"};
    app.require_subcommand(1);

    std::string exprText, ringSpec = "x,y", methodName = "auto", evalFormat = "text";
    bool crosscheck = false;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an ideal expression");
    eval->add_option("expr", exprText, "expression, e.g. \"adjoint(ideal(x^2, y^3))\"")->required();
    eval->add_option("--ring", ringSpec, "comma-separated variables, up to four (default x,y)");
    eval->add_option("--method", methodName,
                     "adjoint engine: auto, quotient, point-basis, definition, fitting, monomial");
    eval->add_flag("--crosscheck", crosscheck, "run every applicable adjoint engine and compare");
    eval->add_option("--format", evalFormat, "text or structured");

    std::string corpusPath, suiteName = "all", outPath, suitesFormat = "text";
    int nmax = 3;
    CLI::App* suites = app.add_subcommand("suites", "run the property-check suites over a corpus");
    suites->add_option("corpus", corpusPath, "corpus file")->required();
    suites->add_option("--suite", suiteName,
                       "identities, briancon_skoda, stabilization, geometry, or all");
    suites->add_option("--nmax", nmax, "power depth for the containment families (default 3)");
    suites->add_option("--format", suitesFormat, "text or structured");
    suites->add_option("--out", outPath, "also write the structured report to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed())
            return runEval(exprText, ringSpec, methodName, crosscheck, evalFormat);
        return runSuitesCmd(corpusPath, suiteName, nmax, suitesFormat, outPath);
    } catch (const ParseError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const UnsupportedError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const InternalCheckError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 3;
    } catch (const ResourceLimitError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 4;
    } catch (const adjl::Error& ex) {
        // Precondition and ambient-mismatch problems are input errors.
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
