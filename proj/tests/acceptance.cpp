// End-to-end acceptance harness. Drives the CLI binary the way a user would
// and prints one verdict line per criterion.
//
// Usage: adjl_acceptance <path-to-adjl> <corpus-dir>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;

std::string gBin;
std::string gCorpusDir;
int gRunCounter = 0;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string outFile = "acceptance_run_" + std::to_string(gRunCounter++) + ".out";
    std::string cmd = "\"" + gBin + "\" " + args + " > " + outFile + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.exitCode = WEXITSTATUS(status);
    r.out = readFile(outFile);
    std::remove(outFile.c_str());
    return r;
}

// Canonical printed form of an expression evaluated by the CLI.
std::string evalText(const std::string& expr, const std::string& extra = "") {
    RunResult r = run("eval \"" + expr + "\"" + (extra.empty() ? "" : " " + extra));
    if (r.exitCode != 0) return "<exit " + std::to_string(r.exitCode) + ">";
    return trim(r.out);
}

int countChecks(const json& rep, const std::string& prefix, const std::string& status,
                const std::string& entry = "") {
    int n = 0;
    if (!rep.contains("checks")) return 0;
    for (const auto& c : rep["checks"]) {
        std::string name = c["check"].get<std::string>();
        if (name.compare(0, prefix.size(), prefix) != 0) continue;
        if (c["status"].get<std::string>() != status) continue;
        if (!entry.empty() && c["entry"].get<std::string>() != entry) continue;
        ++n;
    }
    return n;
}

struct Criterion {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

// Adjoints of powers of the maximal ideal against the closed form, in the
// given variables: the whole ring while n < d, then m^(n-d+1).
void closedFormPowers(Criterion& c, const std::vector<std::string>& vars, int nTop,
                      const std::vector<std::string>& methods) {
    int d = static_cast<int>(vars.size());
    std::string m = "ideal(";
    for (int i = 0; i < d; ++i) m += (i ? ", " : "") + vars[i];
    m += ")";
    std::string ringArg = "--ring " + vars[0];
    for (int i = 1; i < d; ++i) ringArg += "," + vars[i];

    for (int n = 0; n <= nTop; ++n) {
        std::string expect =
            n < d ? "ideal(1)"
                  : evalText("power(" + m + ", " + std::to_string(n - d + 1) + ")", ringArg);
        for (const std::string& meth : methods) {
            std::string got = evalText("adjoint(power(" + m + ", " + std::to_string(n) + "))",
                                       ringArg + " --method " + meth);
            c.require(got == expect, "n=" + std::to_string(n) + " method " + meth + ": got " +
                                         got + ", want " + expect);
        }
    }
}

json loadReport(const std::string& path, Criterion& c) {
    std::string text = readFile(path);
    if (text.empty()) {
        c.require(false, "no report written to " + path);
        return json::object();
    }
    return json::parse(text, nullptr, false);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: adjl_acceptance <path-to-adjl> <corpus-dir>\n";
        return 2;
    }
    gBin = argv[1];
    gCorpusDir = argv[2];
    const std::string corpus = gCorpusDir + "/corpus.txt";
    const std::string negative = gCorpusDir + "/negative_control.txt";

    std::vector<std::pair<std::string, bool>> verdicts;
    auto report = [&](int k, const std::string& what, const Criterion& c) {
        std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << k << ": " << what;
        if (!c.ok && !c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        verdicts.emplace_back(what, c.ok);
    };

    {
        Criterion c;
        closedFormPowers(c, {"x", "y"}, 6, {"monomial", "point-basis"});
        report(1, "adjoints of powers of the maximal ideal in two variables, both engines", c);
    }
    {
        Criterion c;
        closedFormPowers(c, {"x", "y", "z"}, 5, {"monomial"});
        report(2, "adjoints of powers of the maximal ideal in three variables", c);
    }

    RunResult identities =
        run("suites \"" + corpus + "\" --suite identities --nmax 2 --out acceptance_identities.json");
    Criterion cIdent;
    cIdent.require(identities.exitCode == 0,
                   "identities suite exited with " + std::to_string(identities.exitCode));
    json identJson = cIdent.ok ? loadReport("acceptance_identities.json", cIdent) : json::object();
    {
        Criterion c = cIdent;
        int agree = countChecks(identJson, "engine_agreement", "pass");
        c.require(agree >= 20, "engine agreement passed on only " + std::to_string(agree) +
                                   " entries, need 20");
        report(3, "all applicable adjoint engines agree on at least 20 corpus entries", c);
    }
    {
        Criterion c;
        RunResult r = run("suites \"" + corpus + "\" --suite briancon_skoda --nmax 4 --out acceptance_bs.json");
        c.require(r.exitCode == 0, "suite exited with " + std::to_string(r.exitCode));
        if (c.ok) {
            json j = loadReport("acceptance_bs.json", c);
            c.require(countChecks(j, "bs_adjoint", "pass") > 0, "no passing bs_adjoint checks");
            c.require(countChecks(j, "huneke_colon", "pass") > 0, "no passing huneke_colon checks");
        }
        report(4, "Briancon-Skoda containment families hold up to n = 4", c);
    }
    {
        Criterion c;
        RunResult r = run("suites \"" + corpus +
                          "\" --suite stabilization --nmax 4 --out acceptance_stab.json");
        c.require(r.exitCode == 0, "suite exited with " + std::to_string(r.exitCode));
        if (c.ok) {
            json j = loadReport("acceptance_stab.json", c);
            c.require(countChecks(j, "stab_equality", "pass") > 0, "no passing stab_equality checks");
            c.require(countChecks(j, "stab_index", "pass") > 0, "no passing stab_index checks");
        }
        report(5, "adjoints of powers stabilize from the first power on, up to n = 4", c);
    }
    {
        Criterion c = cIdent;
        int pairs = countChecks(identJson, "colon_pair", "pass");
        c.require(pairs >= 10,
                  "colon law passed on only " + std::to_string(pairs) + " pairs, need 10");
        report(6, "the colon law adjoint(J*F) : F = adjoint(J) holds on at least 10 pairs", c);
    }
    {
        Criterion c;
        RunResult r =
            run("suites \"" + corpus + "\" --suite geometry --out acceptance_geometry.json");
        c.require(r.exitCode == 0, "suite exited with " + std::to_string(r.exitCode));
        if (c.ok) {
            json j = loadReport("acceptance_geometry.json", c);
            c.require(countChecks(j, "hd_colength", "pass", "sq2") == 1,
                      "Hoskin-Deligne colength did not pass on the extension-field entry");
            int tc = countChecks(j, "transform_commutation", "pass");
            c.require(tc >= 3, "transform commutation passed on only " + std::to_string(tc) +
                                   " entries, need 3");
        }
        report(7, "point-basis geometry invariants, including an extension-field point basis", c);
    }
    {
        Criterion c = cIdent;
        int red = countChecks(identJson, "reduction_independence", "pass");
        c.require(red >= 1, "no entry passed reduction independence");
        report(8, "the adjoint from a reduction is independent of the schedule that found it", c);
    }
    {
        Criterion c;
        RunResult r = run("suites \"" + negative + "\" --suite identities");
        c.require(r.exitCode == 5,
                  "expected exit 5 on the negative control, got " + std::to_string(r.exitCode));
        report(9, "a corpus with a wrong expected adjoint makes the suites fail", c);
    }

    int failed = 0;
    for (const auto& v : verdicts) failed += v.second ? 0 : 1;
    if (failed) {
        std::cout << failed << " of " << verdicts.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << verdicts.size() << " criteria passed\n";
    return 0;
}
