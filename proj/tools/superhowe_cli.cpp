// Command-line front end: construct highest weight vectors, run theorem
// verification suites, and check the hook Schur identity corpus.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error, 3 hook violation, 4 internal construction fault.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "superhowe/errors.hpp"
#include "superhowe/hwv.hpp"
#include "superhowe/realization.hpp"
#include "superhowe/verify.hpp"
#include "superhowe/version.hpp"

using namespace howe;
using nlohmann::ordered_json;

namespace {

struct Output {
    std::string format = "text";
    std::string path;
    bool timing = false;

    void write(const std::string& text, const ordered_json& json) const {
        const std::string body = format == "json" ? json.dump(2) + "\n" : text;
        if (path.empty()) {
            std::cout << body;
        } else {
            std::ofstream out(path);
            out << body;
        }
    }
};

std::string weight_str(const WeightVector& w, int even_count) {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < static_cast<int>(w.entries.size()); ++i) {
        if (i == even_count)
            out << ';';
        else if (i > 0)
            out << ',';
        out << w.entries[static_cast<std::size_t>(i)];
    }
    out << ')';
    return out.str();
}

int run_hwv(const std::string& model, int p, int q, int m, int n, const std::string& lambda_text,
            const Output& output) {
    const Partition lambda = Partition::parse(lambda_text);
    ordered_json j;
    j["version"] = kVersion;
    j["command"] = "hwv";
    j["model"] = model;
    j["lambda"] = lambda.parts();
    std::ostringstream text;
    text << "lambda: " << lambda.to_string() << "\n";
    bool highest = false;
    if (model == "tensor") {
        j["params"] = {{"p", p}, {"q", q}, {"m", m}, {"n", n}};
        const TablePtr table = VarTable::tensor(p, q, m, n);
        const SuperPolynomial v = hwv_general(table, lambda);
        const AlgebraRealization glpq = build_glpq(table);
        const AlgebraRealization glmn = build_glmn(table);
        const WeightVector wpq = weight_of(v, glpq);
        const WeightVector wmn = weight_of(v, glmn);
        highest = is_highest(v, {glpq, glmn});
        j["vector"] = to_string(v);
        j["weights"] = {{"glpq", wpq.entries}, {"glmn", wmn.entries}};
        j["highest"] = highest;
        text << "vector: " << to_string(v) << "\n";
        text << "weight[" << glpq.name() << "]: " << weight_str(wpq, p) << "\n";
        text << "weight[" << glmn.name() << "]: " << weight_str(wmn, m) << "\n";
    } else {
        j["params"] = {{"m", m}, {"n", n}};
        const TablePtr table = VarTable::s2(m, n);
        const SuperPolynomial v = hwv_s2(table, lambda);
        const AlgebraRealization alg = build_s2_glmn(table);
        const WeightVector w = weight_of(v, alg);
        highest = is_highest(v, {alg});
        j["vector"] = to_string(v);
        j["weights"] = {{"glmn", w.entries}};
        j["highest"] = highest;
        text << "vector: " << to_string(v) << "\n";
        text << "weight[" << alg.name() << "]: " << weight_str(w, m) << "\n";
    }
    text << "highest: " << (highest ? "true" : "false") << "\n";
    output.write(text.str(), j);
    return highest ? 0 : 4;
}

ordered_json report_json(const VerificationReport& rep, bool timing) {
    return ordered_json::parse(rep.to_json(timing));
}

int run_verify(const std::string& theorem, const std::string& suite, int p, int q, int m, int n,
               int maxdeg, int max_size, int s2_max_size, const Output& output) {
    std::vector<VerificationReport> reports;
    if (!suite.empty()) {
        const CaseGrid grid = default_grid();
        for (const auto& [gp, gq, gm, gn] : grid.tensor_cells)
            for (int k = 0; k <= maxdeg; ++k) {
                reports.push_back(verify_tensor_duality(gp, gq, gm, gn, k));
                reports.push_back(verify_skew_duality(gp, gq, gm, gn, k));
            }
        for (const auto& [gm, gn] : grid.s2_cells)
            for (int k = 0; k <= maxdeg; ++k) {
                reports.push_back(verify_s2_decomposition(gm, gn, k));
                reports.push_back(verify_lambda_s2_decomposition(gm, gn, k));
            }
        reports.push_back(run_hwv_suite(grid));
    } else if (theorem == "hwv-suite") {
        CaseGrid grid = default_grid();
        grid.tensor_max_size = max_size;
        grid.s2_max_size = s2_max_size;
        reports.push_back(run_hwv_suite(grid));
    } else {
        for (int k = 0; k <= maxdeg; ++k) {
            if (theorem == "tensor-duality")
                reports.push_back(verify_tensor_duality(p, q, m, n, k));
            else if (theorem == "skew-duality")
                reports.push_back(verify_skew_duality(p, q, m, n, k));
            else if (theorem == "s2-decomposition")
                reports.push_back(verify_s2_decomposition(m, n, k));
            else
                reports.push_back(verify_lambda_s2_decomposition(m, n, k));
        }
    }
    bool all_pass = true;
    std::ostringstream text;
    ordered_json j;
    j["version"] = kVersion;
    j["command"] = "verify";
    j["reports"] = ordered_json::array();
    for (const VerificationReport& rep : reports) {
        all_pass = all_pass && rep.pass();
        text << rep.to_text() << "\n";
        j["reports"].push_back(report_json(rep, output.timing));
    }
    j["pass"] = all_pass;
    text << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
    output.write(text.str(), j);
    return all_pass ? 0 : 1;
}

int run_identities(const std::string& which, int p, int q, int m, int n, int maxdeg,
                   const Output& output) {
    std::vector<IdentityReport> reports;
    if (which == "super-cauchy") {
        reports.push_back(verify_super_cauchy(p, q, m, n, maxdeg));
    } else if (which == "super-dual-cauchy") {
        reports.push_back(verify_super_dual_cauchy(p, q, m, n, maxdeg));
    } else if (which == "s2") {
        reports = verify_s2_characters(m, n, maxdeg);
    } else {
        reports = verify_classical_quartet(m, maxdeg);
    }
    bool all_pass = true;
    std::ostringstream text;
    ordered_json j;
    j["version"] = kVersion;
    j["command"] = "identities";
    j["reports"] = ordered_json::array();
    for (const IdentityReport& rep : reports) {
        all_pass = all_pass && rep.pass;
        text << rep.to_text() << "\n";
        ordered_json r;
        r["identity"] = rep.identity;
        ordered_json params;
        for (const auto& [key, value] : rep.params) params[key] = value;
        r["params"] = params;
        r["max_degree"] = rep.max_degree;
        r["status"] = rep.pass ? "pass" : "fail";
        if (!rep.pass) r["first_mismatch"] = rep.first_mismatch;
        j["reports"].push_back(r);
    }
    j["pass"] = all_pass;
    text << (all_pass ? "all identities verified" : "FAILURES present") << "\n";
    output.write(text.str(), j);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of super Howe duality: highest weight vectors, "
                 "multiplicity-free characters, hook Schur identities"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Output output;
    int p = 1, q = 0, m = 1, n = 0;
    int maxdeg = 3, max_size = 5, s2_max_size = 8;
    std::string model = "tensor", lambda_text, theorem, suite, which;
    long budget = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", output.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", output.path, "write the report to this path");
        cmd->add_flag("--timing", output.timing, "include wall time in JSON reports");
        cmd->add_option("--budget", budget, "term-count ceiling (default from SUPERHOWE_BUDGET)");
    };

    CLI::App* hwv = app.add_subcommand("hwv", "construct one highest weight vector");
    hwv->add_option("--model", model, "tensor or s2")
        ->required()
        ->check(CLI::IsMember({"tensor", "s2"}));
    hwv->add_option("-p", p, "gl(p|q) even rank");
    hwv->add_option("-q", q, "gl(p|q) odd rank");
    hwv->add_option("-m", m, "gl(m|n) even rank");
    hwv->add_option("-n", n, "gl(m|n) odd rank");
    hwv->add_option("--lambda", lambda_text, "partition, e.g. 2,1")->required();
    add_common(hwv);

    CLI::App* verify = app.add_subcommand("verify", "run a theorem suite");
    verify->add_option("--theorem", theorem, "single theorem to check")
        ->check(CLI::IsMember({"tensor-duality", "skew-duality", "s2-decomposition",
                               "lambda-s2-decomposition", "hwv-suite"}));
    verify->add_option("--suite", suite, "named suite")->check(CLI::IsMember({"default"}));
    verify->add_option("-p", p, "gl(p|q) even rank");
    verify->add_option("-q", q, "gl(p|q) odd rank");
    verify->add_option("-m", m, "gl(m|n) even rank");
    verify->add_option("-n", n, "gl(m|n) odd rank");
    verify->add_option("--max-degree", maxdeg, "largest symmetric power / slice degree");
    verify->add_option("--max-size", max_size, "hwv suite: largest tensor-model |lambda|");
    verify->add_option("--s2-max-size", s2_max_size, "hwv suite: largest s2-model |lambda|");
    add_common(verify);

    CLI::App* identities = app.add_subcommand("identities", "hook Schur identity corpus");
    identities->add_option("--which", which, "identity family")
        ->required()
        ->check(CLI::IsMember({"super-cauchy", "super-dual-cauchy", "s2", "classical-quartet"}));
    identities->add_option("-p", p, "x variable count");
    identities->add_option("-q", q, "y variable count");
    identities->add_option("-m", m, "u variable count");
    identities->add_option("-n", n, "v variable count");
    identities->add_option("--max-degree", maxdeg, "truncation degree");
    add_common(identities);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (budget > 0) set_term_budget(static_cast<std::size_t>(budget));

    try {
        if (hwv->parsed()) return run_hwv(model, p, q, m, n, lambda_text, output);
        if (verify->parsed()) {
            if (theorem.empty() && suite.empty()) {
                std::cerr << "verify: pass --theorem or --suite\n";
                return 2;
            }
            return run_verify(theorem, suite, p, q, m, n, maxdeg, max_size, s2_max_size, output);
        }
        return run_identities(which, p, q, m, n, maxdeg, output);
    } catch (const HookViolationError& e) {
        std::cerr << "hook violation: " << e.what() << "\n";
        return 3;
    } catch (const NotDivisibleError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 4;
    } catch (const AuxiliaryResidueError& e) {
        std::cerr << "internal: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
