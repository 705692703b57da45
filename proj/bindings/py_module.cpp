// Python bindings for the main operations: highest weight vector
// construction, theorem verification, and the identity corpus.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superhowe/errors.hpp"
#include "superhowe/hwv.hpp"
#include "superhowe/realization.hpp"
#include "superhowe/verify.hpp"
#include "superhowe/version.hpp"

namespace py = pybind11;
using namespace howe;

namespace {

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict hwv(const std::string& model, const std::vector<int>& lam, int p, int q, int m, int n) {
    const Partition lambda = to_partition(lam);
    py::dict out;
    out["model"] = model;
    out["lambda"] = lambda.parts();
    if (model == "tensor") {
        const TablePtr table = VarTable::tensor(p, q, m, n);
        const SuperPolynomial v = hwv_general(table, lambda);
        const AlgebraRealization glpq = build_glpq(table);
        const AlgebraRealization glmn = build_glmn(table);
        out["vector"] = to_string(v);
        out["weight_glpq"] = weight_of(v, glpq).entries;
        out["weight_glmn"] = weight_of(v, glmn).entries;
        out["highest"] = is_highest(v, {glpq, glmn});
    } else if (model == "s2") {
        const TablePtr table = VarTable::s2(m, n);
        const SuperPolynomial v = hwv_s2(table, lambda);
        const AlgebraRealization alg = build_s2_glmn(table);
        out["vector"] = to_string(v);
        out["weight_glmn"] = weight_of(v, alg).entries;
        out["highest"] = is_highest(v, {alg});
    } else {
        throw std::invalid_argument("model must be 'tensor' or 's2'");
    }
    return out;
}

py::dict report_dict(const VerificationReport& rep) {
    py::dict out;
    out["theorem"] = rep.theorem;
    py::dict params;
    for (const auto& [k, v] : rep.params) params[py::str(k)] = v;
    out["params"] = params;
    out["checks"] = rep.checks;
    out["status"] = rep.status;
    out["counterexample"] = rep.counterexample;
    return out;
}

py::dict verify(const std::string& theorem, int p, int q, int m, int n, int k) {
    VerificationReport rep;
    if (theorem == "tensor-duality")
        rep = verify_tensor_duality(p, q, m, n, k);
    else if (theorem == "skew-duality")
        rep = verify_skew_duality(p, q, m, n, k);
    else if (theorem == "s2-decomposition")
        rep = verify_s2_decomposition(m, n, k);
    else if (theorem == "lambda-s2-decomposition")
        rep = verify_lambda_s2_decomposition(m, n, k);
    else
        throw std::invalid_argument("unknown theorem: " + theorem);
    return report_dict(rep);
}

py::dict hwv_suite(int tensor_max_size, int s2_max_size) {
    CaseGrid grid = default_grid();
    grid.tensor_max_size = tensor_max_size;
    grid.s2_max_size = s2_max_size;
    return report_dict(run_hwv_suite(grid));
}

py::list identities(const std::string& which, int p, int q, int m, int n, int maxdeg) {
    std::vector<IdentityReport> reports;
    if (which == "super-cauchy")
        reports.push_back(verify_super_cauchy(p, q, m, n, maxdeg));
    else if (which == "super-dual-cauchy")
        reports.push_back(verify_super_dual_cauchy(p, q, m, n, maxdeg));
    else if (which == "s2")
        reports = verify_s2_characters(m, n, maxdeg);
    else if (which == "classical-quartet")
        reports = verify_classical_quartet(m, maxdeg);
    else
        throw std::invalid_argument("unknown identity family: " + which);
    py::list out;
    for (const IdentityReport& rep : reports) {
        py::dict d;
        d["identity"] = rep.identity;
        d["pass"] = rep.pass;
        d["max_degree"] = rep.max_degree;
        d["first_mismatch"] = rep.first_mismatch;
        out.append(d);
    }
    return out;
}

std::string hook_schur_str(const std::vector<int>& lam, int m, int n) {
    const TablePtr t = VarTable::chars({{'x', m}, {'y', n}});
    std::vector<int> xs, ys;
    for (int i = 1; i <= m; ++i) xs.push_back(t->cvar('x', i));
    for (int j = 1; j <= n; ++j) ys.push_back(t->cvar('y', j));
    return to_string(hook_schur(t, to_partition(lam), xs, ys));
}

std::vector<std::vector<int>> hook_partitions_py(int k, int p, int q, int m, int n) {
    std::vector<std::vector<int>> out;
    for (const Partition& lam : hook_partitions(k, p, q, m, n)) out.push_back(lam.parts());
    return out;
}

}  // namespace

PYBIND11_MODULE(_superhowe, mod) {
    mod.doc() = "exact super Howe duality toolkit: highest weight vectors, characters, "
                "hook Schur identities";
    mod.attr("__version__") = kVersion;

    py::register_exception<HookViolationError>(mod, "HookViolation", PyExc_ValueError);
    py::register_exception<NotDivisibleError>(mod, "NotDivisible", PyExc_ArithmeticError);
    py::register_exception<AuxiliaryResidueError>(mod, "AuxiliaryResidue", PyExc_ArithmeticError);

    mod.def("hwv", &hwv, py::arg("model"), py::arg("lam"), py::arg("p") = 0, py::arg("q") = 0,
            py::arg("m") = 0, py::arg("n") = 0,
            "construct a highest weight vector and self-check it");
    mod.def("verify", &verify, py::arg("theorem"), py::arg("p") = 0, py::arg("q") = 0,
            py::arg("m") = 0, py::arg("n") = 0, py::arg("k") = 2,
            "verify one character decomposition at degree k");
    mod.def("hwv_suite", &hwv_suite, py::arg("tensor_max_size") = 3, py::arg("s2_max_size") = 4,
            "run the grid highest-weight-vector suite");
    mod.def("identities", &identities, py::arg("which"), py::arg("p") = 0, py::arg("q") = 0,
            py::arg("m") = 0, py::arg("n") = 0, py::arg("max_degree") = 4,
            "verify a hook Schur identity family");
    mod.def("hook_schur", &hook_schur_str, py::arg("lam"), py::arg("m"), py::arg("n"),
            "hook Schur polynomial in canonical text form");
    mod.def("hook_partitions", &hook_partitions_py, py::arg("k"), py::arg("p"), py::arg("q"),
            py::arg("m"), py::arg("n"), "partitions of k inside both hooks");
}
