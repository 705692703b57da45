#include "superhowe/verify.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "superhowe/errors.hpp"
#include "superhowe/hwv.hpp"

namespace howe {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string param_text(const std::vector<std::pair<std::string, int>>& params) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out << ", ";
        out << k << "=" << v;
        first = false;
    }
    return out.str();
}

}  // namespace

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << theorem << " [" << param_text(params) << "] checks=" << checks << ": " << status;
    if (!counterexample.empty()) out << " (" << counterexample << ")";
    return out.str();
}

std::string VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    nlohmann::ordered_json jp;
    for (const auto& [k, v] : params) jp[k] = v;
    j["params"] = jp;
    j["checks"] = checks;
    j["status"] = status;
    if (!counterexample.empty()) j["counterexample"] = counterexample;
    if (with_timing) j["wall_ms"] = wall_ms;
    return j.dump();
}

SuperPolynomial graded_character(const TablePtr& chars,
                                 const std::vector<std::pair<Monomial, Parity>>& gens, int k) {
    int gen_degree = 0;
    for (const auto& [mono, parity] : gens) {
        if (gen_degree == 0) gen_degree = mono.degree();
        if (mono.degree() != gen_degree)
            throw std::invalid_argument("graded_character: mixed generator degrees");
    }
    if (gens.empty()) gen_degree = 1;
    const int cap = k * gen_degree;
    MultiSeries series = MultiSeries::one(chars, cap);
    for (const auto& [mono, parity] : gens) {
        if (parity == Parity::even) {
            series.mul_geometric_inverse(mono, -1);
        } else {
            SuperPolynomial f = SuperPolynomial::constant(chars, 1);
            f.add_term(mono, 1);
            series *= f;
        }
        if (series.poly().size() > term_budget())
            throw OverBudgetError("graded_character: series exceeds budget");
    }
    return series.slice(cap);
}

namespace {

std::vector<int> family_ids(const TablePtr& t, char fam) {
    std::vector<int> ids;
    for (int i = 1; i <= t->family_size(fam); ++i) ids.push_back(t->cvar(fam, i));
    return ids;
}

// weight vector of a model variable as a character monomial
Monomial weight_monomial(const std::vector<int>& weight) {
    Monomial m;
    for (std::size_t i = 0; i < weight.size(); ++i)
        if (weight[i] != 0) m.even.emplace_back(static_cast<int>(i), weight[i]);
    return m;
}

std::vector<std::pair<Monomial, Parity>> model_generators(const TablePtr& model, bool flip) {
    std::vector<std::pair<Monomial, Parity>> gens;
    for (int id = 0; id < model->count(); ++id) {
        Parity par = model->parity(id);
        if (flip) par = par ^ Parity::odd;
        gens.emplace_back(weight_monomial(model->var(id).weight), par);
    }
    return gens;
}

VerificationReport character_comparison(std::string theorem,
                                        std::vector<std::pair<std::string, int>> params,
                                        const SuperPolynomial& direct,
                                        const SuperPolynomial& decomposition, int terms) {
    VerificationReport rep;
    rep.theorem = std::move(theorem);
    rep.params = std::move(params);
    rep.checks = terms;
    const SuperPolynomial diff = direct - decomposition;
    if (!diff.is_zero()) {
        rep.status = "fail";
        const Monomial& mono = diff.terms().begin()->first;
        std::ostringstream out;
        out << "monomial " << to_string(SuperPolynomial::term(direct.table(), mono, 1))
            << ": direct " << direct.coefficient(mono).get_str() << " vs sum "
            << decomposition.coefficient(mono).get_str();
        rep.counterexample = out.str();
    }
    return rep;
}

}  // namespace

VerificationReport verify_tensor_duality(int p, int q, int m, int n, int k) {
    const auto start = Clock::now();
    const TablePtr chars = VarTable::chars({{'x', p}, {'y', q}, {'u', m}, {'v', n}});
    const TablePtr model = VarTable::tensor(p, q, m, n);
    const SuperPolynomial direct = graded_character(chars, model_generators(model, false), k);
    SuperPolynomial sum(chars);
    const auto xs = family_ids(chars, 'x'), ys = family_ids(chars, 'y');
    const auto us = family_ids(chars, 'u'), vs = family_ids(chars, 'v');
    int terms = 0;
    for (const Partition& lam : hook_partitions(k, p, q, m, n)) {
        sum += hook_schur(chars, lam, xs, ys) * hook_schur(chars, lam, us, vs);
        ++terms;
    }
    VerificationReport rep = character_comparison(
        "tensor-duality", {{"p", p}, {"q", q}, {"m", m}, {"n", n}, {"k", k}}, direct, sum, terms);
    rep.wall_ms = ms_since(start);
    return rep;
}

VerificationReport verify_skew_duality(int p, int q, int m, int n, int k) {
    const auto start = Clock::now();
    const TablePtr chars = VarTable::chars({{'x', p}, {'y', q}, {'u', m}, {'v', n}});
    const TablePtr model = VarTable::tensor(p, q, m, n);
    const SuperPolynomial direct = graded_character(chars, model_generators(model, true), k);
    SuperPolynomial sum(chars);
    const auto xs = family_ids(chars, 'x'), ys = family_ids(chars, 'y');
    const auto us = family_ids(chars, 'u'), vs = family_ids(chars, 'v');
    int terms = 0;
    for (const Partition& lam : partitions_of(k)) {
        if (!lam.in_hook(p, q)) continue;
        const Partition lt = lam.transpose();
        if (!lt.in_hook(m, n)) continue;
        sum += hook_schur(chars, lam, xs, ys) * hook_schur(chars, lt, us, vs);
        ++terms;
    }
    VerificationReport rep = character_comparison(
        "skew-duality", {{"p", p}, {"q", q}, {"m", m}, {"n", n}, {"k", k}}, direct, sum, terms);
    rep.wall_ms = ms_since(start);
    return rep;
}

VerificationReport verify_s2_decomposition(int m, int n, int k) {
    const auto start = Clock::now();
    const TablePtr chars = VarTable::chars({{'x', m}, {'y', n}});
    const TablePtr model = VarTable::s2(m, n);
    const SuperPolynomial direct = graded_character(chars, model_generators(model, false), k);
    SuperPolynomial sum(chars);
    const auto xs = family_ids(chars, 'x'), ys = family_ids(chars, 'y');
    int terms = 0;
    for (const Partition& lam : even_partitions(2 * k, m, n)) {
        sum += hook_schur(chars, lam, xs, ys);
        ++terms;
    }
    VerificationReport rep = character_comparison("s2-decomposition",
                                                  {{"m", m}, {"n", n}, {"k", k}}, direct, sum, terms);
    rep.wall_ms = ms_since(start);
    return rep;
}

VerificationReport verify_lambda_s2_decomposition(int m, int n, int k) {
    const auto start = Clock::now();
    const TablePtr chars = VarTable::chars({{'x', m}, {'y', n}});
    const TablePtr model = VarTable::s2(m, n);
    const SuperPolynomial direct = graded_character(chars, model_generators(model, true), k);
    SuperPolynomial sum(chars);
    const auto xs = family_ids(chars, 'x'), ys = family_ids(chars, 'y');
    int terms = 0;
    for (const Partition& lam : nested_hook_partitions(2 * k, m, n, HookFlavor::arm_long)) {
        sum += hook_schur(chars, lam, xs, ys);
        ++terms;
    }
    VerificationReport rep = character_comparison(
        "lambda-s2-decomposition", {{"m", m}, {"n", n}, {"k", k}}, direct, sum, terms);
    rep.wall_ms = ms_since(start);
    return rep;
}

CaseGrid default_grid() {
    CaseGrid grid;
    grid.tensor_cells = {{1, 1, 1, 1}, {2, 1, 1, 1}, {1, 1, 2, 1}, {2, 1, 2, 1},
                         {2, 2, 1, 1}, {3, 0, 1, 2}, {2, 0, 1, 1}};
    grid.tensor_max_size = 5;
    grid.s2_cells = {{1, 2}, {2, 2}, {1, 4}, {2, 3}};
    grid.s2_max_size = 8;
    return grid;
}

VerificationReport run_hwv_suite(const CaseGrid& grid) {
    const auto start = Clock::now();
    VerificationReport rep;
    rep.theorem = "hwv-suite";
    auto fail = [&](const std::string& what) {
        if (rep.status == "pass") {
            rep.status = "fail";
            rep.counterexample = what;
        }
    };
    try {
        for (const auto& [p, q, m, n] : grid.tensor_cells) {
            const TablePtr table = VarTable::tensor(p, q, m, n);
            const std::vector<AlgebraRealization> both = {build_glpq(table), build_glmn(table)};
            for (int k = 0; k <= grid.tensor_max_size; ++k) {
                for (const Partition& lam : hook_partitions(k, p, q, m, n)) {
                    const std::string where = "tensor (" + std::to_string(p) + "," +
                                              std::to_string(q) + "," + std::to_string(m) + "," +
                                              std::to_string(n) + ") lambda=(" + lam.to_string() +
                                              ")";
                    SuperPolynomial v(table);
                    try {
                        v = hwv_general(table, lam);
                    } catch (const OverBudgetError&) {
                        throw;
                    } catch (const std::exception& e) {
                        fail(where + ": construction threw " + e.what());
                        continue;
                    }
                    ++rep.checks;
                    if (v.is_zero()) {
                        fail(where + ": vector is zero");
                        continue;
                    }
                    try {
                        if (!(weight_of(v, both[0]) == diagram_to_hw(lam, p, q).as_weight())) {
                            fail(where + ": gl(p|q) weight mismatch");
                            continue;
                        }
                        if (!(weight_of(v, both[1]) == diagram_to_hw(lam, m, n).as_weight())) {
                            fail(where + ": gl(m|n) weight mismatch");
                            continue;
                        }
                    } catch (const NotAWeightVectorError& e) {
                        fail(where + ": " + e.what());
                        continue;
                    }
                    if (!is_highest(v, both)) fail(where + ": not annihilated by some raising op");
                }
            }
        }
        for (const auto& [m, n] : grid.s2_cells) {
            const TablePtr table = VarTable::s2(m, n);
            const std::vector<AlgebraRealization> alg = {build_s2_glmn(table)};
            for (int k = 0; k <= grid.s2_max_size; ++k) {
                for (const Partition& lam : even_partitions(k, m, n)) {
                    const std::string where = "s2 (" + std::to_string(m) + "," + std::to_string(n) +
                                              ") lambda=(" + lam.to_string() + ")";
                    SuperPolynomial v(table);
                    try {
                        v = hwv_s2(table, lam);
                    } catch (const OverBudgetError&) {
                        throw;
                    } catch (const std::exception& e) {
                        fail(where + ": construction threw " + e.what());
                        continue;
                    }
                    ++rep.checks;
                    if (v.is_zero()) {
                        fail(where + ": vector is zero");
                        continue;
                    }
                    try {
                        if (!(weight_of(v, alg[0]) == diagram_to_hw(lam, m, n).as_weight())) {
                            fail(where + ": weight mismatch");
                            continue;
                        }
                    } catch (const NotAWeightVectorError& e) {
                        fail(where + ": " + e.what());
                        continue;
                    }
                    if (!is_highest(v, alg)) fail(where + ": not annihilated by some raising op");
                }
            }
        }
    } catch (const OverBudgetError& e) {
        rep.status = "over-budget";
        rep.counterexample = e.what();
    }
    rep.wall_ms = ms_since(start);
    return rep;
}

}  // namespace howe
