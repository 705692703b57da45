#include "superhowe/realization.hpp"

#include <sstream>
#include <stdexcept>

#include "superhowe/errors.hpp"

namespace howe {

WeightVector WeightVector::operator+(const WeightVector& o) const {
    WeightVector r = *this;
    if (r.entries.size() != o.entries.size())
        throw std::invalid_argument("WeightVector: length mismatch");
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += o.entries[i];
    return r;
}

std::string WeightVector::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << ',';
        out << entries[i];
    }
    out << ')';
    return out.str();
}

WeightVector HighestWeight::as_weight() const {
    WeightVector w;
    w.entries = a;
    w.entries.insert(w.entries.end(), b.begin(), b.end());
    return w;
}

std::string HighestWeight::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) out << ',';
        out << a[i];
    }
    out << ';';
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) out << ',';
        out << b[i];
    }
    out << ')';
    return out.str();
}

HighestWeight diagram_to_hw(const Partition& lambda, int m, int n) {
    if (lambda.part(m + 1) > n)
        throw HookViolationError("diagram_to_hw: lambda_{m+1} > n for lambda=" + lambda.to_string());
    HighestWeight hw;
    hw.a.resize(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) hw.a[static_cast<std::size_t>(i - 1)] = lambda.part(i);
    const Partition lt = lambda.transpose();
    hw.b.resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        hw.b[static_cast<std::size_t>(j - 1)] = std::max(lt.part(j) - m, 0);
    return hw;
}

namespace {

// Sum over a variable family of v(idx) d/dw(idx); skips nothing, the index
// sets come straight from the displayed operator sums.
struct OpBuilder {
    const TablePtr& table;
    std::vector<DerTerm> terms = {};

    void add(int mult, int diff, Rational c = 1) { terms.push_back({std::move(c), mult, diff}); }
    SuperDerivation done(std::string label) const {
        return SuperDerivation(table, terms, std::move(label));
    }
};

}  // namespace

AlgebraRealization build_glpq(const TablePtr& table) {
    if (table->model() != VarTable::Model::tensor)
        throw std::invalid_argument("build_glpq: tensor table required");
    const int p = table->p(), q = table->q(), m = table->m(), n = table->n();
    std::vector<SuperDerivation> cartan;
    std::vector<SuperDerivation> raising;
    for (int i = 1; i <= p; ++i) {
        OpBuilder b{table};
        for (int j = 1; j <= m; ++j) b.add(table->x(j, i), table->x(j, i));
        for (int j = 1; j <= n; ++j) b.add(table->eta(j, i), table->eta(j, i));
        cartan.push_back(b.done("glpq E~[" + std::to_string(i) + "," + std::to_string(i) + "]"));
    }
    for (int l = 1; l <= q; ++l) {
        OpBuilder b{table};
        for (int j = 1; j <= m; ++j) b.add(table->xi(j, l), table->xi(j, l));
        for (int j = 1; j <= n; ++j) b.add(table->y(j, l), table->y(j, l));
        cartan.push_back(b.done("glpq D~[" + std::to_string(l) + "," + std::to_string(l) + "]"));
    }
    for (int i = 2; i <= p; ++i) {
        OpBuilder b{table};
        for (int j = 1; j <= m; ++j) b.add(table->x(j, i - 1), table->x(j, i));
        for (int j = 1; j <= n; ++j) b.add(table->eta(j, i - 1), table->eta(j, i));
        raising.push_back(b.done("glpq e[" + std::to_string(i - 1) + "," + std::to_string(i) + "]"));
    }
    for (int l = 2; l <= q; ++l) {
        OpBuilder b{table};
        for (int j = 1; j <= m; ++j) b.add(table->xi(j, l - 1), table->xi(j, l));
        for (int j = 1; j <= n; ++j) b.add(table->y(j, l - 1), table->y(j, l));
        raising.push_back(b.done("glpq f[" + std::to_string(l - 1) + "," + std::to_string(l) + "]"));
    }
    if (p >= 1 && q >= 1) {
        OpBuilder b{table};
        for (int j = 1; j <= m; ++j) b.add(table->x(j, p), table->xi(j, 1));
        for (int j = 1; j <= n; ++j) b.add(table->eta(j, p), table->y(j, 1));
        raising.push_back(b.done("glpq odd"));
    }
    return AlgebraRealization("gl(" + std::to_string(p) + "|" + std::to_string(q) + ")", table,
                              std::move(cartan), std::move(raising));
}

AlgebraRealization build_glmn(const TablePtr& table) {
    if (table->model() != VarTable::Model::tensor)
        throw std::invalid_argument("build_glmn: tensor table required");
    const int p = table->p(), q = table->q(), m = table->m(), n = table->n();
    std::vector<SuperDerivation> cartan;
    std::vector<SuperDerivation> raising;
    for (int s = 1; s <= m; ++s) {
        OpBuilder b{table};
        for (int j = 1; j <= p; ++j) b.add(table->x(s, j), table->x(s, j));
        for (int j = 1; j <= q; ++j) b.add(table->xi(s, j), table->xi(s, j));
        cartan.push_back(b.done("glmn E[" + std::to_string(s) + "," + std::to_string(s) + "]"));
    }
    for (int k = 1; k <= n; ++k) {
        OpBuilder b{table};
        for (int j = 1; j <= p; ++j) b.add(table->eta(k, j), table->eta(k, j));
        for (int j = 1; j <= q; ++j) b.add(table->y(k, j), table->y(k, j));
        cartan.push_back(b.done("glmn D[" + std::to_string(k) + "," + std::to_string(k) + "]"));
    }
    for (int s = 2; s <= m; ++s) {
        OpBuilder b{table};
        for (int j = 1; j <= p; ++j) b.add(table->x(s - 1, j), table->x(s, j));
        for (int j = 1; j <= q; ++j) b.add(table->xi(s - 1, j), table->xi(s, j));
        raising.push_back(b.done("glmn e[" + std::to_string(s - 1) + "," + std::to_string(s) + "]"));
    }
    for (int k = 2; k <= n; ++k) {
        OpBuilder b{table};
        for (int j = 1; j <= p; ++j) b.add(table->eta(k - 1, j), table->eta(k, j));
        for (int j = 1; j <= q; ++j) b.add(table->y(k - 1, j), table->y(k, j));
        raising.push_back(b.done("glmn f[" + std::to_string(k - 1) + "," + std::to_string(k) + "]"));
    }
    if (m >= 1 && n >= 1) {
        OpBuilder b{table};
        for (int j = 1; j <= p; ++j) b.add(table->x(m, j), table->eta(1, j));
        for (int j = 1; j <= q; ++j) b.add(table->xi(m, j), table->y(1, j), -1);
        raising.push_back(b.done("glmn odd"));
    }
    return AlgebraRealization("gl(" + std::to_string(m) + "|" + std::to_string(n) + ")", table,
                              std::move(cartan), std::move(raising));
}

namespace {

// Base vector of C^{m|n} in the S^2 model: x_i (even) or xi_k (odd).
struct BaseVar {
    bool odd;
    int idx;
};

// Quadratic coordinate as a signed multiple of a table variable.
struct QuadImage {
    int var = -1;  // -1 encodes 0 (xi_k xi_k)
    int sign = 1;
};

QuadImage quad_product(const TablePtr& t, BaseVar a, BaseVar b) {
    if (!a.odd && !b.odd) return {t->s2x(a.idx, b.idx), 1};
    if (a.odd && b.odd) {
        auto [id, sign] = t->s2y(a.idx, b.idx);
        return {id, sign};
    }
    // even and odd factors commute; store as eta_{k,i}
    const int k = a.odd ? a.idx : b.idx;
    const int i = a.odd ? b.idx : a.idx;
    return {t->s2eta(k, i), 1};
}

// Induce the abstract operator v d/dw on C^{m|n} to a derivation in the
// quadratic coordinates by differentiating each defining product.
SuperDerivation induce_s2(const TablePtr& t, BaseVar v, BaseVar w, std::string label) {
    const bool op_odd = v.odd != w.odd;
    std::vector<DerTerm> terms;
    auto emit = [&](int g, BaseVar a, BaseVar b) {
        // D(ab) = D(a) b + (-1)^{|D||a|} a D(b), with D(u) = [u == w] v
        auto same = [&](BaseVar u) { return u.odd == w.odd && u.idx == w.idx; };
        std::map<int, Rational> acc;
        if (same(a)) {
            const QuadImage im = quad_product(t, v, b);
            if (im.var >= 0) acc[im.var] += im.sign;
        }
        if (same(b)) {
            const QuadImage im = quad_product(t, a, v);
            int s = im.sign;
            if (op_odd && a.odd) s = -s;
            if (im.var >= 0) acc[im.var] += s;
        }
        for (const auto& [var, c] : acc)
            if (c != 0) terms.push_back({c, var, g});
    };
    const int m = t->m(), n = t->n();
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j)
            emit(t->s2x(i, j), BaseVar{false, i}, BaseVar{false, j});
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= m; ++i)
            emit(t->s2eta(k, i), BaseVar{true, k}, BaseVar{false, i});
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
            emit(t->s2y(k, l).first, BaseVar{true, k}, BaseVar{true, l});
    return SuperDerivation(t, std::move(terms), std::move(label));
}

}  // namespace

AlgebraRealization build_s2_glmn(const TablePtr& table) {
    if (table->model() != VarTable::Model::s2)
        throw std::invalid_argument("build_s2_glmn: s2 table required");
    const int m = table->m(), n = table->n();
    std::vector<SuperDerivation> cartan;
    std::vector<SuperDerivation> raising;
    for (int i = 1; i <= m; ++i)
        cartan.push_back(induce_s2(table, {false, i}, {false, i}, "s2 E[" + std::to_string(i) + "]"));
    for (int k = 1; k <= n; ++k)
        cartan.push_back(induce_s2(table, {true, k}, {true, k}, "s2 D[" + std::to_string(k) + "]"));
    for (int i = 1; i + 1 <= m; ++i)
        raising.push_back(induce_s2(table, {false, i}, {false, i + 1},
                                    "s2 e[" + std::to_string(i) + "," + std::to_string(i + 1) + "]"));
    for (int j = 1; j + 1 <= n; ++j)
        raising.push_back(induce_s2(table, {true, j}, {true, j + 1},
                                    "s2 f[" + std::to_string(j) + "," + std::to_string(j + 1) + "]"));
    if (m >= 1 && n >= 1) raising.push_back(induce_s2(table, {false, m}, {true, 1}, "s2 odd"));
    return AlgebraRealization("gl(" + std::to_string(m) + "|" + std::to_string(n) + ") on S^2",
                              table, std::move(cartan), std::move(raising));
}

WeightVector weight_of(const SuperPolynomial& f, const AlgebraRealization& R) {
    if (f.is_zero()) throw std::invalid_argument("weight_of: zero polynomial");
    WeightVector w;
    for (const SuperDerivation& h : R.cartan()) {
        const SuperPolynomial hf = h.apply(f);
        Rational c = 0;
        if (!hf.is_zero()) {
            const Monomial& lead = f.terms().begin()->first;
            c = hf.coefficient(lead) / f.terms().begin()->second;
        }
        if (!(hf == f * c))
            throw NotAWeightVectorError("not an eigenvector of " + h.label());
        if (!is_integer(c))
            throw NotAWeightVectorError("non-integer eigenvalue under " + h.label());
        w.entries.push_back(static_cast<int>(c.get_num().get_si()));
    }
    return w;
}

bool is_highest(const SuperPolynomial& f, const std::vector<AlgebraRealization>& realizations) {
    if (f.is_zero()) return false;
    for (const AlgebraRealization& R : realizations)
        for (const SuperDerivation& e : R.simple_raising())
            if (!e.apply(f).is_zero()) return false;
    return true;
}

}  // namespace howe
