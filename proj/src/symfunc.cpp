#include "superhowe/symfunc.hpp"

#include <sstream>

#include "superhowe/errors.hpp"

namespace howe {

MultiSeries::MultiSeries(TablePtr table, int truncation_degree)
    : poly_(std::move(table)), cap_(truncation_degree) {}

MultiSeries MultiSeries::one(TablePtr table, int truncation_degree) {
    MultiSeries s(table, truncation_degree);
    s.poly_ = SuperPolynomial::constant(s.poly_.table(), 1);
    return s;
}

SuperPolynomial truncate(const SuperPolynomial& f, int cap) {
    SuperPolynomial r(f.table());
    for (const auto& [mono, c] : f.terms())
        if (mono.degree() <= cap) r.add_term(mono, c);
    return r;
}

MultiSeries& MultiSeries::operator+=(const SuperPolynomial& f) {
    poly_ += truncate(f, cap_);
    return *this;
}

MultiSeries& MultiSeries::operator*=(const SuperPolynomial& f) {
    poly_ = truncate(poly_ * truncate(f, cap_), cap_);
    return *this;
}

MultiSeries& MultiSeries::mul_geometric_inverse(const Monomial& mono, int sign) {
    const int d = mono.degree();
    if (d == 0) throw std::invalid_argument("mul_geometric_inverse: constant monomial");
    SuperPolynomial series = SuperPolynomial::constant(poly_.table(), 1);
    Monomial power;
    int s = 1;
    for (int k = 1; k * d <= cap_; ++k) {
        auto [sg, next] = mono_mul(power, mono);
        power = std::move(next);
        s *= -sign;
        series.add_term(power, s);
    }
    *this *= series;
    return *this;
}

SuperPolynomial MultiSeries::slice(int degree) const {
    SuperPolynomial r(poly_.table());
    for (const auto& [mono, c] : poly_.terms())
        if (mono.degree() == degree) r.add_term(mono, c);
    return r;
}

SuperPolynomial complete_homog(const TablePtr& table, const std::vector<int>& vars, int k) {
    SuperPolynomial r(table);
    if (k < 0) return r;
    // weakly increasing choices of k variables
    std::vector<std::pair<int, int>> acc;
    auto rec = [&](auto&& self, std::size_t idx, int remaining) -> void {
        if (remaining == 0) {
            Monomial m;
            m.even = acc;
            r.add_term(m, 1);
            return;
        }
        if (idx >= vars.size()) return;
        for (int take = remaining; take >= 1; --take) {
            acc.emplace_back(vars[idx], take);
            self(self, idx + 1, remaining - take);
            acc.pop_back();
        }
        self(self, idx + 1, remaining);
    };
    rec(rec, 0, k);
    return r;
}

SuperPolynomial schur(const TablePtr& table, const Partition& lambda, const std::vector<int>& vars) {
    return skew_schur(table, lambda, Partition{}, vars);
}

SuperPolynomial skew_schur(const TablePtr& table, const Partition& lambda, const Partition& mu,
                           const std::vector<int>& vars) {
    if (!lambda.contains(mu)) throw NotContainedError("skew_schur: mu not contained in lambda");
    const int l = lambda.length();
    if (l == 0) return SuperPolynomial::constant(table, 1);
    // Jacobi-Trudi: det(h_{lambda_i - mu_j - i + j})
    SuperMatrix M(table, l);
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            M.at(i, j) = complete_homog(table, vars, lambda.part(i) - mu.part(j) - i + j);
    return superdet(M);
}

SuperPolynomial hook_schur(const TablePtr& table, const Partition& lambda,
                           const std::vector<int>& xs, const std::vector<int>& ys) {
    SuperPolynomial r(table);
    const Partition lt = lambda.transpose();
    for (const Partition& mu : subpartitions(lambda, static_cast<int>(xs.size()))) {
        const SuperPolynomial sy = skew_schur(table, lt, mu.transpose(), ys);
        if (sy.is_zero()) continue;
        r += schur(table, mu, xs) * sy;
    }
    return r;
}

std::string IdentityReport::to_text() const {
    std::ostringstream out;
    out << identity << " [";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) out << ", ";
        out << k << "=" << v;
        first = false;
    }
    out << "] degree<=" << max_degree << ": " << (pass ? "pass" : "FAIL");
    if (!pass) out << " (first mismatch " << first_mismatch << ")";
    return out.str();
}

namespace {

std::vector<int> family_ids(const TablePtr& t, char fam) {
    std::vector<int> ids;
    for (int i = 1; i <= t->family_size(fam); ++i) ids.push_back(t->cvar(fam, i));
    return ids;
}

Monomial pair_mono(int a, int b) {
    Monomial m;
    if (a == b)
        m.even.emplace_back(a, 2);
    else if (a < b) {
        m.even.emplace_back(a, 1);
        m.even.emplace_back(b, 1);
    } else {
        m.even.emplace_back(b, 1);
        m.even.emplace_back(a, 1);
    }
    return m;
}

IdentityReport compare(const std::string& name, std::map<std::string, int> params, int maxdeg,
                       const SuperPolynomial& lhs, const SuperPolynomial& rhs) {
    IdentityReport rep{name, std::move(params), maxdeg, true, {}};
    const SuperPolynomial diff = lhs - rhs;
    if (!diff.is_zero()) {
        rep.pass = false;
        const Monomial& mono = diff.terms().begin()->first;
        std::ostringstream out;
        out << to_string(SuperPolynomial::term(lhs.table(), mono, 1)) << ": lhs "
            << lhs.coefficient(mono).get_str() << " vs rhs " << rhs.coefficient(mono).get_str();
        rep.first_mismatch = out.str();
    }
    return rep;
}

}  // namespace

IdentityReport verify_super_cauchy(int p, int q, int m, int n, int maxdeg) {
    const TablePtr t = VarTable::chars({{'x', p}, {'y', q}, {'u', m}, {'v', n}});
    const auto xs = family_ids(t, 'x'), ys = family_ids(t, 'y');
    const auto us = family_ids(t, 'u'), vs = family_ids(t, 'v');
    // every factor pairs one (x,y)-variable with one (u,v)-variable, so a cap
    // of 2*maxdeg keeps exactly the bidegree-(d,d) slices with d <= maxdeg
    MultiSeries rhs = MultiSeries::one(t, 2 * maxdeg);
    for (int xi : xs)
        for (int uk : us) rhs.mul_geometric_inverse(pair_mono(xi, uk), -1);
    for (int yj : ys)
        for (int vl : vs) rhs.mul_geometric_inverse(pair_mono(yj, vl), -1);
    SuperPolynomial plus = SuperPolynomial::constant(t, 1);
    for (int xi : xs)
        for (int vl : vs) plus *= SuperPolynomial::constant(t, 1) +
                                  SuperPolynomial::term(t, pair_mono(xi, vl), 1);
    for (int yj : ys)
        for (int uk : us) plus *= SuperPolynomial::constant(t, 1) +
                                  SuperPolynomial::term(t, pair_mono(yj, uk), 1);
    rhs *= plus;

    SuperPolynomial lhs(t);
    for (int k = 0; k <= maxdeg; ++k)
        for (const Partition& lam : hook_partitions(k, p, q, m, n))
            lhs += hook_schur(t, lam, xs, ys) * hook_schur(t, lam, us, vs);

    return compare("super-cauchy", {{"p", p}, {"q", q}, {"m", m}, {"n", n}}, maxdeg, lhs,
                   rhs.poly());
}

IdentityReport verify_super_dual_cauchy(int p, int q, int m, int n, int maxdeg) {
    const TablePtr t = VarTable::chars({{'x', p}, {'y', q}, {'u', m}, {'v', n}});
    const auto xs = family_ids(t, 'x'), ys = family_ids(t, 'y');
    const auto us = family_ids(t, 'u'), vs = family_ids(t, 'v');
    MultiSeries rhs = MultiSeries::one(t, 2 * maxdeg);
    for (int xi : xs)
        for (int vl : vs) rhs.mul_geometric_inverse(pair_mono(xi, vl), -1);
    for (int yj : ys)
        for (int uk : us) rhs.mul_geometric_inverse(pair_mono(yj, uk), -1);
    SuperPolynomial plus = SuperPolynomial::constant(t, 1);
    for (int xi : xs)
        for (int uk : us) plus *= SuperPolynomial::constant(t, 1) +
                                  SuperPolynomial::term(t, pair_mono(xi, uk), 1);
    for (int yj : ys)
        for (int vl : vs) plus *= SuperPolynomial::constant(t, 1) +
                                  SuperPolynomial::term(t, pair_mono(yj, vl), 1);
    rhs *= plus;

    SuperPolynomial lhs(t);
    for (int k = 0; k <= maxdeg; ++k)
        for (const Partition& lam : partitions_of(k)) {
            if (!lam.in_hook(p, q)) continue;
            const Partition lt = lam.transpose();
            if (!lt.in_hook(m, n)) continue;
            lhs += hook_schur(t, lam, xs, ys) * hook_schur(t, lt, us, vs);
        }

    return compare("super-dual-cauchy", {{"p", p}, {"q", q}, {"m", m}, {"n", n}}, maxdeg, lhs,
                   rhs.poly());
}

std::vector<IdentityReport> verify_s2_characters(int m, int n, int maxdeg) {
    const TablePtr t = VarTable::chars({{'x', m}, {'y', n}});
    const auto xs = family_ids(t, 'x'), ys = family_ids(t, 'y');
    std::vector<IdentityReport> reports;

    {  // even-row partitions vs the S(S^2) product side
        MultiSeries rhs = MultiSeries::one(t, maxdeg);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i; j < xs.size(); ++j)
                rhs.mul_geometric_inverse(pair_mono(xs[i], xs[j]), -1);
        for (std::size_t i = 0; i < ys.size(); ++i)
            for (std::size_t j = i + 1; j < ys.size(); ++j)
                rhs.mul_geometric_inverse(pair_mono(ys[i], ys[j]), -1);
        SuperPolynomial plus = SuperPolynomial::constant(t, 1);
        for (int xi : xs)
            for (int yj : ys) plus *= SuperPolynomial::constant(t, 1) +
                                      SuperPolynomial::term(t, pair_mono(xi, yj), 1);
        rhs *= plus;
        SuperPolynomial lhs(t);
        for (int k = 0; k <= maxdeg; ++k)
            for (const Partition& lam : even_partitions(k, m, n)) lhs += hook_schur(t, lam, xs, ys);
        reports.push_back(
            compare("s2-even-rows", {{"m", m}, {"n", n}}, maxdeg, lhs, rhs.poly()));
    }

    {  // nested (k+1,k)-hooks vs the Lambda(S^2) product side
        MultiSeries rhs = MultiSeries::one(t, maxdeg);
        SuperPolynomial plus = SuperPolynomial::constant(t, 1);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i; j < xs.size(); ++j)
                plus *= SuperPolynomial::constant(t, 1) +
                        SuperPolynomial::term(t, pair_mono(xs[i], xs[j]), 1);
        for (std::size_t i = 0; i < ys.size(); ++i)
            for (std::size_t j = i + 1; j < ys.size(); ++j)
                plus *= SuperPolynomial::constant(t, 1) +
                        SuperPolynomial::term(t, pair_mono(ys[i], ys[j]), 1);
        rhs *= plus;
        for (int xi : xs)
            for (int yj : ys) rhs.mul_geometric_inverse(pair_mono(xi, yj), -1);
        SuperPolynomial lhs(t);
        for (int k = 0; k <= maxdeg; ++k)
            for (const Partition& lam : nested_hook_partitions(k, m, n, HookFlavor::arm_long))
                lhs += hook_schur(t, lam, xs, ys);
        reports.push_back(
            compare("s2-nested-hooks", {{"m", m}, {"n", n}}, maxdeg, lhs, rhs.poly()));
    }
    return reports;
}

std::vector<IdentityReport> verify_classical_quartet(int m, int maxdeg) {
    const TablePtr t = VarTable::chars({{'x', m}});
    const auto xs = family_ids(t, 'x');
    std::vector<IdentityReport> reports;

    {  // sum over l(lambda)<=m of s_{2 lambda}
        MultiSeries rhs = MultiSeries::one(t, maxdeg);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i; j < xs.size(); ++j)
                rhs.mul_geometric_inverse(pair_mono(xs[i], xs[j]), -1);
        SuperPolynomial lhs(t);
        for (int k = 0; 2 * k <= maxdeg; ++k)
            for (const Partition& lam : partitions_of(k)) {
                if (lam.length() > m) continue;
                std::vector<int> doubled;
                for (int r : lam.parts()) doubled.push_back(2 * r);
                lhs += schur(t, Partition(doubled), xs);
            }
        reports.push_back(compare("sym-sym", {{"m", m}}, maxdeg, lhs, rhs.poly()));
    }

    {  // sum over width(mu)<=m/2 of s_{(2 mu)'}
        MultiSeries rhs = MultiSeries::one(t, maxdeg);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                rhs.mul_geometric_inverse(pair_mono(xs[i], xs[j]), -1);
        SuperPolynomial lhs(t);
        for (int k = 0; 2 * k <= maxdeg; ++k)
            for (const Partition& mu : partitions_of(k)) {
                if (mu.width() > m / 2) continue;
                std::vector<int> doubled;
                for (int r : mu.parts()) doubled.push_back(2 * r);
                lhs += schur(t, Partition(doubled).transpose(), xs);
            }
        reports.push_back(compare("sym-skew", {{"m", m}}, maxdeg, lhs, rhs.poly()));
    }

    {  // nested (k+1,k)-hooks with k<=m
        SuperPolynomial rhs = SuperPolynomial::constant(t, 1);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i; j < xs.size(); ++j)
                rhs *= SuperPolynomial::constant(t, 1) +
                       SuperPolynomial::term(t, pair_mono(xs[i], xs[j]), 1);
        SuperPolynomial lhs(t);
        for (int k = 0; k <= maxdeg; ++k)
            for (const Partition& lam : partitions_of(k))
                if (is_nested_hook(lam, HookFlavor::arm_long) && lam.length() <= m)
                    lhs += schur(t, lam, xs);
        reports.push_back(
            compare("skew-sym", {{"m", m}}, maxdeg, truncate(lhs, maxdeg), truncate(rhs, maxdeg)));
    }

    {  // nested (k,k+1)-hooks with k<=m-1
        SuperPolynomial rhs = SuperPolynomial::constant(t, 1);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
                rhs *= SuperPolynomial::constant(t, 1) +
                       SuperPolynomial::term(t, pair_mono(xs[i], xs[j]), 1);
        SuperPolynomial lhs(t);
        for (int k = 0; k <= maxdeg; ++k)
            for (const Partition& lam : partitions_of(k))
                if (is_nested_hook(lam, HookFlavor::leg_long) && lam.length() <= m)
                    lhs += schur(t, lam, xs);
        reports.push_back(
            compare("skew-skew", {{"m", m}}, maxdeg, truncate(lhs, maxdeg), truncate(rhs, maxdeg)));
    }
    return reports;
}

}  // namespace howe
