#include "superhowe/hwv.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "superhowe/diagrams.hpp"
#include "superhowe/errors.hpp"

namespace howe {

namespace {

void require_tensor(const TablePtr& t, const char* who) {
    if (t->model() != VarTable::Model::tensor)
        throw std::invalid_argument(std::string(who) + ": tensor table required");
}

void require_s2(const TablePtr& t, const char* who) {
    if (t->model() != VarTable::Model::s2)
        throw std::invalid_argument(std::string(who) + ": s2 table required");
}

}  // namespace

SuperPolynomial delta_r(const TablePtr& table, int r) {
    require_tensor(table, "delta_r");
    if (r < 0 || r > std::min(table->m(), table->p()))
        throw std::out_of_range("delta_r: need 0 <= r <= min(m,p)");
    SuperMatrix M(table, r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) M.set(i, j, table->x(j, i));
    return superdet(M);
}

SuperPolynomial delta_kr(const TablePtr& table, int k, int r) {
    require_tensor(table, "delta_kr");
    const int m = table->m();
    if (r < m || r > table->p()) throw std::out_of_range("delta_kr: need m <= r <= p");
    if (k < 1 || k > table->n()) throw std::out_of_range("delta_kr: need 1 <= k <= n");
    SuperMatrix M(table, r);
    for (int j = 1; j <= m; ++j)
        for (int c = 1; c <= r; ++c) M.set(j, c, table->x(j, c));
    for (int j = m + 1; j <= r; ++j)
        for (int c = 1; c <= r; ++c) M.set(j, c, table->eta(k, c));
    return superdet(M);
}

SuperPolynomial det_x_sub(const TablePtr& table, const std::vector<int>& rows, int j) {
    require_tensor(table, "det_x_sub");
    const int p = table->p();
    SuperMatrix M(table, p);
    for (int l = 1; l <= p; ++l) {
        const bool replaced = std::find(rows.begin(), rows.end(), l) != rows.end();
        for (int i = 1; i <= p; ++i) M.set(l, i, replaced ? table->eta(j, i) : table->x(l, i));
    }
    return superdet(M);
}

SuperPolynomial hwv_q_zero(const TablePtr& table, const Partition& lambda) {
    require_tensor(table, "hwv_q_zero");
    if (table->q() != 0) throw std::invalid_argument("hwv_q_zero: table must have q = 0");
    const int p = table->p(), m = table->m(), n = table->n();
    if (lambda.length() > p)
        throw HookViolationError("hwv_q_zero: l(lambda) > p for lambda=" + lambda.to_string());
    if (lambda.part(m + 1) > n)
        throw HookViolationError("hwv_q_zero: lambda_{m+1} > n for lambda=" + lambda.to_string());
    const Partition lt = lambda.transpose();
    const int r = lambda.part(m + 1);  // columns taller than m
    SuperPolynomial v = SuperPolynomial::constant(table, 1);
    for (int k = 1; k <= r; ++k) v *= delta_kr(table, k, lt.part(k));
    for (int j = r + 1; j <= lt.length(); ++j) v *= delta_r(table, lt.part(j));
    return v;
}

namespace {

// det Y_D for one marked diagram over y columns 1..w, xi rows by marks
SuperPolynomial det_y_marked(const TablePtr& table, const MarkedDiagram& d) {
    const int w = d.cols;
    SuperMatrix M(table, w);
    for (int a = 1; a <= w; ++a) {
        const int marked_row = d.mark[static_cast<std::size_t>(a - 1)];
        for (int b = 1; b <= w; ++b)
            M.set(a, b, marked_row > 0 ? table->xi(marked_row, b) : table->y(a, b));
    }
    return superdet(M);
}

Rational half_choose_sign(int marks) {
    return (marks * (marks - 1) / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace

SuperPolynomial gamma_r_pm(const TablePtr& table, int r) {
    require_tensor(table, "gamma_r_pm");
    const int m = table->m();
    if (table->p() != m) throw std::invalid_argument("gamma_r_pm: requires p = m");
    if (r < 0 || r > std::min(table->q(), table->n()))
        throw std::out_of_range("gamma_r_pm: need r <= min(q,n)");
    SuperPolynomial sum(table);
    for (const MarkedDiagram& d : marked_diagrams(m, r)) {
        SuperPolynomial term = SuperPolynomial::constant(table, 1);
        for (int c = 1; c <= r; ++c) {
            const int row = d.mark[static_cast<std::size_t>(c - 1)];
            term *= det_x_sub(table, row > 0 ? std::vector<int>{row} : std::vector<int>{}, c);
        }
        term *= det_y_marked(table, d);
        sum += term * half_choose_sign(d.count());
    }
    return sum;
}

SuperPolynomial hwv_p_equals_m(const TablePtr& table, const Partition& lambda) {
    require_tensor(table, "hwv_p_equals_m");
    const int m = table->m();
    if (table->p() != m) throw std::invalid_argument("hwv_p_equals_m: requires p = m");
    if (lambda.part(m + 1) > std::min(table->q(), table->n()))
        throw HookViolationError("hwv_p_equals_m: lambda_{m+1} > min(q,n) for lambda=" +
                                 lambda.to_string());
    const Partition lt = lambda.transpose();
    const int r = lambda.part(m + 1);
    SuperPolynomial v = SuperPolynomial::constant(table, 1);
    if (lambda.length() > m) {
        const int s = lambda.length() - m;
        int divisor_power = 0;
        for (int i = 1; i <= s; ++i) {
            v *= gamma_r_pm(table, lambda.part(m + i));
            if (i >= 2) divisor_power += lambda.part(m + i);
        }
        if (divisor_power > 0) {
            SuperPolynomial den = SuperPolynomial::constant(table, 1);
            const SuperPolynomial dm = delta_r(table, m);
            for (int i = 0; i < divisor_power; ++i) den *= dm;
            v = divide_exact(v, den);
        }
    }
    for (int j = r + 1; j <= lt.length(); ++j) v *= delta_r(table, lt.part(j));
    return v;
}

SuperPolynomial gamma_general(const TablePtr& table, const std::vector<int>& widths) {
    require_tensor(table, "gamma_general");
    const int p = table->p(), q = table->q(), m = table->m(), n = table->n();
    if (p < m) throw std::invalid_argument("gamma_general: requires p >= m");
    if (widths.empty()) return SuperPolynomial::constant(table, 1);
    const int w1 = widths.front();
    if (w1 > std::min(q, n)) throw HookViolationError("gamma_general: width exceeds min(q,n)");

    const TablePtr aux = VarTable::tensor(p, q, m, n, /*with_aux=*/true);
    std::vector<int> aux_rows;
    for (int l = m + 1; l <= p; ++l) aux_rows.push_back(l);

    SuperPolynomial z = SuperPolynomial::constant(aux, 1);
    for (int j = 1; j <= w1; ++j) z *= det_x_sub(aux, aux_rows, j);

    // det X_j(I_j) depends only on (j, I_j); cache across families
    std::map<std::pair<int, std::vector<int>>, SuperPolynomial> xcache;
    auto det_col = [&](int j, const std::vector<int>& marked) -> const SuperPolynomial& {
        auto key = std::make_pair(j, marked);
        auto it = xcache.find(key);
        if (it == xcache.end()) it = xcache.emplace(key, det_x_sub(aux, marked, j)).first;
        return it->second;
    };

    SuperPolynomial sum(aux);
    for (const MarkedFamily& fam : marked_families(widths, m)) {
        const std::vector<int> e = fam.marks_per_column();
        Rational coef = half_choose_sign(fam.total_marks()) * fam.sign_eps();
        for (int ej : e) coef /= factorial(ej);

        SuperPolynomial term = z;
        for (int j = 1; j <= w1; ++j) {
            std::vector<int> marked;
            for (const MarkedDiagram& d : fam.diagrams)
                if (j <= d.cols && d.mark[static_cast<std::size_t>(j - 1)] > 0)
                    marked.push_back(d.mark[static_cast<std::size_t>(j - 1)]);
            std::sort(marked.begin(), marked.end());
            term *= det_col(j, marked);
        }
        for (const MarkedDiagram& d : fam.diagrams) term *= det_y_marked(aux, d);
        sum += term * coef;
    }

    SuperMatrix X(aux, p);
    for (int l = 1; l <= p; ++l)
        for (int i = 1; i <= p; ++i) X.set(l, i, aux->x(l, i));
    SuperPolynomial den = SuperPolynomial::constant(aux, 1);
    const SuperPolynomial detx = superdet(X);
    for (int i = 0; i < w1; ++i) den *= detx;
    SuperPolynomial purified = divide_exact(sum, den);

    for (int l = m + 1; l <= p; ++l)
        for (int i = 1; i <= p; ++i)
            if (purified.uses_variable(aux->x(l, i)))
                throw AuxiliaryResidueError("gamma_general: auxiliary variable survives division");
    return transfer_by_name(purified, table);
}

namespace {

// hat-model variables map as x_l^i -> x_i^l, xi_l^j -> eta_j^l,
// eta_k^i -> xi_i^k, y_k^j -> -y_j^k;
// intertwines the two Borel actions when the (p,q) and (m,n) roles swap.
SuperPolynomial swap_roles(const SuperPolynomial& f, const TablePtr& target) {
    const VarTable& src = *f.table();
    std::vector<std::pair<int, int>> var_map(static_cast<std::size_t>(src.count()), {-1, 1});
    for (int id = 0; id < src.count(); ++id) {
        const Var& v = src.var(id);
        switch (v.family) {
            case 'x': var_map[static_cast<std::size_t>(id)] = {target->x(v.sup, v.sub), 1}; break;
            case 's': var_map[static_cast<std::size_t>(id)] = {target->eta(v.sup, v.sub), 1}; break;
            case 'h': var_map[static_cast<std::size_t>(id)] = {target->xi(v.sup, v.sub), 1}; break;
            case 'y': var_map[static_cast<std::size_t>(id)] = {target->y(v.sup, v.sub), -1}; break;
            default: throw std::logic_error("swap_roles: unexpected family");
        }
    }
    return transfer(f, target, var_map);
}

}  // namespace

SuperPolynomial hwv_general(const TablePtr& table, const Partition& lambda) {
    require_tensor(table, "hwv_general");
    const int p = table->p(), q = table->q(), m = table->m(), n = table->n();
    if (lambda.part(m + 1) > n)
        throw HookViolationError("hwv_general: lambda_{m+1} > n for lambda=" + lambda.to_string());
    if (lambda.part(p + 1) > q)
        throw HookViolationError("hwv_general: lambda_{p+1} > q for lambda=" + lambda.to_string());
    if (p < m) {
        const TablePtr swapped = VarTable::tensor(m, n, p, q);
        return swap_roles(hwv_general(swapped, lambda), table);
    }
    const Partition lt = lambda.transpose();
    const int t = lt.length();
    SuperPolynomial v = SuperPolynomial::constant(table, 1);
    if (lambda.part(p + 1) > 0) {
        const int r = lambda.part(p + 1);
        const int rp = lambda.part(m + 1);
        std::vector<int> widths;
        for (int i = p + 1; i <= lambda.length(); ++i) widths.push_back(lambda.part(i));
        v = gamma_general(table, widths);
        for (int i = r + 1; i <= rp; ++i) v *= delta_kr(table, i, lt.part(i));
        for (int i = rp + 1; i <= t; ++i) v *= delta_r(table, lt.part(i));
    } else if (lambda.part(m + 1) > 0) {
        const int r = lambda.part(m + 1);
        for (int i = 1; i <= r; ++i) v *= delta_kr(table, i, lt.part(i));
        for (int i = r + 1; i <= t; ++i) v *= delta_r(table, lt.part(i));
    } else {
        for (int i = 1; i <= t; ++i) v *= delta_r(table, lt.part(i));
    }
    return v;
}

bool verify_keylemma(int p) {
    // generic p x p even matrix with one odd vector family
    const TablePtr t = VarTable::tensor(p, 0, p, 1);
    SuperPolynomial lhs = SuperPolynomial::constant(t, factorial(p));
    for (int i = 1; i <= p; ++i) lhs *= det_x_sub(t, {i}, 1);
    std::vector<int> all;
    for (int i = 1; i <= p; ++i) all.push_back(i);
    SuperPolynomial rhs = det_x_sub(t, {}, 1);
    const SuperPolynomial detx = rhs;
    for (int i = 2; i <= p - 1; ++i) rhs *= detx;
    if (p == 1) rhs = SuperPolynomial::constant(t, 1);
    rhs *= det_x_sub(t, all, 1);
    return lhs == rhs;
}

bool verify_maincor(int p, const std::vector<int>& I, const std::vector<int>& J) {
    const TablePtr t = VarTable::tensor(p, 0, p, 1);
    const SuperPolynomial detx = det_x_sub(t, {}, 1);
    const SuperPolynomial dI = det_x_sub(t, I, 1);
    const SuperPolynomial dJ = det_x_sub(t, J, 1);
    std::vector<int> inter;
    std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(inter));

    // (i) the product vanishes exactly when the row sets meet
    const SuperPolynomial prod = dI * dJ;
    if (prod.is_zero() != !inter.empty()) return false;

    // (ii) |I|! det X prod_i det X_1(i) = det X^{|I|} det X_1(I)
    {
        SuperPolynomial lhs = SuperPolynomial::constant(t, factorial(static_cast<int>(I.size())));
        lhs *= detx;
        for (int i : I) lhs *= det_x_sub(t, {i}, 1);
        SuperPolynomial rhs = dI;
        for (std::size_t k = 0; k < I.size(); ++k) rhs *= detx;
        if (!(lhs == rhs)) return false;
    }

    // (iii) merge formula with the shuffle sign, cleared of denominators
    if (inter.empty()) {
        std::vector<int> un = I;
        un.insert(un.end(), J.begin(), J.end());
        int inversions = 0;
        for (std::size_t a = 0; a < un.size(); ++a)
            for (std::size_t b = a + 1; b < un.size(); ++b)
                if (un[a] > un[b]) ++inversions;
        const int eps = inversions % 2 == 0 ? 1 : -1;
        std::sort(un.begin(), un.end());
        SuperPolynomial lhs = prod * factorial(static_cast<int>(un.size()));
        SuperPolynomial rhs = detx * det_x_sub(t, un, 1) *
                              (factorial(static_cast<int>(I.size())) *
                               factorial(static_cast<int>(J.size())) * eps);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

bool verify_identity_cor(int p, int q, int m) {
    if (!(p >= q && q > m)) throw std::invalid_argument("verify_identity_cor: need p >= q > m");
    const TablePtr t = VarTable::tensor(p, 0, m, 2);
    SuperMatrix A(t, p);
    for (int l = 1; l <= m; ++l)
        for (int i = 1; i <= p; ++i) A.set(l, i, t->x(l, i));
    for (int l = m + 1; l <= p; ++l)
        for (int i = 1; i <= p; ++i) A.set(l, i, t->eta(1, i));
    SuperMatrix B(t, q);
    for (int l = 1; l <= m; ++l)
        for (int i = 1; i <= q; ++i) B.set(l, i, t->x(l, i));
    for (int i = 1; i <= q; ++i) B.set(m + 1, i, t->eta(1, i));
    for (int l = m + 2; l <= q; ++l)
        for (int i = 1; i <= q; ++i) B.set(l, i, t->eta(2, i));
    return (superdet(A) * superdet(B)).is_zero();
}

// ---- S^2 model ---------------------------------------------------------------

SuperPolynomial s2_delta_r(const TablePtr& table, int r) {
    require_s2(table, "s2_delta_r");
    if (r < 0 || r > table->m()) throw std::out_of_range("s2_delta_r: need 0 <= r <= m");
    SuperMatrix M(table, r);
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j) M.set(i, j, table->s2x(i, j));
    return superdet(M);
}

namespace {

// det of X with row a replaced by (eta_{k1}, ..., eta_{km})
SuperPolynomial s2_det_x_row(const TablePtr& table, int a, int k) {
    const int m = table->m();
    SuperMatrix M(table, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) M.set(i, j, i == a ? table->s2eta(k, j) : table->s2x(i, j));
    return superdet(M);
}

SuperPolynomial s2_y_var(const TablePtr& table, int k, int l) {
    const auto [id, sign] = table->s2y(k, l);
    if (id < 0) return SuperPolynomial::zero(table);
    SuperPolynomial v = SuperPolynomial::variable(table, id);
    return sign < 0 ? -v : v;
}

}  // namespace

SuperPolynomial delta_xi(const TablePtr& table, int i, int j) {
    require_s2(table, "delta_xi");
    const int m = table->m(), n = table->n();
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("delta_xi: need 1 <= i,j <= n");
    SuperPolynomial v = -(s2_delta_r(table, m) * s2_y_var(table, i, j));
    for (int a = 1; a <= m; ++a)
        v += s2_det_x_row(table, a, i) * SuperPolynomial::variable(table, table->s2eta(j, a));
    return v;
}

SuperPolynomial gamma_2l(const TablePtr& table, int l) {
    require_s2(table, "gamma_2l");
    if (2 * l > table->n()) throw std::out_of_range("gamma_2l: need 2l <= n");
    SuperPolynomial sum(table);
    for (const Pairing& sigma : pairings(2 * l)) {
        SuperPolynomial term = SuperPolynomial::constant(table, 1);
        for (const auto& [a, b] : sigma.pairs) term *= delta_xi(table, a, b);
        sum += term * Rational(sigma.sign);
    }
    return sum;
}

SuperPolynomial hwv_s2(const TablePtr& table, const Partition& lambda) {
    require_s2(table, "hwv_s2");
    const int m = table->m(), n = table->n();
    if (!lambda.all_even_rows())
        throw std::invalid_argument("hwv_s2: lambda must have even rows, got " + lambda.to_string());
    if (lambda.part(m + 1) > n)
        throw HookViolationError("hwv_s2: lambda_{m+1} > n for lambda=" + lambda.to_string());
    const Partition lt = lambda.transpose();
    const int r = lambda.part(m + 1);
    SuperPolynomial v = SuperPolynomial::constant(table, 1);
    if (lambda.length() > m) {
        int excess = 0;  // widths below row m+1; each det X power removes two
        for (int i = m + 1; i <= lambda.length(); ++i) {
            v *= gamma_2l(table, lambda.part(i) / 2);
            if (i >= m + 2) excess += lambda.part(i);
        }
        if (excess > 0) {
            SuperPolynomial den = SuperPolynomial::constant(table, 1);
            const SuperPolynomial detx = s2_delta_r(table, m);
            for (int i = 0; i < excess / 2; ++i) den *= detx;
            v = divide_exact(v, den);
        }
    }
    // trailing columns come in equal-height pairs; take one Delta per pair
    for (int c = r + 2; c <= lambda.width(); c += 2) v *= s2_delta_r(table, lt.part(c));
    return v;
}

bool verify_auxilary(int m) {
    const TablePtr t = VarTable::s2(m, 1);
    SuperMatrix M(t, m + 1);
    M.at(1, 1) = SuperPolynomial::zero(t);
    for (int i = 1; i <= m; ++i) {
        M.set(1, 1 + i, t->s2eta(1, i));
        M.set(1 + i, 1, t->s2eta(1, i));
        for (int j = 1; j <= m; ++j) M.set(1 + i, 1 + j, t->s2x(i, j));
    }
    return superdet(M).is_zero();
}

}  // namespace howe
