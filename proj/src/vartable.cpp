#include "superhowe/vartable.hpp"

#include <cstdlib>
#include <stdexcept>

#include "superhowe/errors.hpp"

namespace howe {

namespace {
std::size_t g_budget = [] {
    if (const char* env = std::getenv("SUPERHOWE_BUDGET")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(5'000'000);
}();
}  // namespace

std::size_t term_budget() { return g_budget; }
void set_term_budget(std::size_t terms) { g_budget = terms; }

int VarTable::add(char family, int sub, int sup, Parity parity, std::vector<int> weight) {
    const int id = count();
    vars_.push_back(Var{family, sub, sup, parity, std::move(weight)});
    index_[{family, sub, sup}] = id;
    return id;
}

TablePtr VarTable::tensor(int p, int q, int m, int n, bool with_aux) {
    if (p < 0 || q < 0 || m < 0 || n < 0) throw std::invalid_argument("tensor: negative parameter");
    auto t = std::shared_ptr<VarTable>(new VarTable());
    t->model_ = Model::tensor;
    t->p_ = p;
    t->q_ = q;
    t->m_ = m;
    t->n_ = n;
    t->aux_ = with_aux;
    t->weight_len_ = p + q + m + n;
    auto wt = [&](int glpq_slot, int glmn_slot) {
        std::vector<int> w(static_cast<std::size_t>(t->weight_len_), 0);
        w[static_cast<std::size_t>(glpq_slot)] = 1;
        w[static_cast<std::size_t>(p + q + glmn_slot)] = 1;
        return w;
    };
    const int xrows = with_aux ? p : m;
    // x_l^i = e_l (x) e^i; auxiliary rows m+1..p carry no gl(m|n) weight slot,
    // they are a computational device and never survive into results.
    for (int l = 1; l <= xrows; ++l)
        for (int i = 1; i <= p; ++i) {
            std::vector<int> w(static_cast<std::size_t>(t->weight_len_), 0);
            w[static_cast<std::size_t>(i - 1)] = 1;
            if (l <= m) w[static_cast<std::size_t>(p + q + l - 1)] = 1;
            t->add('x', l, i, Parity::even, std::move(w));
        }
    // odd order: xi family first (lex by (l,j)), then eta (lex by (k,i))
    for (int l = 1; l <= m; ++l)
        for (int j = 1; j <= q; ++j) t->add('s', l, j, Parity::odd, wt(p + j - 1, l - 1));
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= p; ++i) t->add('h', k, i, Parity::odd, wt(i - 1, m + k - 1));
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= q; ++j) t->add('y', k, j, Parity::even, wt(p + j - 1, m + k - 1));
    return t;
}

TablePtr VarTable::s2(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("s2: negative parameter");
    auto t = std::shared_ptr<VarTable>(new VarTable());
    t->model_ = Model::s2;
    t->m_ = m;
    t->n_ = n;
    t->weight_len_ = m + n;
    auto wt = [&](int a, int b) {
        std::vector<int> w(static_cast<std::size_t>(m + n), 0);
        w[static_cast<std::size_t>(a)] += 1;
        w[static_cast<std::size_t>(b)] += 1;
        return w;
    };
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) t->add('x', i, j, Parity::even, wt(i - 1, j - 1));
    for (int k = 1; k <= n; ++k)
        for (int i = 1; i <= m; ++i) t->add('h', k, i, Parity::odd, wt(m + k - 1, i - 1));
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) t->add('y', k, l, Parity::even, wt(m + k - 1, m + l - 1));
    return t;
}

TablePtr VarTable::chars(const std::vector<std::pair<char, int>>& families) {
    auto t = std::shared_ptr<VarTable>(new VarTable());
    t->model_ = Model::chars;
    int total = 0;
    for (const auto& [fam, size] : families) total += size;
    t->weight_len_ = total;
    int slot = 0;
    for (const auto& [fam, size] : families) {
        t->family_sizes_[fam] = size;
        for (int i = 1; i <= size; ++i) {
            std::vector<int> w(static_cast<std::size_t>(total), 0);
            w[static_cast<std::size_t>(slot++)] = 1;
            t->add(fam, i, 0, Parity::even, std::move(w));
        }
    }
    return t;
}

namespace {
[[noreturn]] void bad_index(const char* what) { throw std::out_of_range(what); }
}  // namespace

int VarTable::x(int l, int i) const {
    const int id = find('x', l, i);
    if (id < 0) bad_index("VarTable::x index out of range");
    return id;
}

int VarTable::xi(int l, int j) const {
    const int id = find('s', l, j);
    if (id < 0) bad_index("VarTable::xi index out of range");
    return id;
}

int VarTable::eta(int k, int i) const {
    const int id = find('h', k, i);
    if (id < 0) bad_index("VarTable::eta index out of range");
    return id;
}

int VarTable::y(int k, int j) const {
    const int id = find('y', k, j);
    if (id < 0) bad_index("VarTable::y index out of range");
    return id;
}

int VarTable::s2x(int i, int j) const {
    if (i > j) std::swap(i, j);
    const int id = find('x', i, j);
    if (id < 0) bad_index("VarTable::s2x index out of range");
    return id;
}

std::pair<int, int> VarTable::s2y(int k, int l) const {
    if (k == l) return {-1, 0};
    int sign = 1;
    if (k > l) {
        std::swap(k, l);
        sign = -1;
    }
    const int id = find('y', k, l);
    if (id < 0) bad_index("VarTable::s2y index out of range");
    return {id, sign};
}

int VarTable::s2eta(int k, int i) const {
    const int id = find('h', k, i);
    if (id < 0) bad_index("VarTable::s2eta index out of range");
    return id;
}

int VarTable::cvar(char family, int idx) const {
    const int id = find(family, idx, 0);
    if (id < 0) bad_index("VarTable::cvar index out of range");
    return id;
}

int VarTable::family_size(char family) const {
    auto it = family_sizes_.find(family);
    return it == family_sizes_.end() ? 0 : it->second;
}

int VarTable::find(char family, int sub, int sup) const {
    auto it = index_.find({family, sub, sup});
    return it == index_.end() ? -1 : it->second;
}

std::string VarTable::name(int id) const {
    const Var& v = var(id);
    std::string s(1, v.family);
    s += '[';
    s += std::to_string(v.sub);
    if (v.sup != 0) {
        s += ',';
        s += std::to_string(v.sup);
    }
    s += ']';
    return s;
}

}  // namespace howe
