#include "superhowe/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "superhowe/errors.hpp"

namespace howe {

int Monomial::degree() const {
    int d = static_cast<int>(odd.size());
    for (const auto& [id, e] : even) d += e;
    return d;
}

int Monomial::exponent(int id) const {
    for (const auto& [v, e] : even)
        if (v == id) return e;
    return 0;
}

bool Monomial::contains_odd(int id) const {
    return std::binary_search(odd.begin(), odd.end(), id);
}

namespace {

// Merged (id, exponent) stream over even and odd parts, ascending id.
// Both vectors are sorted, so a two-pointer walk suffices.
int lex_compare(const Monomial& a, const Monomial& b) {
    std::size_t ae = 0, ao = 0, be = 0, bo = 0;
    auto next = [](const Monomial& f, std::size_t& ie, std::size_t& io) -> std::pair<int, int> {
        const bool he = ie < f.even.size();
        const bool ho = io < f.odd.size();
        if (!he && !ho) return {-1, 0};
        if (he && (!ho || f.even[ie].first < f.odd[io])) {
            const auto& [id, exp] = f.even[ie];
            ++ie;
            return {id, exp};
        }
        return {f.odd[io++], 1};
    };
    for (;;) {
        const auto [ida, ea] = next(a, ae, ao);
        const auto [idb, eb] = next(b, be, bo);
        if (ida < 0 && idb < 0) return 0;
        if (ida < 0) return 1;   // a exhausted: a is "later" only if degrees equal -- caller sorts by degree first
        if (idb < 0) return -1;
        if (ida != idb) return ida < idb ? -1 : 1;  // positive power of an earlier variable sorts first
        if (ea != eb) return ea > eb ? -1 : 1;
    }
}

}  // namespace

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return lex_compare(a, b) < 0;
}

std::pair<int, Monomial> mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.even.reserve(a.even.size() + b.even.size());
    std::size_t i = 0, j = 0;
    while (i < a.even.size() || j < b.even.size()) {
        if (j >= b.even.size() || (i < a.even.size() && a.even[i].first < b.even[j].first)) {
            r.even.push_back(a.even[i++]);
        } else if (i >= a.even.size() || b.even[j].first < a.even[i].first) {
            r.even.push_back(b.even[j++]);
        } else {
            r.even.emplace_back(a.even[i].first, a.even[i].second + b.even[j].second);
            ++i, ++j;
        }
    }
    // merge odd parts; each element taken from b jumps over the remaining
    // elements of a, contributing that many transpositions
    r.odd.reserve(a.odd.size() + b.odd.size());
    std::size_t inversions = 0;
    i = j = 0;
    while (i < a.odd.size() || j < b.odd.size()) {
        if (i < a.odd.size() && j < b.odd.size() && a.odd[i] == b.odd[j]) return {0, Monomial{}};
        if (j >= b.odd.size() || (i < a.odd.size() && a.odd[i] < b.odd[j])) {
            r.odd.push_back(a.odd[i++]);
        } else {
            inversions += a.odd.size() - i;
            r.odd.push_back(b.odd[j++]);
        }
    }
    return {(inversions % 2 == 0) ? 1 : -1, std::move(r)};
}

SuperPolynomial SuperPolynomial::constant(TablePtr table, const Rational& c) {
    SuperPolynomial f(std::move(table));
    if (c != 0) f.terms_[Monomial{}] = c;
    return f;
}

SuperPolynomial SuperPolynomial::variable(TablePtr table, int id) {
    Monomial m;
    if (table->odd(id))
        m.odd.push_back(id);
    else
        m.even.emplace_back(id, 1);
    return term(std::move(table), std::move(m), 1);
}

SuperPolynomial SuperPolynomial::term(TablePtr table, Monomial mono, const Rational& c) {
    SuperPolynomial f(std::move(table));
    if (c != 0) f.terms_[std::move(mono)] = c;
    return f;
}

int SuperPolynomial::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

std::optional<Parity> SuperPolynomial::parity() const {
    std::optional<Parity> par;
    for (const auto& [mono, c] : terms_) {
        const Parity pm = (mono.odd.size() % 2 == 0) ? Parity::even : Parity::odd;
        if (!par)
            par = pm;
        else if (*par != pm)
            return std::nullopt;
    }
    return par ? par : std::optional<Parity>(Parity::even);
}

void SuperPolynomial::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational SuperPolynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SuperPolynomial::check_same_table(const SuperPolynomial& o) const {
    if (table_ && o.table_ && !table_->same(*o.table_))
        throw TableMismatchError("polynomials over different variable tables");
}

void SuperPolynomial::check_budget() const {
    if (terms_.size() > term_budget()) throw OverBudgetError("term count exceeds budget");
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    check_same_table(o);
    if (!table_) table_ = o.table_;
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    check_budget();
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    check_same_table(o);
    if (!table_) table_ = o.table_;
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    check_budget();
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
    a.check_same_table(b);
    SuperPolynomial r(a.table_ ? a.table_ : b.table_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [sign, mono] = mono_mul(ma, mb);
            if (sign == 0) continue;
            Rational prod = ca * cb;
            if (sign < 0) prod = -prod;
            r.add_term(mono, prod);
        }
        r.check_budget();
    }
    return r;
}

SuperPolynomial& SuperPolynomial::operator*=(const SuperPolynomial& o) {
    *this = *this * o;
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coef] : terms_) coef *= c;
    return *this;
}

bool SuperPolynomial::operator==(const SuperPolynomial& o) const {
    return terms_ == o.terms_;
}

SuperPolynomial SuperPolynomial::normalized() const {
    if (terms_.empty()) return *this;
    SuperPolynomial r = *this;
    const Rational lead = terms_.begin()->second;
    for (auto& [mono, c] : r.terms_) c /= lead;
    return r;
}

bool SuperPolynomial::uses_variable(int id) const {
    for (const auto& [mono, c] : terms_) {
        if (mono.exponent(id) > 0 || mono.contains_odd(id)) return true;
    }
    return false;
}

SuperPolynomial divide_exact(const SuperPolynomial& num, const SuperPolynomial& den) {
    if (den.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    for (const auto& [mono, c] : den.terms())
        if (!mono.odd.empty()) throw OddDivisorError("divide_exact: divisor contains odd variables");
    SuperPolynomial q(num.table() ? num.table() : den.table());
    if (num.is_zero()) return q;

    // Leading-term division under the (degree, lex) order.  The divisor is
    // purely even, so monomial quotients keep the numerator's odd part.
    const auto& dlead = *den.terms().rbegin();
    SuperPolynomial rem = num;
    while (!rem.is_zero()) {
        const auto& [rmono, rcoef] = *rem.terms().rbegin();
        Monomial qm;
        qm.odd = rmono.odd;
        bool ok = true;
        std::size_t i = 0;
        for (const auto& [id, e] : rmono.even) {
            int need = 0;
            if (i < dlead.first.even.size() && dlead.first.even[i].first == id) need = dlead.first.even[i++].second;
            if (e < need) {
                ok = false;
                break;
            }
            if (e > need) qm.even.emplace_back(id, e - need);
        }
        if (!ok || i < dlead.first.even.size())
            throw NotDivisibleError("divide_exact: leading term not divisible");
        const Rational qc = rcoef / dlead.second;
        q.add_term(qm, qc);
        SuperPolynomial piece = SuperPolynomial::term(rem.table(), std::move(qm), qc);
        rem -= piece * den;
    }
    return q;
}

SuperMatrix::SuperMatrix(TablePtr table, int r) : table_(std::move(table)), r_(r) {
    if (r < 0) throw std::invalid_argument("SuperMatrix: negative size");
    entries_.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(r),
                    SuperPolynomial(table_));
}

SuperPolynomial& SuperMatrix::at(int i, int j) {
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r_) +
                    static_cast<std::size_t>(j - 1)];
}

const SuperPolynomial& SuperMatrix::at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(r_) +
                    static_cast<std::size_t>(j - 1)];
}

void SuperMatrix::set(int i, int j, int var_id) {
    at(i, j) = SuperPolynomial::variable(table_, var_id);
}

SuperPolynomial superdet(const SuperMatrix& M) {
    const int r = M.size();
    if (r == 0) return SuperPolynomial::constant(M.table(), 1);
    if (r > 62) throw std::invalid_argument("superdet: matrix too large for subset memoization");
    // first-row Laplace expansion, memoized on the available-column mask;
    // entries multiply the minor from the left so the row order of the
    // quoted expansion is preserved
    std::map<unsigned long long, SuperPolynomial> memo;
    auto rec = [&](auto&& self, unsigned long long mask) -> SuperPolynomial {
        if (mask == 0) return SuperPolynomial::constant(M.table(), 1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        const int row = r - __builtin_popcountll(mask) + 1;
        SuperPolynomial det(M.table());
        int pos = 0;
        for (int j = 1; j <= r; ++j) {
            const unsigned long long bit = 1ull << (j - 1);
            if (!(mask & bit)) continue;
            const SuperPolynomial& entry = M.at(row, j);
            if (!entry.is_zero()) {
                SuperPolynomial contrib = entry * self(self, mask & ~bit);
                if (pos % 2 == 1) contrib *= Rational(-1);
                det += contrib;
            }
            ++pos;
        }
        memo.emplace(mask, det);
        return det;
    };
    return rec(rec, (r >= 64) ? ~0ull : ((1ull << r) - 1));
}

std::string to_string(const SuperPolynomial& f) {
    if (f.is_zero()) return "0";
    const VarTable& table = *f.table();
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << '-';
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string factors;
        for (const auto& [id, e] : mono.even) {
            if (!factors.empty()) factors += '*';
            factors += table.name(id);
            if (e > 1) factors += '^' + std::to_string(e);
        }
        for (int id : mono.odd) {
            if (!factors.empty()) factors += '*';
            factors += table.name(id);
        }
        if (factors.empty()) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << '*';
            out << factors;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const TablePtr& table;
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse_polynomial: " + why + " at offset " + std::to_string(pos));
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(std::string(s.substr(start, pos - start)));
    }
    Rational coefficient() {
        const long n = integer();
        if (eat('/')) {
            const long d = integer();
            Rational r(n, d);
            r.canonicalize();
            return r;
        }
        return Rational(n);
    }
    // family letter + [i] or [i,j], optional ^e
    void factor(Monomial& mono, int& sign) {
        skip_ws();
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) fail("expected variable");
        const char fam = s[pos++];
        if (!eat('[')) fail("expected '['");
        const int sub = static_cast<int>(integer());
        int sup = 0;
        if (eat(',')) sup = static_cast<int>(integer());
        if (!eat(']')) fail("expected ']'");
        const int id = table->find(fam, sub, sup);
        if (id < 0) fail("unknown variable");
        int exp = 1;
        if (eat('^')) exp = static_cast<int>(integer());
        Monomial fm;
        if (table->odd(id)) {
            if (exp != 1) fail("odd variable with exponent");
            fm.odd.push_back(id);
        } else {
            fm.even.emplace_back(id, exp);
        }
        auto [sg, prod] = mono_mul(mono, fm);
        if (sg == 0) fail("repeated odd variable");
        sign *= sg;
        mono = std::move(prod);
    }
    SuperPolynomial run() {
        SuperPolynomial f(table);
        skip_ws();
        if (pos >= s.size()) fail("empty input");
        bool neg = false;
        if (eat('-')) neg = true;
        for (;;) {
            Monomial mono;
            int sign = neg ? -1 : 1;
            Rational coef = 1;
            skip_ws();
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                coef = coefficient();
                if (eat('*')) {
                    factor(mono, sign);
                    while (eat('*')) factor(mono, sign);
                }
            } else {
                factor(mono, sign);
                while (eat('*')) factor(mono, sign);
            }
            f.add_term(mono, sign > 0 ? coef : Rational(-coef));
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                fail("expected '+' or '-'");
        }
        return f;
    }
};

}  // namespace

SuperPolynomial parse_polynomial(const TablePtr& table, std::string_view text) {
    if (text == "0") return SuperPolynomial::zero(table);
    Parser p{table, text};
    return p.run();
}

SuperPolynomial transfer(const SuperPolynomial& f, const TablePtr& target,
                         const std::vector<std::pair<int, int>>& var_map) {
    SuperPolynomial r(target);
    for (const auto& [mono, c] : f.terms()) {
        Monomial image;
        int sign = 1;
        for (const auto& [id, e] : mono.even) {
            const auto& [tid, s] = var_map[static_cast<std::size_t>(id)];
            if (tid < 0) throw std::invalid_argument("transfer: unmapped variable");
            Monomial fm;
            fm.even.emplace_back(tid, e);
            auto [sg, prod] = mono_mul(image, fm);
            image = std::move(prod);
            if (s < 0 && e % 2 == 1) sign = -sign;
        }
        for (int id : mono.odd) {
            const auto& [tid, s] = var_map[static_cast<std::size_t>(id)];
            if (tid < 0) throw std::invalid_argument("transfer: unmapped variable");
            Monomial fm;
            fm.odd.push_back(tid);
            auto [sg, prod] = mono_mul(image, fm);
            if (sg == 0) throw std::invalid_argument("transfer: odd image collision");
            sign *= sg * s;
            image = std::move(prod);
        }
        r.add_term(image, sign > 0 ? c : Rational(-c));
    }
    return r;
}

SuperPolynomial transfer_by_name(const SuperPolynomial& f, const TablePtr& target) {
    const VarTable& src = *f.table();
    std::vector<std::pair<int, int>> var_map(static_cast<std::size_t>(src.count()), {-1, 1});
    for (int id = 0; id < src.count(); ++id) {
        const Var& v = src.var(id);
        var_map[static_cast<std::size_t>(id)] = {target->find(v.family, v.sub, v.sup), 1};
    }
    return transfer(f, target, var_map);
}

}  // namespace howe
