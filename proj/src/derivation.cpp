#include "superhowe/derivation.hpp"

#include <sstream>
#include <stdexcept>

#include "superhowe/errors.hpp"

namespace howe {

SuperDerivation::SuperDerivation(TablePtr table, std::vector<DerTerm> terms, std::string label)
    : table_(std::move(table)), terms_(std::move(terms)), label_(std::move(label)) {
    if (!terms_.empty()) {
        parity_ = table_->parity(terms_.front().mult_var) ^ table_->parity(terms_.front().diff_var);
        for (const DerTerm& t : terms_) {
            const Parity p = table_->parity(t.mult_var) ^ table_->parity(t.diff_var);
            if (p != parity_) throw std::invalid_argument("SuperDerivation: mixed-parity terms");
        }
    }
}

SuperPolynomial SuperDerivation::apply(const SuperPolynomial& f) const {
    if (f.table() && !f.table()->same(*table_))
        throw TableMismatchError("derivation applied across variable tables");
    SuperPolynomial r(table_);
    for (const DerTerm& t : terms_) {
        Monomial vm;
        if (table_->odd(t.mult_var))
            vm.odd.push_back(t.mult_var);
        else
            vm.even.emplace_back(t.mult_var, 1);
        const bool diff_odd = table_->odd(t.diff_var);
        for (const auto& [mono, c] : f.terms()) {
            Monomial d;
            Rational dcoef;
            if (diff_odd) {
                int pos = -1;
                for (std::size_t i = 0; i < mono.odd.size(); ++i)
                    if (mono.odd[i] == t.diff_var) {
                        pos = static_cast<int>(i);
                        break;
                    }
                if (pos < 0) continue;
                d.even = mono.even;
                d.odd = mono.odd;
                d.odd.erase(d.odd.begin() + pos);
                dcoef = (pos % 2 == 0) ? 1 : -1;
            } else {
                const int e = mono.exponent(t.diff_var);
                if (e == 0) continue;
                d.odd = mono.odd;
                for (const auto& [id, exp] : mono.even) {
                    if (id == t.diff_var) {
                        if (exp > 1) d.even.emplace_back(id, exp - 1);
                    } else {
                        d.even.emplace_back(id, exp);
                    }
                }
                dcoef = e;
            }
            auto [sign, prod] = mono_mul(vm, d);
            if (sign == 0) continue;
            r.add_term(prod, c * dcoef * t.coeff * sign);
        }
    }
    return r;
}

std::vector<int> SuperDerivation::root() const {
    if (terms_.empty()) return {};
    const Var& v = table_->var(terms_.front().mult_var);
    const Var& w = table_->var(terms_.front().diff_var);
    std::vector<int> r(v.weight.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = v.weight[i] - w.weight[i];
    return r;
}

std::string SuperDerivation::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const DerTerm& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                out << '-';
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1) out << c.get_str() << '*';
        out << table_->name(t.mult_var) << "*d/d" << table_->name(t.diff_var);
    }
    return first ? "0" : out.str();
}

}  // namespace howe
