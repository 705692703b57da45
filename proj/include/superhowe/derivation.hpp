#pragma once

#include <string>
#include <vector>

#include "superhowe/polynomial.hpp"

namespace howe {

// One summand of a first-order superdifferential operator: coeff * v * d/dw.
struct DerTerm {
    Rational coeff;
    int mult_var;
    int diff_var;
};

// Sum of (coeff, v, d/dw) terms of constant parity.  Applying to a
// polynomial is linear and satisfies the super-Leibniz rule; d/d(odd)
// anticommutes past odd factors to its left.
class SuperDerivation {
public:
    SuperDerivation(TablePtr table, std::vector<DerTerm> terms, std::string label = {});

    const TablePtr& table() const { return table_; }
    const std::vector<DerTerm>& terms() const { return terms_; }
    Parity parity() const { return parity_; }
    const std::string& label() const { return label_; }

    SuperPolynomial apply(const SuperPolynomial& f) const;

    // weight(mult_var) - weight(diff_var); identical across terms
    std::vector<int> root() const;

    std::string to_string() const;

private:
    TablePtr table_;
    std::vector<DerTerm> terms_;
    Parity parity_ = Parity::even;
    std::string label_;
};

}  // namespace howe
