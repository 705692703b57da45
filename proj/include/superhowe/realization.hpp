#pragma once

#include <string>
#include <vector>

#include "superhowe/derivation.hpp"
#include "superhowe/partition.hpp"

namespace howe {

// Integer eigenvalue tuple under a list of Cartan operators.
struct WeightVector {
    std::vector<int> entries;

    bool operator==(const WeightVector& o) const { return entries == o.entries; }
    WeightVector operator+(const WeightVector& o) const;
    std::string to_string() const;
};

// Finite-dimensional gl(m|n) highest weight (a_1..a_m; b_1..b_n).
struct HighestWeight {
    std::vector<int> a;
    std::vector<int> b;

    WeightVector as_weight() const;
    std::string to_string() const;
    bool operator==(const HighestWeight& o) const { return a == o.a && b == o.b; }
};

// (lambda_1..lambda_m; <lambda'_1-m>, ..., <lambda'_n-m>) with <l> = max(l,0).
// Throws HookViolationError when lambda_{m+1} > n.
HighestWeight diagram_to_hw(const Partition& lambda, int m, int n);

// Cartan operators plus the simple raising operators of the nilpotent radical.
class AlgebraRealization {
public:
    AlgebraRealization(std::string name, TablePtr table, std::vector<SuperDerivation> cartan,
                       std::vector<SuperDerivation> raising)
        : name_(std::move(name)),
          table_(std::move(table)),
          cartan_(std::move(cartan)),
          raising_(std::move(raising)) {}

    const std::string& name() const { return name_; }
    const TablePtr& table() const { return table_; }
    const std::vector<SuperDerivation>& cartan() const { return cartan_; }
    const std::vector<SuperDerivation>& simple_raising() const { return raising_; }

private:
    std::string name_;
    TablePtr table_;
    std::vector<SuperDerivation> cartan_;
    std::vector<SuperDerivation> raising_;
};

// The gl(p|q) copy acting on C[x, xi, eta, y].
AlgebraRealization build_glpq(const TablePtr& table);
// The commuting gl(m|n) copy.
AlgebraRealization build_glmn(const TablePtr& table);
// gl(m|n) acting on the quadratic coordinates of S(S^2 C^{m|n}).
AlgebraRealization build_s2_glmn(const TablePtr& table);

// Common eigenvalue tuple of f under all Cartan operators of R.
// Throws NotAWeightVectorError when some Cartan does not act by a scalar.
WeightVector weight_of(const SuperPolynomial& f, const AlgebraRealization& R);

bool is_highest(const SuperPolynomial& f, const std::vector<AlgebraRealization>& realizations);

}  // namespace howe
