#pragma once

#include <map>
#include <string>
#include <vector>

#include "superhowe/partition.hpp"
#include "superhowe/polynomial.hpp"

namespace howe {

// Truncated power series over commuting character variables: a polynomial
// whose arithmetic drops every term of total degree above the cap.
class MultiSeries {
public:
    MultiSeries(TablePtr table, int truncation_degree);
    static MultiSeries one(TablePtr table, int truncation_degree);

    const SuperPolynomial& poly() const { return poly_; }
    int truncation_degree() const { return cap_; }

    MultiSeries& operator+=(const SuperPolynomial& f);
    MultiSeries& operator*=(const SuperPolynomial& f);
    // multiply by (1 + sign*mono)^{-1} expanded as a geometric series
    MultiSeries& mul_geometric_inverse(const Monomial& mono, int sign);

    SuperPolynomial slice(int degree) const;

private:
    SuperPolynomial poly_;
    int cap_;
};

SuperPolynomial truncate(const SuperPolynomial& f, int cap);

// complete homogeneous polynomial h_k in the given even variables
SuperPolynomial complete_homog(const TablePtr& table, const std::vector<int>& vars, int k);

// Schur polynomial via the Jacobi-Trudi determinant; 0 when l(lambda) > #vars
SuperPolynomial schur(const TablePtr& table, const Partition& lambda, const std::vector<int>& vars);

// skew Schur polynomial s_{lambda/mu}; throws NotContainedError
SuperPolynomial skew_schur(const TablePtr& table, const Partition& lambda, const Partition& mu,
                           const std::vector<int>& vars);

// HS_lambda(x;y) = sum over mu subseteq lambda, l(mu) <= #xs of
// s_mu(x) * s_{lambda'/mu'}(y); vanishes iff lambda_{m+1} > n.
SuperPolynomial hook_schur(const TablePtr& table, const Partition& lambda,
                           const std::vector<int>& xs, const std::vector<int>& ys);

struct IdentityReport {
    std::string identity;
    std::map<std::string, int> params;
    int max_degree = 0;
    bool pass = false;
    std::string first_mismatch;  // canonical monomial + both coefficients

    std::string to_text() const;
};

IdentityReport verify_super_cauchy(int p, int q, int m, int n, int maxdeg);
IdentityReport verify_super_dual_cauchy(int p, int q, int m, int n, int maxdeg);
// even-row and nested-hook character identities for the S^2 model
std::vector<IdentityReport> verify_s2_characters(int m, int n, int maxdeg);
// the four classical specializations in m variables
std::vector<IdentityReport> verify_classical_quartet(int m, int maxdeg);

}  // namespace howe
