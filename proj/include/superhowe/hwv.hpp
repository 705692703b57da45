#pragma once

#include <vector>

#include "superhowe/partition.hpp"
#include "superhowe/polynomial.hpp"

namespace howe {

// ---- tensor model C[x, xi, eta, y] ------------------------------------------

// det of the r x r matrix with (i,j) entry x_j^i; needs r <= min(m,p).
SuperPolynomial delta_r(const TablePtr& table, int r);

// det of the r x r matrix whose first m rows are (x_j^1..x_j^r) and whose
// last r-m rows all equal (eta_k^1..eta_k^r); m <= r <= p, 1 <= k <= n.
SuperPolynomial delta_kr(const TablePtr& table, int k, int r);

// det X_j(I): the p x p matrix X with every row i in I replaced by
// (eta_j^1..eta_j^p).  The table must carry x rows up to p.
SuperPolynomial det_x_sub(const TablePtr& table, const std::vector<int>& rows, int j);

// q = 0 highest weight vector: prod_k Delta_{k,lambda'_k} prod_j Delta_{lambda'_j}.
SuperPolynomial hwv_q_zero(const TablePtr& table, const Partition& lambda);

// Gamma_r for p = m: the signed sum of det X_D det Y_D over marked diagrams.
SuperPolynomial gamma_r_pm(const TablePtr& table, int r);

// p = m highest weight vector via Gamma products and exact Delta_m division.
SuperPolynomial hwv_p_equals_m(const TablePtr& table, const Partition& lambda);

// Gamma(lambda_{p+1}, ..., lambda_{p+s}) over marked families, computed with
// auxiliary rows and purified; result lives on the given plain table.
SuperPolynomial gamma_general(const TablePtr& table, const std::vector<int>& widths);

// General-case highest weight vector; p < m handled by transposing roles.
SuperPolynomial hwv_general(const TablePtr& table, const Partition& lambda);

// Determinant identity checks (exact symbolic comparisons).
bool verify_keylemma(int p);
bool verify_maincor(int p, const std::vector<int>& I, const std::vector<int>& J);
bool verify_identity_cor(int p, int q, int m);

// ---- S^2 model C[x_ij, y_kl, eta_ki] ----------------------------------------

// first r x r minor of the symmetric matrix X = (x_ij)
SuperPolynomial s2_delta_r(const TablePtr& table, int r);

// Delta(xi_i, xi_j) = -(det X) y_ij + sum_a det X_a(xi_i) eta_ja
SuperPolynomial delta_xi(const TablePtr& table, int i, int j);

// Gamma(2l): pairing sum of Delta(xi_.,xi_.) products with signs
SuperPolynomial gamma_2l(const TablePtr& table, int l);

// highest weight vector for an even-row partition in the S^2 model
SuperPolynomial hwv_s2(const TablePtr& table, const Partition& lambda);

// bordered symmetric determinant with an odd border row/column vanishes
bool verify_auxilary(int m);

}  // namespace howe
