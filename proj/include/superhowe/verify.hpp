#pragma once

#include <array>
#include <string>
#include <vector>

#include "superhowe/realization.hpp"
#include "superhowe/symfunc.hpp"

namespace howe {

struct VerificationReport {
    std::string theorem;
    std::vector<std::pair<std::string, int>> params;
    int checks = 0;
    std::string status = "pass";  // pass | fail | over-budget
    std::string counterexample;
    double wall_ms = 0;

    bool pass() const { return status == "pass"; }
    std::string to_text() const;
    std::string to_json(bool with_timing = false) const;
};

// Joint character of S^k / Lambda^k over the given generators, sliced at the
// top degree.  Each generator contributes its weight monomial; odd generators
// square to zero.
SuperPolynomial graded_character(const TablePtr& chars,
                                 const std::vector<std::pair<Monomial, Parity>>& gens, int k);

VerificationReport verify_tensor_duality(int p, int q, int m, int n, int k);
VerificationReport verify_skew_duality(int p, int q, int m, int n, int k);
VerificationReport verify_s2_decomposition(int m, int n, int k);
VerificationReport verify_lambda_s2_decomposition(int m, int n, int k);

struct CaseGrid {
    std::vector<std::array<int, 4>> tensor_cells;
    int tensor_max_size = 5;
    std::vector<std::array<int, 2>> s2_cells;
    int s2_max_size = 8;
};

// (p,q,m,n) and (m,n) tuples covering q=0, p=m, p>m>0 and classical corners
CaseGrid default_grid();

// Construct every grid vector and check nonzero / weight / annihilation.
VerificationReport run_hwv_suite(const CaseGrid& grid);

}  // namespace howe
