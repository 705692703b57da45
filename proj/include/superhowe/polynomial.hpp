#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superhowe/rational.hpp"
#include "superhowe/vartable.hpp"

namespace howe {

// Canonical monomial: even part as (id, exponent) pairs sorted by id, odd
// part as a strictly increasing id sequence (each odd variable at most once).
struct Monomial {
    std::vector<std::pair<int, int>> even;
    std::vector<int> odd;

    int degree() const;
    bool is_one() const { return even.empty() && odd.empty(); }
    int exponent(int id) const;
    bool contains_odd(int id) const;

    bool operator==(const Monomial& o) const { return even == o.even && odd == o.odd; }
};

// Strict order: total degree first, then position-wise on the merged
// (id, exponent) stream with smaller ids more significant.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// sign = +1/-1 with the interleaving parity of the odd parts; sign = 0 means
// the product vanishes (shared odd variable).
std::pair<int, Monomial> mono_mul(const Monomial& a, const Monomial& b);

class SuperPolynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    SuperPolynomial() = default;
    explicit SuperPolynomial(TablePtr table) : table_(std::move(table)) {}

    static SuperPolynomial zero(TablePtr table) { return SuperPolynomial(std::move(table)); }
    static SuperPolynomial constant(TablePtr table, const Rational& c);
    static SuperPolynomial variable(TablePtr table, int id);
    static SuperPolynomial term(TablePtr table, Monomial mono, const Rational& c);

    const TablePtr& table() const { return table_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int degree() const;  // max total degree; -1 for the zero polynomial

    // parity of a parity-homogeneous polynomial; nullopt when mixed
    std::optional<Parity> parity() const;

    void add_term(const Monomial& mono, const Rational& c);
    Rational coefficient(const Monomial& mono) const;

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Rational& c);

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }
    friend SuperPolynomial operator*(const Rational& c, SuperPolynomial a) { return a *= c; }
    friend SuperPolynomial operator-(SuperPolynomial a) { return a *= Rational(-1); }

    bool operator==(const SuperPolynomial& o) const;

    // Divide by the coefficient of the least monomial; for up-to-scalar
    // comparisons between construction routes.
    SuperPolynomial normalized() const;

    bool uses_variable(int id) const;

private:
    void check_same_table(const SuperPolynomial& o) const;
    void check_budget() const;

    TablePtr table_;
    Terms terms_;
};

// Exact division; den must be nonzero and purely even.
SuperPolynomial divide_exact(const SuperPolynomial& num, const SuperPolynomial& den);

// Square matrix of polynomial entries (in practice single variables).
class SuperMatrix {
public:
    SuperMatrix(TablePtr table, int r);
    int size() const { return r_; }
    SuperPolynomial& at(int i, int j);  // 1-based
    const SuperPolynomial& at(int i, int j) const;
    void set(int i, int j, int var_id);
    const TablePtr& table() const { return table_; }

private:
    TablePtr table_;
    int r_;
    std::vector<SuperPolynomial> entries_;
};

// Row-ordered determinant: sum over sigma of sgn(sigma) a_1^{sigma(1)} ...
// a_r^{sigma(r)} with the factor order significant.
SuperPolynomial superdet(const SuperMatrix& M);

// Canonical text form: terms by ascending (degree, lex), factors by id,
// e.g. "3/2*x[1,1]^2*h[1,1]*h[1,2]".  Stable across runs.
std::string to_string(const SuperPolynomial& f);
SuperPolynomial parse_polynomial(const TablePtr& table, std::string_view text);

// Map a polynomial onto another table.  var_map sends source variable id to
// (target id, +/-1 scalar); collisions are allowed for even targets.  Odd
// images are re-sorted with the interleaving sign.
SuperPolynomial transfer(const SuperPolynomial& f, const TablePtr& target,
                         const std::vector<std::pair<int, int>>& var_map);

// Identity-by-name transfer: matches (family, sub, sup) in the target table.
SuperPolynomial transfer_by_name(const SuperPolynomial& f, const TablePtr& target);

}  // namespace howe
