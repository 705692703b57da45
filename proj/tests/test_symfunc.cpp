#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "superhowe/errors.hpp"
#include "superhowe/symfunc.hpp"
#include "support/tableau_oracles.hpp"

using namespace howe;

namespace {

std::vector<int> ids(const TablePtr& t, char fam) {
    std::vector<int> out;
    for (int i = 1; i <= t->family_size(fam); ++i) out.push_back(t->cvar(fam, i));
    return out;
}

using howe::testsupport::hook_tableau_oracle;
using howe::testsupport::ssyt_oracle;

}  // namespace

TEST_CASE("schur polynomials") {
    const TablePtr t = VarTable::chars({{'x', 2}});
    const auto xs = ids(t, 'x');
    CHECK(to_string(schur(t, Partition{1}, xs)) == "x[1] + x[2]");
    SUBCASE("s_(2,1) in two variables, frozen from the tableau oracle") {
        const SuperPolynomial expect = ssyt_oracle(t, Partition{2, 1}, Partition{}, xs);
        CHECK(to_string(expect) == "x[1]^2*x[2] + x[1]*x[2]^2");
        CHECK(schur(t, Partition{2, 1}, xs) == expect);
    }
    SUBCASE("vanishes when the length exceeds the variable count") {
        CHECK(schur(t, Partition{1, 1, 1}, xs).is_zero());
    }
    SUBCASE("matches the tableau oracle on all |lambda| <= 5") {
        for (int k = 0; k <= 5; ++k)
            for (const Partition& lam : partitions_of(k))
                CHECK(schur(t, lam, xs) == ssyt_oracle(t, lam, Partition{}, xs));
    }
}

TEST_CASE("skew schur polynomials") {
    const TablePtr t = VarTable::chars({{'x', 2}});
    const auto xs = ids(t, 'x');
    SUBCASE("lambda/lambda is 1") {
        const SuperPolynomial one = SuperPolynomial::constant(t, 1);
        CHECK(skew_schur(t, Partition{2, 1}, Partition{2, 1}, xs) == one);
    }
    SUBCASE("(2,1)/(1) in two variables") {
        const SuperPolynomial expect = ssyt_oracle(t, Partition{2, 1}, Partition{1}, xs);
        // four tableaux: s_2 + s_{1,1} = (x1+x2)^2
        const SuperPolynomial byhand =
            (SuperPolynomial::variable(t, xs[0]) + SuperPolynomial::variable(t, xs[1])) *
            (SuperPolynomial::variable(t, xs[0]) + SuperPolynomial::variable(t, xs[1]));
        CHECK(expect == byhand);
        CHECK(skew_schur(t, Partition{2, 1}, Partition{1}, xs) == expect);
    }
    SUBCASE("single row gives the complete homogeneous polynomial") {
        CHECK(skew_schur(t, Partition{3}, Partition{}, xs) == complete_homog(t, xs, 3));
    }
    SUBCASE("mu must be contained") {
        CHECK_THROWS_AS(skew_schur(t, Partition{2}, Partition{1, 1}, xs), NotContainedError);
    }
    SUBCASE("oracle agreement on skew shapes inside (3,2,1)") {
        const Partition lam{3, 2, 1};
        for (const Partition& mu : subpartitions(lam, 3))
            CHECK(skew_schur(t, lam, mu, xs) == ssyt_oracle(t, lam, mu, xs));
    }
}

TEST_CASE("hook schur polynomials") {
    SUBCASE("HS_(1) is the character of the natural module") {
        const TablePtr t = VarTable::chars({{'x', 2}, {'y', 2}});
        CHECK(to_string(hook_schur(t, Partition{1}, ids(t, 'x'), ids(t, 'y'))) ==
              "x[1] + x[2] + y[1] + y[2]");
    }
    SUBCASE("y = 0 specializes to the Schur polynomial") {
        const TablePtr t = VarTable::chars({{'x', 2}});
        for (int k = 0; k <= 4; ++k)
            for (const Partition& lam : partitions_of(k))
                CHECK(hook_schur(t, lam, ids(t, 'x'), {}) == schur(t, lam, ids(t, 'x')));
    }
    SUBCASE("x = 0 specializes to the transposed Schur polynomial") {
        const TablePtr t = VarTable::chars({{'y', 2}});
        for (int k = 0; k <= 4; ++k)
            for (const Partition& lam : partitions_of(k))
                CHECK(hook_schur(t, lam, {}, ids(t, 'y')) ==
                      schur(t, lam.transpose(), ids(t, 'y')));
    }
    SUBCASE("HS_(2)(x_1; y_1), frozen from the hook tableau oracle") {
        const TablePtr t = VarTable::chars({{'x', 1}, {'y', 1}});
        const auto xs = ids(t, 'x'), ys = ids(t, 'y');
        const SuperPolynomial oracle = hook_tableau_oracle(t, Partition{2}, xs, ys);
        CHECK(to_string(oracle) == "x[1]^2 + x[1]*y[1]");
        CHECK(hook_schur(t, Partition{2}, xs, ys) == oracle);
    }
    SUBCASE("matches the tableau oracle for |lambda| <= 6, m,n <= 2") {
        for (int m = 0; m <= 2; ++m)
            for (int n = 0; n <= 2; ++n) {
                const TablePtr t = VarTable::chars({{'x', m}, {'y', n}});
                const auto xs = ids(t, 'x'), ys = ids(t, 'y');
                for (int k = 0; k <= 6; ++k)
                    for (const Partition& lam : partitions_of(k))
                        CHECK(hook_schur(t, lam, xs, ys) == hook_tableau_oracle(t, lam, xs, ys));
            }
    }
    SUBCASE("vanishes exactly outside the hook") {
        for (int m = 0; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                const TablePtr t = VarTable::chars({{'x', m}, {'y', n}});
                const auto xs = ids(t, 'x'), ys = ids(t, 'y');
                for (int k = 0; k <= 8; ++k)
                    for (const Partition& lam : partitions_of(k))
                        CHECK(hook_schur(t, lam, xs, ys).is_zero() == !lam.in_hook(m, n));
            }
    }
    SUBCASE("cancellation: x_m = t, y_n = -t leaves no trace of t") {
        const int m = 2, n = 2;
        const TablePtr src = VarTable::chars({{'x', m}, {'y', n}});
        const TablePtr dst = VarTable::chars({{'x', m - 1}, {'y', n - 1}, {'t', 1}});
        std::vector<std::pair<int, int>> subst(static_cast<std::size_t>(src.get()->count()), {-1, 1});
        for (int i = 1; i < m; ++i) subst[static_cast<std::size_t>(src->cvar('x', i))] = {dst->cvar('x', i), 1};
        for (int j = 1; j < n; ++j) subst[static_cast<std::size_t>(src->cvar('y', j))] = {dst->cvar('y', j), 1};
        subst[static_cast<std::size_t>(src->cvar('x', m))] = {dst->cvar('t', 1), 1};
        subst[static_cast<std::size_t>(src->cvar('y', n))] = {dst->cvar('t', 1), -1};
        const int tvar = dst->cvar('t', 1);
        for (int k = 0; k <= 5; ++k)
            for (const Partition& lam : partitions_of(k)) {
                const SuperPolynomial hs = hook_schur(src, lam, ids(src, 'x'), ids(src, 'y'));
                if (hs.is_zero()) continue;
                const SuperPolynomial submitted = transfer(hs, dst, subst);
                CHECK_FALSE(submitted.uses_variable(tvar));
            }
    }
}

TEST_CASE("multi-series arithmetic re-truncates") {
    const TablePtr t = VarTable::chars({{'x', 1}});
    const int x = t->cvar('x', 1);
    MultiSeries s = MultiSeries::one(t, 3);
    Monomial xm;
    xm.even.emplace_back(x, 1);
    s.mul_geometric_inverse(xm, -1);  // 1/(1-x) = 1 + x + x^2 + x^3 + ...
    CHECK(to_string(s.poly()) == "1 + x[1] + x[1]^2 + x[1]^3");
    CHECK(to_string(s.slice(2)) == "x[1]^2");
    SuperPolynomial big = SuperPolynomial::term(t, xm, 1);
    big = big * big * big * big;  // x^4 is beyond the cap
    s += big;
    CHECK(to_string(s.poly()) == "1 + x[1] + x[1]^2 + x[1]^3");
    s *= SuperPolynomial::term(t, xm, 1);
    CHECK(to_string(s.poly()) == "x[1] + x[1]^2 + x[1]^3");
}

TEST_CASE("super Cauchy identities at small parameters") {
    SUBCASE("degree-0 and degree-1 slices") {
        const IdentityReport rep = verify_super_cauchy(1, 1, 1, 1, 1);
        CHECK(rep.pass);
    }
    SUBCASE("q=n=0 reduces to the classical Cauchy identity") {
        CHECK(verify_super_cauchy(2, 0, 2, 0, 4).pass);
    }
    SUBCASE("full expansion at (1,1,1,1) up to degree 3") {
        CHECK(verify_super_cauchy(1, 1, 1, 1, 3).pass);
    }
    SUBCASE("dual: q=m=0 gives the dual Cauchy identity") {
        CHECK(verify_super_dual_cauchy(2, 0, 0, 2, 4).pass);
    }
    SUBCASE("dual at (1,1,1,1) up to degree 3") {
        CHECK(verify_super_dual_cauchy(1, 1, 1, 1, 3).pass);
    }
}

TEST_CASE("s2 character identities at small parameters") {
    for (const IdentityReport& rep : verify_s2_characters(1, 2, 4)) {
        INFO(rep.to_text());
        CHECK(rep.pass);
    }
    SUBCASE("x=0 specialization inside the even-row identity") {
        for (const IdentityReport& rep : verify_s2_characters(0, 3, 4)) {
            INFO(rep.to_text());
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("classical quartet") {
    SUBCASE("m=1 degenerate cases") {
        const auto reports = verify_classical_quartet(1, 6);
        REQUIRE(reports.size() == 4);
        for (const IdentityReport& rep : reports) {
            INFO(rep.to_text());
            CHECK(rep.pass);
        }
    }
    SUBCASE("m=2 through degree 6") {
        for (const IdentityReport& rep : verify_classical_quartet(2, 6)) {
            INFO(rep.to_text());
            CHECK(rep.pass);
        }
    }
}
