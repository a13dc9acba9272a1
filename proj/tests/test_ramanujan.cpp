#include <doctest.h>

#include "rsum/genfunc.hpp"
#include "rsum/numbers.hpp"
#include "rsum/ramanujan.hpp"
#include "rsum/rational.hpp"

#include <vector>

using namespace rsum;

TEST_CASE("gauge expansion of the integer sum") {
    // x/(1-x)^2 at x = e^-lambda: 1/lambda^2 - 1/12 + lambda^2/240 - lambda^4/6048 + ...
    AsymptoticExpansion e = gauge_expand(parse_genfunc("x/(1-x)^2"), 6);
    CHECK(e.pole_order == 2);
    CHECK(e.divergent == std::vector<Rational>{1, 0});
    CHECK(e.constant == Rational(-1, 12));
    CHECK(e.tail == std::vector<Rational>{0, Rational(1, 240), 0, Rational(-1, 6048)});
    CHECK(e.coeff(-2) == 1);
    CHECK(e.coeff(-7) == 0);
    CHECK(e.coeff(4) == Rational(-1, 6048));
    CHECK_THROWS_AS(e.coeff(5), std::out_of_range);
}

TEST_CASE("gauge expansion of geometric and alternating series") {
    AsymptoticExpansion g = gauge_expand(parse_genfunc("x/(1-x)"), 4);
    CHECK(g.divergent == std::vector<Rational>{1});
    CHECK(g.constant == Rational(-1, 2));
    CHECK(g.tail[0] == Rational(1, 12));

    AsymptoticExpansion a = gauge_expand(parse_genfunc("x/(1+x)"), 4);
    CHECK(a.pole_order == 0);
    CHECK(a.constant == Rational(1, 2));
}

TEST_CASE("power family smoothing leaves a single divergent term") {
    // sum n^{k-1} e^{-n lambda} = (k-1)!/lambda^k + constant + O(lambda):
    // every intermediate divergent slot vanishes.
    for (int k = 1; k <= 8; ++k) {
        AsymptoticExpansion e = gauge_expand(family_genfunc(Family::power, k, 1), k + 3);
        CHECK(e.pole_order == k);
        CHECK(e.divergent[0] == Rational(factorial(static_cast<unsigned>(k - 1))));
        for (int i = 1; i < k; ++i) CHECK(e.divergent[i] == 0);
        CHECK(e.constant == closed_power_sum(k));
    }
}

TEST_CASE("figurate family constants by gauge expansion") {
    for (int k = 1; k <= 10; ++k) {
        AsymptoticExpansion e = gauge_expand(family_genfunc(Family::figurate, k, 1), k + 3);
        CHECK(e.pole_order == k);
        CHECK(e.divergent[0] == 1);
        CHECK(e.constant == closed_figurate(k));
    }
}

TEST_CASE("shifted gauge expansion produces generalized bernoulli coefficients") {
    // e^{-m lambda}/(1-e^-lambda)^k = sum B_n^(k)(k-m)/n! lambda^{n-k}
    for (int k = 1; k <= 6; ++k)
        for (const Rational& m : {Rational(1), Rational(2), Rational(5, 2), Rational(0)}) {
            AsymptoticExpansion e = gauge_expand_shifted(Family::figurate, k, m, 4);
            for (int n = 0; n <= k + 4; ++n)
                CHECK(e.coeff(n - k) ==
                      numbers::gen_bernoulli_poly(n, k, Rational(k) - m) /
                          Rational(factorial(static_cast<unsigned>(n))));
        }
    // m = 1 agrees with the generating-function route.
    for (int k = 1; k <= 6; ++k) {
        AsymptoticExpansion s = gauge_expand_shifted(Family::power, k, 1, 3);
        AsymptoticExpansion g = gauge_expand(family_genfunc(Family::power, k, 1), k + 3);
        for (int n = -k; n <= 3; ++n) CHECK(s.coeff(n) == g.coeff(n));
    }
}

TEST_CASE("closed forms") {
    const std::vector<Rational> powers{{-1, 2}, {-1, 12}, {0}, {1, 120},
                                       {0},     {-1, 252}, {0}, {1, 240}};
    for (int k = 1; k <= 8; ++k) CHECK(closed_power_sum(k) == powers[k - 1]);
    const std::vector<Rational> figurate{{-1, 2},   {-1, 12},      {-1, 24},      {-19, 720},
                                         {-3, 160}, {-863, 60480}, {-275, 24192}};
    for (int k = 1; k <= 7; ++k) CHECK(closed_figurate(k) == figurate[k - 1]);
    CHECK_THROWS_AS(closed_power_sum(0), std::domain_error);
}

TEST_CASE("bernoulli form of the smoothed sum") {
    for (int k = 1; k <= 10; ++k) {
        CHECK(smoothed_bernoulli_form(k, 1) == closed_figurate(k));
        // Reflection: B_k^(k)(k-m) = (-1)^k B_k^(k)(m).
        for (const Rational& m : {Rational(2), Rational(5, 2), Rational(-1, 3)}) {
            Rational reflected = numbers::gen_bernoulli_poly(k, k, m) /
                                 Rational(factorial(static_cast<unsigned>(k)));
            if (k % 2 != 0) reflected = -reflected;
            CHECK(smoothed_bernoulli_form(k, m) == reflected);
        }
    }
}

TEST_CASE("twist-and-difference solver") {
    for (int k = 1; k <= 12; ++k) {
        CHECK(intuitive_solve_power(k) == closed_power_sum(k));
        CHECK(intuitive_solve(Family::power, k) == closed_power_sum(k));
        CHECK(intuitive_solve(Family::figurate, k) == closed_figurate(k));
    }
    // The figurate solver consumes the ledger of lower-order sums.
    std::vector<Rational> memo;
    for (int j = 1; j <= 6; ++j) {
        memo.push_back(intuitive_solve_figurate(j, memo));
        CHECK(memo.back() == closed_figurate(j));
    }
    CHECK_THROWS_AS(intuitive_solve_figurate(9, memo), std::domain_error);
}

TEST_CASE("general twist-and-difference instance") {
    // For the power family: F = P_{k-1}, a1 = 2^k, a2 = 0.
    for (int k = 1; k <= 8; ++k) {
        Rational a1(int_pow(2, static_cast<unsigned>(k)));
        CHECK(intuitive_general(numbers::eulerian_polynomial(k - 1), k, a1, 0) ==
              closed_power_sum(k));
    }
    CHECK_THROWS_AS(intuitive_general(Polynomial{Rational(1)}, 1, 1, 0), std::domain_error);
}

TEST_CASE("regularization cancels divergences exactly") {
    for (int k = 1; k <= 12; ++k) {
        RegularizationReport r = regularization_check(k, k + 4);
        CHECK(r.constant == closed_power_sum(k));
        CHECK(r.series_divergent == r.comparator_divergent);
        // eps^-k slot carries (k-1)!, the slot at eps^{m-k} carries k! G_m^(k).
        CHECK(r.series_divergent[0] == Rational(factorial(static_cast<unsigned>(k - 1))));
        for (int m = 1; m < k; ++m)
            CHECK(r.series_divergent[m] ==
                  Rational(factorial(static_cast<unsigned>(k))) *
                      numbers::gregory_polynomial_eval(m, k));
    }
    CHECK_THROWS_AS(regularization_check(3, 4), std::domain_error);
}

TEST_CASE("constant term as a polynomial in the shift") {
    // k = 2: m^2/2 - m + 5/12 = (m-1)^2/2 - 1/12.
    Polynomial c2 = shift_constant_poly(2);
    CHECK(c2 == Polynomial{Rational(5, 12), Rational(-1), Rational(1, 2)});
    CHECK(c2.eval(1) == Rational(-1, 12));
    for (int k = 1; k <= 7; ++k) {
        Polynomial ck = shift_constant_poly(k);
        for (const Rational& m : {Rational(1), Rational(3), Rational(-1, 2), Rational(7, 3)})
            CHECK(ck.eval(m) == smoothed_bernoulli_form(k, m));
    }
}

TEST_CASE("dispatch validates the method domain") {
    CHECK(smoothed_sum(Family::power, 3, 1, Method::closed).value == Rational(0));
    CHECK(smoothed_sum(Family::figurate, 3, 2, Method::closed).value == Rational(1, 24));
    CHECK_THROWS_AS(smoothed_sum(Family::figurate, 3, 1, Method::regularized),
                    std::domain_error);
    CHECK_THROWS_AS(smoothed_sum(Family::power, 3, 2, Method::intuitive), std::domain_error);
    CHECK_THROWS_AS(smoothed_sum(Family::power, 3, 2, Method::closed), std::domain_error);
    CHECK_THROWS_AS(smoothed_sum(Family::power, 0, 1, Method::closed), std::domain_error);
    CHECK_THROWS_AS(smoothed_sum(Family::power, 3, 1, Method::bernoulli), std::domain_error);
}

TEST_CASE("all methods agree") {
    for (int k = 1; k <= 12; ++k) {
        std::vector<SmoothedSum> p = smoothed_sum_all(Family::power, k, 1);
        CHECK(p.size() == 4);
        for (const auto& s : p) CHECK(s.value == closed_power_sum(k));
        std::vector<SmoothedSum> f = smoothed_sum_all(Family::figurate, k, 1);
        CHECK(f.size() == 4);
        for (const auto& s : f) CHECK(s.value == closed_figurate(k));
    }
    for (const Rational& m : {Rational(2), Rational(5, 2)}) {
        std::vector<SmoothedSum> f = smoothed_sum_all(Family::figurate, 4, m);
        CHECK(f.size() == 3);
        for (const auto& s : f) CHECK(s.value == f.front().value);
    }
}

TEST_CASE("corrupted constants trip the cross-checks") {
    numbers::clear_faults();
    numbers::inject_fault("gregory", 4);
    CHECK_THROWS_AS(smoothed_sum_all(Family::figurate, 4, 1), ConsistencyError);
    numbers::clear_faults();
    numbers::inject_fault("bernoulli", 6);
    CHECK_THROWS_AS(smoothed_sum_all(Family::power, 6, 1), ConsistencyError);
    numbers::clear_faults();
    CHECK(smoothed_sum_all(Family::power, 6, 1).front().value == closed_power_sum(6));
}

TEST_CASE("family generating functions") {
    CHECK(family_genfunc(Family::figurate, 3, 1) == parse_genfunc("x/(1-x)^3"));
    CHECK(family_genfunc(Family::power, 4, 1) == parse_genfunc("x*(1+4*x+x^2)/(1-x)^4"));
    CHECK(family_genfunc(Family::figurate, 2, 3) == parse_genfunc("x^3/(1-x)^2"));
}
