#pragma once

#include "rsum/polynomial.hpp"
#include "rsum/rational.hpp"

#include <string>

namespace rsum::numbers {

// Bernoulli number B_n under the t/(e^t-1) convention (B_1 = -1/2).
Rational bernoulli(int n);

// Eulerian polynomial P_n(x) from the Eulerian-number triangle recurrence
// A(n,m) = (m+1) A(n-1,m) + (n-m) A(n-1,m-1).
Polynomial eulerian_polynomial(int n);

// d^m P_u / dx^m evaluated at x = 1 (literal differentiation).
Rational eulerian_derivative_at_one(int u, int m);

// Signed form Gbar_n = -sum_{k=1..n} Gbar_{n-k}/(k+1); unsigned G_n = (-1)^n Gbar_n.
Rational gregory_coefficient(int n, bool signed_form);

// Gregory polynomial G_m^{(u)} as a function of u: a pure polynomial for
// m >= 1, and poly(u)/u for m = 0 (where poly = 1).
struct GregoryPolynomial {
    int m;
    Polynomial poly;  // in the variable u
    bool divide_by_u;  // true only for m = 0
    Rational eval(const Rational& u) const;
};

GregoryPolynomial gregory_polynomial(int m);
Rational gregory_polynomial_eval(int m, const Rational& u);

// Extended Gregory coefficient Gtilde_n^s.
Rational extended_gregory(int s, int n);

// Hirzebruch number h_k = prod over primes p <= k+1 of p^floor(k/(p-1)).
Int hirzebruch(int k);

// Generalized Bernoulli number B_n^{(k)} and polynomial B_n^{(k)}(x),
// coefficients of (t/(e^t-1))^k e^{xt}. Negative orders k are allowed
// ((e^t-1)/t raised to -k).
Rational gen_bernoulli_number(int n, int k);
Rational gen_bernoulli_poly(int n, int k, const Rational& x);

// B_n^{(k)}(arg(m)) with a degree-1 polynomial argument, as a polynomial in m.
Polynomial gen_bernoulli_poly_sym(int n, int k, const Polynomial& arg);

// Test hook: overwrite one memoized constant so consistency suites can prove
// they detect corruption. family is one of "bernoulli", "gregory", "eulerian".
void inject_fault(const std::string& family, int index);
void clear_faults();

}  // namespace rsum::numbers
