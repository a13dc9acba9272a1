#pragma once

#include "rsum/polynomial.hpp"
#include "rsum/rational.hpp"

#include <vector>

namespace rsum {

// Truncated Laurent series: coefficients for powers valuation..order-1 are
// known exactly, powers >= order are unknown. Asking for an unknown
// coefficient is a hard error, never a silent zero. The zero series is
// normalized to valuation == order with no stored coefficients.
class LaurentSeries {
  public:
    LaurentSeries(int valuation, std::vector<Rational> coeffs);
    static LaurentSeries zero(int order);
    static LaurentSeries constant(const Rational& c, int order);
    static LaurentSeries monomial(int power, const Rational& coeff, int order);
    static LaurentSeries from_polynomial(const Polynomial& p, int order);

    int valuation() const { return val_; }
    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    // Coefficient of x^n; throws std::out_of_range for n >= order.
    Rational coeff(int n) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator*(const Rational& s) const;
    LaurentSeries operator-() const;

    LaurentSeries reciprocal() const;
    LaurentSeries pow(int e) const;
    // Multiply by x^k.
    LaurentSeries shift(int k) const;
    LaurentSeries truncate(int new_order) const;

    // Equality of the overlapping known range (orders may differ).
    bool same_series(const LaurentSeries& o) const;

  private:
    LaurentSeries(int valuation, std::vector<Rational> coeffs, int order);
    void normalize();
    int val_ = 0;
    int order_ = 0;
    std::vector<Rational> c_;  // size order_ - val_
};

inline LaurentSeries operator*(const Rational& s, const LaurentSeries& a) { return a * s; }

// e^{c*lambda} truncated at `order` (exclusive).
LaurentSeries exp_series(const Rational& c, int order);
// The asymptotic gauge x = e^{-lambda}.
LaurentSeries gauge_series(int order);
// u(eps) = -ln(1-eps)/eps = sum eps^n/(n+1).
LaurentSeries log_factor_series(int order);

}  // namespace rsum
