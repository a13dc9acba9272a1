#pragma once

#include "rsum/rational.hpp"

#include <initializer_list>
#include <optional>
#include <vector>

namespace rsum {

// Dense univariate polynomial over Rational. Zero polynomial has an empty
// coefficient vector; otherwise the top coefficient is nonzero.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(const Rational& constant) : c_{constant} { trim(); }

    static Polynomial monomial(int power, const Rational& coeff = 1);
    static Polynomial one_minus_x() { return Polynomial{Rational(1), Rational(-1)}; }
    static Polynomial one_plus_x() { return Polynomial{Rational(1), Rational(1)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    // Zero outside the stored range.
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Lowest power with a nonzero coefficient; -1 for the zero polynomial.
    int low_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;
    Polynomial operator/(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    Rational eval(const Rational& x) const;
    Polynomial derivative() const;
    // Coefficients of p(c + t) as a polynomial in t (repeated Ruffini division).
    Polynomial shifted(const Rational& c) const;
    // p(x^2).
    Polynomial compose_square() const;
    // p(s*x), s a scalar.
    Polynomial scale_argument(const Rational& s) const;
    Polynomial pow(unsigned e) const;

    // Quotient if o divides *this exactly, nullopt otherwise.
    std::optional<Polynomial> divide_exact(const Polynomial& o) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

}  // namespace rsum
