#include "rsum/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsum {

Polynomial Polynomial::monomial(int power, const Rational& coeff) {
    if (power < 0) throw std::domain_error("Polynomial::monomial: negative power");
    if (coeff == 0) return {};
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = coeff;
    return Polynomial(std::move(c));
}

int Polynomial::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(c_.size());
    std::transform(c_.begin(), c_.end(), c.begin(), [](const Rational& q) { return -q; });
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    std::transform(c_.begin(), c_.end(), c.begin(), [&](const Rational& q) { return q * s; });
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator/(const Rational& s) const {
    if (s == 0) throw std::domain_error("Polynomial: division by zero scalar");
    return *this * Rational(den(s), num(s));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::shifted(const Rational& c) const {
    // Repeated synthetic division by (x - c); after pass k, work[k] holds the
    // coefficient of t^k in p(c + t).
    std::vector<Rational> work = c_;
    const std::size_t n = work.size();
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = n - 1; i-- > k;) work[i] += c * work[i + 1];
    return Polynomial(std::move(work));
}

Polynomial Polynomial::compose_square() const {
    if (is_zero()) return {};
    std::vector<Rational> c(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[2 * i] = c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    Rational p = 1;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        c[i] = c_[i] * p;
        p *= s;
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial r{Rational(1)};
    Polynomial b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& o) const {
    if (o.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    if (is_zero()) return Polynomial{};
    if (degree() < o.degree()) return std::nullopt;
    std::vector<Rational> rem = c_;
    std::vector<Rational> quot(c_.size() - o.c_.size() + 1, Rational(0));
    const Rational& lead = o.c_.back();
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        Rational q = rem[i + o.degree()] / lead;
        quot[i] = q;
        for (int j = 0; j <= o.degree(); ++j) rem[i + j] -= q * o.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return Polynomial(std::move(quot));
}

}  // namespace rsum
