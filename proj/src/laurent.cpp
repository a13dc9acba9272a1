#include "rsum/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsum {

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs)
    : val_(valuation), order_(valuation + static_cast<int>(coeffs.size())), c_(std::move(coeffs)) {
    normalize();
}

LaurentSeries::LaurentSeries(int valuation, std::vector<Rational> coeffs, int order)
    : val_(valuation), order_(order), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != order_ - val_)
        throw std::logic_error("LaurentSeries: coefficient count mismatch");
    normalize();
}

void LaurentSeries::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = order_;
    } else if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        val_ += static_cast<int>(lead);
    }
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(order, {}, order); }

LaurentSeries LaurentSeries::constant(const Rational& c, int order) {
    if (order < 1) throw std::domain_error("LaurentSeries::constant: order must be >= 1");
    std::vector<Rational> v(order, Rational(0));
    v[0] = c;
    return LaurentSeries(0, std::move(v), order);
}

LaurentSeries LaurentSeries::monomial(int power, const Rational& coeff, int order) {
    if (power >= order) throw std::domain_error("LaurentSeries::monomial: power beyond order");
    std::vector<Rational> v(order - power, Rational(0));
    v[0] = coeff;
    return LaurentSeries(power, std::move(v), order);
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p, int order) {
    if (order < 1) throw std::domain_error("LaurentSeries::from_polynomial: order must be >= 1");
    std::vector<Rational> v(order, Rational(0));
    for (int i = 0; i < std::min(order, p.degree() + 1); ++i) v[i] = p.coeff(i);
    if (p.degree() >= order)
        throw std::domain_error("LaurentSeries::from_polynomial: polynomial degree beyond order");
    return LaurentSeries(0, std::move(v), order);
}

Rational LaurentSeries::coeff(int n) const {
    if (n >= order_) throw std::out_of_range("LaurentSeries::coeff: coefficient beyond truncation order");
    if (n < val_) return 0;
    return c_[n - val_];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    int order = std::min(order_, o.order_);
    int lo = std::min(val_, o.val_);
    if (lo >= order) return zero(order);
    std::vector<Rational> v(order - lo, Rational(0));
    for (int n = val_; n < std::min(order_, order); ++n) v[n - lo] += c_[n - val_];
    for (int n = o.val_; n < std::min(o.order_, order); ++n) v[n - lo] += o.c_[n - o.val_];
    return LaurentSeries(lo, std::move(v), order);
}

LaurentSeries LaurentSeries::operator-() const {
    std::vector<Rational> v(c_.size());
    std::transform(c_.begin(), c_.end(), v.begin(), [](const Rational& q) { return -q; });
    return LaurentSeries(val_, std::move(v), order_);
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    int order = std::min(order_ + o.val_, o.order_ + val_);
    if (is_zero() || o.is_zero()) return zero(order);
    int lo = val_ + o.val_;
    std::vector<Rational> v(order - lo, Rational(0));
    for (int i = val_; i < order_; ++i) {
        if (c_[i - val_] == 0) continue;
        for (int j = o.val_; j < o.order_ && i + j < order; ++j)
            v[i + j - lo] += c_[i - val_] * o.c_[j - o.val_];
    }
    return LaurentSeries(lo, std::move(v), order);
}

LaurentSeries LaurentSeries::operator*(const Rational& s) const {
    if (s == 0) return zero(order_);
    std::vector<Rational> v(c_.size());
    std::transform(c_.begin(), c_.end(), v.begin(), [&](const Rational& q) { return q * s; });
    return LaurentSeries(val_, std::move(v), order_);
}

LaurentSeries LaurentSeries::reciprocal() const {
    if (is_zero()) throw std::domain_error("LaurentSeries::reciprocal: zero series");
    // s = x^v * u with u a unit; invert u by the convolution recursion.
    const int n = order_ - val_;
    std::vector<Rational> r(n, Rational(0));
    r[0] = Rational(1) / c_[0];
    for (int k = 1; k < n; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[j] * r[k - j];
        r[k] = -acc / c_[0];
    }
    return LaurentSeries(-val_, std::move(r), -val_ + n);
}

LaurentSeries LaurentSeries::pow(int e) const {
    if (e == 0) return constant(1, std::max(1, order_ - val_));
    if (e < 0) return reciprocal().pow(-e);
    LaurentSeries base = *this;
    LaurentSeries result = constant(1, std::max(1, order_ - val_));
    unsigned ue = static_cast<unsigned>(e);
    bool have = false;
    while (ue) {
        if (ue & 1u) {
            result = have ? result * base : base;
            have = true;
        }
        ue >>= 1u;
        if (ue) base = base * base;
    }
    return result;
}

LaurentSeries LaurentSeries::shift(int k) const {
    std::vector<Rational> v = c_;
    return LaurentSeries(val_ + k, std::move(v), order_ + k);
}

LaurentSeries LaurentSeries::truncate(int new_order) const {
    if (new_order > order_)
        throw std::out_of_range("LaurentSeries::truncate: cannot extend truncation order");
    if (new_order <= val_) return zero(new_order);
    std::vector<Rational> v(c_.begin(), c_.begin() + (new_order - val_));
    return LaurentSeries(val_, std::move(v), new_order);
}

bool LaurentSeries::same_series(const LaurentSeries& o) const {
    int order = std::min(order_, o.order_);
    for (int n = std::min(val_, o.val_); n < order; ++n)
        if (coeff(n) != o.coeff(n)) return false;
    return true;
}

LaurentSeries exp_series(const Rational& c, int order) {
    if (order < 1) throw std::domain_error("exp_series: order must be >= 1");
    std::vector<Rational> v(order);
    v[0] = 1;
    for (int n = 1; n < order; ++n) v[n] = v[n - 1] * c / n;
    return LaurentSeries(0, std::move(v));
}

LaurentSeries gauge_series(int order) { return exp_series(-1, order); }

LaurentSeries log_factor_series(int order) {
    if (order < 1) throw std::domain_error("log_factor_series: order must be >= 1");
    std::vector<Rational> v(order);
    for (int n = 0; n < order; ++n) v[n] = Rational(1, n + 1);
    return LaurentSeries(0, std::move(v));
}

}  // namespace rsum
