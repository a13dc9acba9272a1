#include "rsum/ramanujan.hpp"

#include "rsum/laurent.hpp"
#include "rsum/numbers.hpp"

#include <utility>

namespace rsum {

namespace {

AsymptoticExpansion split_expansion(const LaurentSeries& s, int pole_order, int tail_order) {
    AsymptoticExpansion e;
    e.pole_order = pole_order;
    e.divergent.resize(pole_order);
    for (int i = 0; i < pole_order; ++i) e.divergent[i] = s.coeff(-pole_order + i);
    e.constant = s.coeff(0);
    e.tail.resize(tail_order);
    for (int i = 1; i <= tail_order; ++i) e.tail[i - 1] = s.coeff(i);
    return e;
}

LaurentSeries eval_poly_at(const Polynomial& p, const LaurentSeries& x, int order) {
    LaurentSeries acc = LaurentSeries::zero(order);
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + LaurentSeries::constant(p.coeff(i), order);
    return acc;
}

}  // namespace

Rational AsymptoticExpansion::coeff(int power) const {
    if (power < -pole_order) return 0;
    if (power < 0) return divergent[power + pole_order];
    if (power == 0) return constant;
    if (power <= static_cast<int>(tail.size())) return tail[power - 1];
    throw std::out_of_range("AsymptoticExpansion::coeff: power beyond recorded tail");
}

std::string to_string(Family f) { return f == Family::power ? "power" : "figurate"; }

std::string to_string(Method m) {
    switch (m) {
        case Method::closed: return "closed";
        case Method::asymptotic: return "asymptotic";
        case Method::intuitive: return "intuitive";
        case Method::regularized: return "regularized";
        case Method::bernoulli: return "bernoulli";
    }
    return "?";
}

AsymptoticExpansion gauge_expand(const RationalGF& g, int order) {
    if (order < g.a())
        throw std::domain_error("gauge_expand: order smaller than the pole order");
    const int w = order + 2;
    LaurentSeries e = gauge_series(w);
    LaurentSeries num = eval_poly_at(g.num(), e, w);
    // (1 - e^{-lambda}) = lambda * unit.
    LaurentSeries unit = (LaurentSeries::constant(1, w) - e).shift(-1);
    LaurentSeries den = unit.pow(g.a());
    if (g.b() > 0) den = den * (LaurentSeries::constant(1, w) + e).pow(g.b());
    LaurentSeries res = (num * den.reciprocal()).shift(-g.a());
    return split_expansion(res, g.a(), order - g.a());
}

AsymptoticExpansion gauge_expand_shifted(Family family, int k, const Rational& m,
                                         int tail_order) {
    if (k < 1) throw std::domain_error("gauge_expand_shifted: k must be >= 1");
    if (tail_order < 0) throw std::domain_error("gauge_expand_shifted: negative tail order");
    const int w = tail_order + k + 2;
    LaurentSeries e = gauge_series(w);
    LaurentSeries num = exp_series(-m, w);
    if (family == Family::power)
        num = num * eval_poly_at(numbers::eulerian_polynomial(k - 1), e, w);
    LaurentSeries unit = (LaurentSeries::constant(1, w) - e).shift(-1);
    LaurentSeries res = (num * unit.pow(k).reciprocal()).shift(-k);
    return split_expansion(res, k, tail_order);
}

Rational closed_power_sum(int k) {
    if (k < 1) throw std::domain_error("closed_power_sum: k must be >= 1");
    Rational b = numbers::bernoulli(k) / k;
    return (k % 2 == 0) ? -b : b;
}

Rational closed_figurate(int k) {
    if (k < 1) throw std::domain_error("closed_figurate: k must be >= 1");
    return numbers::gregory_coefficient(k, /*signed_form=*/true);
}

Rational smoothed_bernoulli_form(int k, const Rational& m) {
    if (k < 1) throw std::domain_error("smoothed_bernoulli_form: k must be >= 1");
    return numbers::gen_bernoulli_poly(k, k, Rational(k) - m) /
           Rational(factorial(static_cast<unsigned>(k)));
}

Rational intuitive_solve_power(int k) {
    if (k < 1) throw std::domain_error("intuitive_solve_power: k must be >= 1");
    Rational two_k(int_pow(2, static_cast<unsigned>(k)));
    Rational abel = numbers::eulerian_polynomial(k - 1).eval(-1) / two_k;
    return abel / (1 - two_k);
}

Rational intuitive_solve_figurate(int k, std::span<const Rational> memo) {
    if (k < 1) throw std::domain_error("intuitive_solve_figurate: k must be >= 1");
    if (static_cast<int>(memo.size()) < k - 1)
        throw std::domain_error("intuitive_solve_figurate: memo must hold sums for all orders below k");
    Decomposition d = figurate_difference_decompose(k);
    Rational rhs(Int(1), int_pow(2, static_cast<unsigned>(k)));
    Rational dk = 0;
    for (const auto& [j, dj] : d.terms) {
        if (j == k)
            dk = dj;
        else
            rhs += dj * memo[j - 1];
    }
    return rhs / (1 - dk);
}

Rational intuitive_solve(Family family, int k) {
    if (family == Family::power) return intuitive_solve_power(k);
    std::vector<Rational> memo;
    for (int j = 1; j <= k; ++j) memo.push_back(intuitive_solve_figurate(j, memo));
    return memo.back();
}

Rational intuitive_general(const Polynomial& F, int k, const Rational& a1, const Rational& a2) {
    if (a1 == 1) throw std::domain_error("intuitive_general: a1 = 1 leaves the sum undetermined");
    Rational abel = F.eval(-1) / Rational(int_pow(2, static_cast<unsigned>(k)));
    return (abel + a2) / (1 - a1);
}

RegularizationReport regularization_check(int k, int order) {
    if (k < 1) throw std::domain_error("regularization_check: k must be >= 1");
    if (order < k + 2) throw std::domain_error("regularization_check: order must be >= k + 2");
    // Series side: (1-eps) P_{k-1}(1-eps) eps^{-k}, exact polynomial over eps^{-k}.
    Polynomial p_shift = numbers::eulerian_polynomial(k - 1).shifted(1).scale_argument(-1);
    Polynomial series_poly = Polynomial::one_minus_x() * p_shift;
    LaurentSeries series_side = LaurentSeries::from_polynomial(series_poly, order).shift(-k);
    // Comparator: (k-1)! eps^{-k} u(eps)^{-k}, u = -ln(1-eps)/eps.
    LaurentSeries comparator =
        (log_factor_series(order).pow(-k) * Rational(factorial(static_cast<unsigned>(k - 1))))
            .shift(-k);
    RegularizationReport r;
    r.k = k;
    for (int p = -k; p < 0; ++p) {
        r.series_divergent.push_back(series_side.coeff(p));
        r.comparator_divergent.push_back(comparator.coeff(p));
        if (r.series_divergent.back() != r.comparator_divergent.back())
            throw ConsistencyError("regularization_check: divergent terms failed to cancel at eps^" +
                                   std::to_string(p));
    }
    r.constant = series_side.coeff(0) - comparator.coeff(0);
    return r;
}

Polynomial shift_constant_poly(int k) {
    if (k < 1) throw std::domain_error("shift_constant_poly: k must be >= 1");
    Polynomial k_minus_m{Rational(k), Rational(-1)};
    return numbers::gen_bernoulli_poly_sym(k, k, k_minus_m) /
           Rational(factorial(static_cast<unsigned>(k)));
}

RationalGF family_genfunc(Family family, int k, int m) {
    if (k < 1 || m < 0) throw std::domain_error("family_genfunc: bad arguments");
    Polynomial num = Polynomial::monomial(m);
    if (family == Family::power) num = num * numbers::eulerian_polynomial(k - 1);
    return RationalGF(std::move(num), k, 0);
}

SmoothedSum smoothed_sum(Family family, int k, const Rational& m, Method method) {
    if (k < 1) throw std::domain_error("smoothed_sum: k must be >= 1");
    SmoothedSum out;
    out.method = method;
    switch (method) {
        case Method::closed:
            if (family == Family::power) {
                if (m != 1) throw std::domain_error("smoothed_sum: power closed form requires m = 1");
                out.value = closed_power_sum(k);
            } else {
                out.value = (m == 1) ? closed_figurate(k) : smoothed_bernoulli_form(k, m);
            }
            break;
        case Method::asymptotic: {
            AsymptoticExpansion e = gauge_expand_shifted(family, k, m, k + 6);
            out.value = e.constant;
            out.expansion = std::move(e);
            break;
        }
        case Method::intuitive: {
            if (m != 1) throw std::domain_error("smoothed_sum: intuitive method requires m = 1");
            if (family == Family::power) {
                out.value = intuitive_solve_power(k);
            } else {
                std::vector<Rational> memo;
                for (int j = 1; j <= k; ++j) memo.push_back(intuitive_solve_figurate(j, memo));
                out.value = memo.back();
                out.intuitive_memo = std::move(memo);
            }
            break;
        }
        case Method::regularized:
            if (family != Family::power)
                throw std::domain_error("smoothed_sum: regularized method applies to the power family");
            if (m != 1) throw std::domain_error("smoothed_sum: regularized method requires m = 1");
            out.value = regularization_check(k, k + 2).constant;
            break;
        case Method::bernoulli:
            if (family != Family::figurate)
                throw std::domain_error("smoothed_sum: bernoulli form applies to the figurate family");
            out.value = smoothed_bernoulli_form(k, m);
            break;
    }
    return out;
}

std::vector<SmoothedSum> smoothed_sum_all(Family family, int k, const Rational& m) {
    std::vector<Method> methods;
    if (family == Family::power) {
        if (m == 1)
            methods = {Method::closed, Method::asymptotic, Method::intuitive, Method::regularized};
        else
            methods = {Method::asymptotic};
    } else {
        if (m == 1)
            methods = {Method::closed, Method::asymptotic, Method::intuitive, Method::bernoulli};
        else
            methods = {Method::closed, Method::asymptotic, Method::bernoulli};
    }
    std::vector<SmoothedSum> out;
    for (Method method : methods) out.push_back(smoothed_sum(family, k, m, method));
    for (const auto& s : out)
        if (s.value != out.front().value)
            throw ConsistencyError("smoothed_sum_all: methods disagree for " + to_string(family) +
                                   " k=" + std::to_string(k) + ": " + to_string(out.front().method) +
                                   "=" + to_string(out.front().value) + " vs " +
                                   to_string(s.method) + "=" + to_string(s.value));
    return out;
}

}  // namespace rsum
