#include "rsum/numbers.hpp"

#include "rsum/laurent.hpp"

#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rsum::numbers {

namespace {

std::mutex cache_mutex;

std::set<std::pair<std::string, int>> faults;

bool faulted(const char* family, int index) {
    return faults.count({family, index}) != 0;
}

// Reciprocal coefficients of sum t^k/(k+1)! ( = (e^t-1)/t ); B_n = n! * recip[n].
std::vector<Rational>& bernoulli_base(int n) {
    static std::vector<Rational> recip{Rational(1)};
    while (static_cast<int>(recip.size()) <= n) {
        int k = static_cast<int>(recip.size());
        Rational acc = 0;
        Rational inv_fact = 1;  // 1/(j+1)! built incrementally
        for (int j = 1; j <= k; ++j) {
            inv_fact /= j + 1;
            acc += inv_fact * recip[k - j];
        }
        recip.push_back(-acc);
    }
    return recip;
}

std::vector<Polynomial>& eulerian_rows(int n) {
    static std::vector<Polynomial> rows{Polynomial{Rational(1)}};
    while (static_cast<int>(rows.size()) <= n) {
        int r = static_cast<int>(rows.size());
        const Polynomial& prev = rows.back();
        std::vector<Rational> row(std::max(1, r), Rational(0));
        for (int m = 0; m < static_cast<int>(row.size()); ++m)
            row[m] = Rational(m + 1) * prev.coeff(m) + Rational(r - m) * prev.coeff(m - 1);
        rows.emplace_back(std::move(row));
    }
    return rows;
}

std::vector<Rational>& gregory_signed(int n) {
    static std::vector<Rational> g{Rational(1)};
    while (static_cast<int>(g.size()) <= n) {
        int i = static_cast<int>(g.size());
        Rational acc = 0;
        for (int k = 1; k <= i; ++k) acc += g[i - k] / (k + 1);
        g.push_back(-acc);
    }
    return g;
}

// Gbar_m^{(u)} polynomials in u.
std::vector<Polynomial>& gregory_poly_rows(int m) {
    static std::vector<Polynomial> rows{Polynomial{Rational(1)},
                                        Polynomial{Rational(0), Rational(-1, 2)}};
    while (static_cast<int>(rows.size()) <= m) {
        int i = static_cast<int>(rows.size()) - 1;  // building Gbar_{i+1}
        Polynomial next{Rational(0), Rational(Int(-1), Int(i + 2))};
        Polynomial acc;
        for (int n = 1; n <= i; ++n) {
            Polynomial weight{Rational(Int(n), Int(i - n + 2)), Rational(Int(i - n + 1), Int(i - n + 2))};
            acc = acc + weight * rows[n];
        }
        next = next - acc / Rational(i + 1);
        rows.push_back(next);
    }
    return rows;
}

std::map<int, std::vector<Rational>>& ext_gregory_table() {
    static std::map<int, std::vector<Rational>> table;
    return table;
}

const std::vector<Rational>& ext_gregory_row(int s, int n) {
    auto& row = ext_gregory_table()[s];
    if (row.empty()) row.push_back(Rational(1));
    while (static_cast<int>(row.size()) <= n) {
        int i = static_cast<int>(row.size());
        Rational acc = 0;
        for (int k = 1; k <= i; ++k) acc += row[i - k] / Rational(int_pow(Int(k + 1), s));
        row.push_back(-acc);
    }
    return row;
}

// Coefficients of (t/(e^t-1))^k; sign of k selects the series or its reciprocal.
std::map<int, std::vector<Rational>>& gen_bernoulli_table() {
    static std::map<int, std::vector<Rational>> table;
    return table;
}

const std::vector<Rational>& gen_bernoulli_base(int k, int n) {
    auto& coeffs = gen_bernoulli_table()[k];
    if (static_cast<int>(coeffs.size()) <= n) {
        int order = n + 1;
        // base = sum t^j/(j+1)!  ( = (e^t-1)/t ), then raise to -k.
        std::vector<Rational> base(order);
        Rational inv_fact = 1;
        for (int j = 0; j < order; ++j) {
            inv_fact /= j + 1;
            base[j] = inv_fact;
        }
        LaurentSeries s(0, std::move(base));
        LaurentSeries powed = s.pow(-k);
        coeffs.clear();
        for (int j = 0; j < order; ++j) coeffs.push_back(powed.coeff(j));
    }
    return coeffs;
}

Rational bernoulli_unlocked(int n) {
    Rational b = bernoulli_base(n)[n] * Rational(factorial(static_cast<unsigned>(n)));
    if (faulted("bernoulli", n)) b += 1;
    return b;
}

}  // namespace

Rational bernoulli(int n) {
    if (n < 0) throw std::domain_error("bernoulli: n must be >= 0");
    std::lock_guard lock(cache_mutex);
    return bernoulli_unlocked(n);
}

Polynomial eulerian_polynomial(int n) {
    if (n < 0) throw std::domain_error("eulerian_polynomial: n must be >= 0");
    std::lock_guard lock(cache_mutex);
    Polynomial p = eulerian_rows(n)[n];
    if (faulted("eulerian", n)) p = p + Polynomial{Rational(1)};
    return p;
}

Rational eulerian_derivative_at_one(int u, int m) {
    if (u < 0 || m < 0) throw std::domain_error("eulerian_derivative_at_one: negative index");
    Polynomial p = eulerian_polynomial(u);
    for (int i = 0; i < m; ++i) p = p.derivative();
    return p.eval(1);
}

Rational gregory_coefficient(int n, bool signed_form) {
    if (n < 0) throw std::domain_error("gregory_coefficient: n must be >= 0");
    std::lock_guard lock(cache_mutex);
    Rational gbar = gregory_signed(n)[n];
    if (faulted("gregory", n)) gbar += 1;
    if (signed_form) return gbar;
    return (n % 2 == 0) ? gbar : -gbar;
}

Rational GregoryPolynomial::eval(const Rational& u) const {
    if (divide_by_u) {
        if (u == 0) throw std::domain_error("GregoryPolynomial: G_0 undefined at u = 0");
        return poly.eval(u) / u;
    }
    return poly.eval(u);
}

GregoryPolynomial gregory_polynomial(int m) {
    if (m < 0) throw std::domain_error("gregory_polynomial: m must be >= 0");
    if (m == 0) return GregoryPolynomial{0, Polynomial{Rational(1)}, true};
    std::lock_guard lock(cache_mutex);
    const Polynomial& gbar = gregory_poly_rows(m)[m];
    // Gbar_m^{(u)} is divisible by u for m >= 1.
    if (gbar.coeff(0) != 0)
        throw std::logic_error("gregory_polynomial: expected zero constant term");
    std::vector<Rational> shifted(gbar.coeffs().begin() + 1, gbar.coeffs().end());
    return GregoryPolynomial{m, Polynomial(std::move(shifted)), false};
}

Rational gregory_polynomial_eval(int m, const Rational& u) {
    return gregory_polynomial(m).eval(u);
}

Rational extended_gregory(int s, int n) {
    if (s < 1) throw std::domain_error("extended_gregory: s must be >= 1");
    if (n < 0) throw std::domain_error("extended_gregory: n must be >= 0");
    std::lock_guard lock(cache_mutex);
    return ext_gregory_row(s, n)[n];
}

Int hirzebruch(int k) {
    if (k < 0) throw std::domain_error("hirzebruch: k must be >= 0");
    Int h = 1;
    for (int p = 2; p <= k + 1; ++p) {
        bool prime = p >= 2;
        for (int q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (prime) h *= int_pow(Int(p), static_cast<unsigned>(k / (p - 1)));
    }
    return h;
}

Rational gen_bernoulli_number(int n, int k) {
    if (n < 0) throw std::domain_error("gen_bernoulli_number: n must be >= 0");
    std::lock_guard lock(cache_mutex);
    return gen_bernoulli_base(k, n)[n] * Rational(factorial(static_cast<unsigned>(n)));
}

Rational gen_bernoulli_poly(int n, int k, const Rational& x) {
    if (n < 0) throw std::domain_error("gen_bernoulli_poly: n must be >= 0");
    std::lock_guard lock(cache_mutex);
    const auto& base = gen_bernoulli_base(k, n);
    Rational acc = 0;
    Rational xpow_over_fact = 1;  // x^j / j!
    for (int j = 0; j <= n; ++j) {
        acc += base[n - j] * xpow_over_fact;
        xpow_over_fact = xpow_over_fact * x / (j + 1);
    }
    return acc * Rational(factorial(static_cast<unsigned>(n)));
}

Polynomial gen_bernoulli_poly_sym(int n, int k, const Polynomial& arg) {
    if (n < 0) throw std::domain_error("gen_bernoulli_poly_sym: n must be >= 0");
    std::lock_guard lock(cache_mutex);
    const auto& base = gen_bernoulli_base(k, n);
    Polynomial acc;
    Polynomial argpow{Rational(1)};
    Rational inv_fact = 1;
    for (int j = 0; j <= n; ++j) {
        acc = acc + argpow * (base[n - j] * inv_fact);
        argpow = argpow * arg;
        inv_fact /= j + 1;
    }
    return acc * Rational(factorial(static_cast<unsigned>(n)));
}

void inject_fault(const std::string& family, int index) {
    std::lock_guard lock(cache_mutex);
    faults.insert({family, index});
}

void clear_faults() {
    std::lock_guard lock(cache_mutex);
    faults.clear();
}

}  // namespace rsum::numbers
