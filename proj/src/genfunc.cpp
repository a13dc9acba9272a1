#include "rsum/genfunc.hpp"

#include "rsum/laurent.hpp"

#include <algorithm>

namespace rsum {

RationalGF::RationalGF(Polynomial num, int a, int b) : num_(std::move(num)), a_(a), b_(b) {
    if (a < 0 || b < 0) throw std::domain_error("RationalGF: negative pole order");
    canonicalize();
}

void RationalGF::canonicalize() {
    if (num_.is_zero()) {
        a_ = b_ = 0;
        return;
    }
    const Polynomial omx = Polynomial::one_minus_x();
    const Polynomial opx = Polynomial::one_plus_x();
    while (a_ > 0) {
        auto q = num_.divide_exact(omx);
        if (!q) break;
        num_ = *q;
        --a_;
    }
    while (b_ > 0) {
        auto q = num_.divide_exact(opx);
        if (!q) break;
        num_ = *q;
        --b_;
    }
}

std::vector<Rational> taylor_coeffs(const RationalGF& g, int n) {
    if (n < 1) throw std::domain_error("taylor_coeffs: n must be >= 1");
    std::vector<Rational> out(n, Rational(0));
    if (g.is_zero()) return out;
    int w = std::max(n, g.num().degree() + 1);
    LaurentSeries s = LaurentSeries::from_polynomial(g.num(), w + 1);
    if (g.a() > 0)
        s = s * LaurentSeries::from_polynomial(Polynomial::one_minus_x(), w + 1).pow(-g.a());
    if (g.b() > 0)
        s = s * LaurentSeries::from_polynomial(Polynomial::one_plus_x(), w + 1).pow(-g.b());
    for (int i = 0; i < n; ++i) out[i] = s.coeff(i);
    return out;
}

RationalGF twist(const RationalGF& g) {
    if (g.is_zero()) return g;
    Polynomial num = g.num().scale_argument(-1);
    if (g.num().low_degree() % 2 != 0) num = -num;
    return RationalGF(std::move(num), g.b(), g.a());
}

RationalGF gf_add(const RationalGF& g1, const RationalGF& g2) {
    int a = std::max(g1.a(), g2.a());
    int b = std::max(g1.b(), g2.b());
    const Polynomial omx = Polynomial::one_minus_x();
    const Polynomial opx = Polynomial::one_plus_x();
    Polynomial n1 = g1.num() * omx.pow(a - g1.a()) * opx.pow(b - g1.b());
    Polynomial n2 = g2.num() * omx.pow(a - g2.a()) * opx.pow(b - g2.b());
    return RationalGF(n1 + n2, a, b);
}

RationalGF gf_sub(const RationalGF& g1, const RationalGF& g2) {
    return gf_add(g1, RationalGF(-g2.num(), g2.a(), g2.b()));
}

Decomposition figurate_difference_decompose(int k) {
    if (k < 1) throw std::domain_error("figurate_difference_decompose: k must be >= 1");
    // x/(1-x)^k - x/(1+x)^k = x^2 Q(x^2)/(1-x^2)^k with
    // Q(y) = 2 sum over odd i <= k of C(k,i) y^{(i-1)/2}.
    std::vector<Rational> qc((k - 1) / 2 + 1, Rational(0));
    for (int i = 1; i <= k; i += 2) qc[(i - 1) / 2] = Rational(2 * binomial(k, i));
    Polynomial q{std::move(qc)};
    // Q(y) = sum_j q_j (1-y)^j: expand around y = 1 and flip odd-term signs.
    Polynomial at_one = q.shifted(1);
    Decomposition d;
    for (int j = 0; j <= at_one.degree(); ++j) {
        Rational qj = at_one.coeff(j);
        if (j % 2 != 0) qj = -qj;
        if (qj != 0) d.terms[k - j] = qj;
    }
    return d;
}

Rational abel_value(const RationalGF& g) {
    if (g.a() > 0) throw std::domain_error("abel_value: pole at x = 1");
    return g.num().eval(1) / Rational(int_pow(Int(2), static_cast<unsigned>(g.b())));
}

std::string render_polynomial(const Polynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= p.degree(); ++i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mags = to_string(mag);
        if (i == 0) {
            out += mags;
        } else {
            if (mag != 1) out += mags + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

std::string pole_factor(const std::string& base, int e) {
    if (e == 1) return base;
    return base + "^" + std::to_string(e);
}

bool is_plain_monomial(const Polynomial& p) {
    return p.low_degree() == p.degree() && p.coeff(p.degree()) == 1;
}

}  // namespace

std::string render_genfunc(const RationalGF& g) {
    if (g.is_zero()) return "0";
    std::string num;
    if (is_plain_monomial(g.num())) {
        int d = g.num().degree();
        num = d == 0 ? "1" : (d == 1 ? "x" : "x^" + std::to_string(d));
    } else if (g.a() == 0 && g.b() == 0) {
        return render_polynomial(g.num());
    } else {
        num = "(" + render_polynomial(g.num()) + ")";
    }
    if (g.a() == 0 && g.b() == 0) return num;
    std::string den;
    if (g.a() > 0 && g.b() > 0)
        den = "(" + pole_factor("(1-x)", g.a()) + "*" + pole_factor("(1+x)", g.b()) + ")";
    else if (g.a() > 0)
        den = pole_factor("(1-x)", g.a());
    else
        den = pole_factor("(1+x)", g.b());
    return num + "/" + den;
}

}  // namespace rsum
