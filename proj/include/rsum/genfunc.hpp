#pragma once

#include "rsum/polynomial.hpp"
#include "rsum/rational.hpp"

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsum {

// Rational generating function num(x) / ((1-x)^a (1+x)^b). Canonical form:
// num shares no (1-x) factor while a > 0 and no (1+x) factor while b > 0.
class RationalGF {
  public:
    RationalGF() = default;
    RationalGF(Polynomial num, int a, int b);

    const Polynomial& num() const { return num_; }
    int a() const { return a_; }
    int b() const { return b_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalGF& o) const {
        return num_ == o.num_ && a_ == o.a_ && b_ == o.b_;
    }

  private:
    void canonicalize();
    Polynomial num_;
    int a_ = 0;
    int b_ = 0;
};

// Partial-fraction ledger: value sum_j terms[j] * x^2/(1-x^2)^j.
struct Decomposition {
    std::map<int, Rational> terms;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

struct UnsupportedDenominator : std::domain_error {
    using std::domain_error::domain_error;
};

// Grammar: expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
// factor := '-'? base ('^' integer)?; base := integer | 'x' | '(' expr ')'.
// The denominator must deflate into c*(1-x)^a*(1+x)^b.
RationalGF parse_genfunc(const std::string& text);

// Emits the same grammar parse_genfunc accepts.
std::string render_genfunc(const RationalGF& g);
std::string render_polynomial(const Polynomial& p, const std::string& var = "x");

// First n Taylor coefficients at 0.
std::vector<Rational> taylor_coeffs(const RationalGF& g, int n);

// Alternating counterpart: x -> -x with the sign normalized so the leading
// Taylor coefficient keeps its sign. An involution.
RationalGF twist(const RationalGF& g);

RationalGF gf_add(const RationalGF& g1, const RationalGF& g2);
RationalGF gf_sub(const RationalGF& g1, const RationalGF& g2);

// x/(1-x)^k - x/(1+x)^k as sum_j d_j x^2/(1-x^2)^j.
Decomposition figurate_difference_decompose(int k);

// Evaluation at x = 1; requires no pole there (a = 0).
Rational abel_value(const RationalGF& g);

}  // namespace rsum
