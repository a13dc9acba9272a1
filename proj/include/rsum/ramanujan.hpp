#pragma once

#include "rsum/genfunc.hpp"
#include "rsum/polynomial.hpp"
#include "rsum/rational.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsum {

// Internal-consistency failure: independent computation paths disagreed.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Laurent expansion in the gauge variable lambda (x = e^{-lambda}), split
// into divergent part, constant, and regular tail. Divergent coefficients
// are stored explicitly, zeros included, so vanishing can be asserted.
struct AsymptoticExpansion {
    int pole_order = 0;                // number of divergent slots
    std::vector<Rational> divergent;   // powers -pole_order .. -1
    Rational constant;
    std::vector<Rational> tail;        // powers 1 .. tail.size()

    Rational coeff(int power) const;   // any represented lambda power
};

enum class Family { power, figurate };
enum class Method { closed, asymptotic, intuitive, regularized, bernoulli };

std::string to_string(Family f);
std::string to_string(Method m);

struct SmoothedSum {
    Rational value;
    Method method;
    std::optional<AsymptoticExpansion> expansion;  // asymptotic diagnostics
    std::vector<Rational> intuitive_memo;          // progressive figurate ledger
};

// Substitute x = e^{-lambda} into g. The result covers lambda powers
// -g.a() .. order - g.a(); requires order >= g.a().
AsymptoticExpansion gauge_expand(const RationalGF& g, int order);

// Gauge expansion of x^m * P_{k-1}(x)/(1-x)^k (power family) or
// x^m/(1-x)^k (figurate family) with a rational shift m, carried as the
// exact factor e^{-m lambda}. Tail computed through lambda^tail_order.
AsymptoticExpansion gauge_expand_shifted(Family family, int k, const Rational& m,
                                         int tail_order);

// (-1)^{k-1} B_k / k.
Rational closed_power_sum(int k);
// Gbar_k = (-1)^k G_k.
Rational closed_figurate(int k);
// B_k^{(k)}(k-m)/k!.
Rational smoothed_bernoulli_form(int k, const Rational& m);

// Twist-and-difference solver. The power family closes in one step; the
// figurate family needs the smoothed sums for all orders below k
// (memo[j-1] = sum for order j).
Rational intuitive_solve_power(int k);
Rational intuitive_solve_figurate(int k, std::span<const Rational> memo);
// Progressive form: recomputes the ledger from k = 1 upward.
Rational intuitive_solve(Family family, int k);

// User-supplied instance of the twist-and-difference algebra:
// c = (F(-1)/2^k + a2) / (1 - a1).
Rational intuitive_general(const Polynomial& F, int k, const Rational& a1, const Rational& a2);

struct RegularizationReport {
    int k;
    Rational constant;
    // epsilon-expansion divergent coefficients (powers -k..-1) of the series
    // side and the logarithmic comparator; they must agree slot for slot.
    std::vector<Rational> series_divergent;
    std::vector<Rational> comparator_divergent;
};

// Expands x P_{k-1}(x)/(1-x)^k and (k-1)!/(-ln x)^k in eps = 1-x, checks the
// divergent parts cancel exactly, and returns the finite difference,
// which equals (-1)^{k-1} B_k / k. Requires order >= k + 2.
RegularizationReport regularization_check(int k, int order);

// B_k^{(k)}(k-m)/k! as an exact polynomial in the shift parameter m.
Polynomial shift_constant_poly(int k);

// Dispatch over the computation paths. intuitive and regularized require
// m = 1; regularized is power-family only.
SmoothedSum smoothed_sum(Family family, int k, const Rational& m, Method method);

// Every method applicable to (family, k, m); throws ConsistencyError if the
// values disagree.
std::vector<SmoothedSum> smoothed_sum_all(Family family, int k, const Rational& m);

// Canonical generating function of the family at integer shift m >= 0.
RationalGF family_genfunc(Family family, int k, int m);

}  // namespace rsum
