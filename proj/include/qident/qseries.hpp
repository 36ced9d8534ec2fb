#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qident/laurent.hpp"

namespace qident {

// Truncated formal series in q with LaurentPoly coefficients.
//
// A series carries a window [lower, order): coefficients are exact for
// lower <= n < order. lower is a valuation bound, so coefficients below it
// are identically zero (and coeff() returns zero there); access at or above
// order raises InsufficientOrder instead of silently returning zero.
// Windows may start at negative exponents; finished identity sides are
// re-checked to have nonnegative valuation via nonneg_trimmed().
class QSeries {
  public:
    QSeries(int lower, int order);  // zero-filled window

    static QSeries zero(int order) { return QSeries(0, order); }
    static QSeries one(int order) { return constant(LaurentPoly(1), order); }
    static QSeries constant(const LaurentPoly& c, int order);
    // c * q^degree
    static QSeries monomial(const LaurentPoly& c, int degree, int order);
    // 1 - c * q^degree, the building block of every Pochhammer product
    static QSeries binomial(const LaurentPoly& c, int degree, int order);

    int lower() const { return lower_; }
    int order() const { return static_cast<int>(lower_ + coeffs_.size()); }

    const LaurentPoly& coeff(int n) const;
    LaurentPoly& coeff_mut(int n);

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;  // truncated Cauchy convolution
    QSeries operator*(const LaurentPoly& c) const;
    QSeries operator*(const Rational& s) const;
    QSeries operator/(const Rational& s) const { return *this * (Rational(1) / s); }

    // Multiply by q^d (pure window shift).
    QSeries shifted(int d) const;
    // Narrow the window from above; newOrder must lie inside (lower, order].
    QSeries truncated(int newOrder) const;
    // Widen the window from below with zeros (sound: lower is a valuation bound).
    QSeries extended_low(int newLower) const;

    // Multiplicative inverse. The coefficient of q^lower must be a nonzero
    // rational constant; the inverse has window [-lower, order - 2*lower).
    QSeries inverted() const;

    // Exact quotient of two series whose leading coefficients may contain
    // variables; every step divides by den's leading coefficient via
    // LaurentPoly::exact_div and throws NotDivisible when the quotient does
    // not exist in the coefficient ring.
    QSeries divided_exact(const QSeries& den) const;

    // Divide every coefficient by a fixed q-degree-0 polynomial, exactly.
    QSeries coeff_divided_exact(const LaurentPoly& d) const;

    // Apply a ring substitution to every coefficient.
    QSeries coeff_substituted(const std::map<Var, LaurentPoly>& bindings) const;

    // q |-> sign * q^power. Coefficient of q^n moves to q^(power*n) scaled by
    // sign^n. target_order (when >= 0) is checked against the reachable
    // window, raising InsufficientOrder if the input cannot cover it.
    QSeries substituted_q(int sign, int power, int target_order = -1) const;

    // Multiply by (1 - c q^m) in O(order) coefficient operations.
    QSeries mul_binomial(const LaurentPoly& c, int m) const;
    // Divide by (1 - c q^m); requires m >= 1, or m == 0 with rational c != 1.
    QSeries div_binomial(const LaurentPoly& c, int m) const;

    // Extract the slice of every coefficient with t-exponent (or any
    // variable's exponent) equal to e, dividing that variable out.
    QSeries coeff_graded_part(Var v, int e) const;

    // Checks that all stored coefficients at negative exponents vanish and
    // returns the series re-windowed to [0, order).
    QSeries nonneg_trimmed() const;

    std::string to_string(int max_terms = 12) const;

  private:
    int lower_;
    std::vector<LaurentPoly> coeffs_;
};

inline QSeries operator*(const LaurentPoly& c, const QSeries& x) { return x * c; }

// Smallest degree in [from, to) where the two series differ, if any.
std::optional<int> first_mismatch(const QSeries& x, const QSeries& y, int from, int to);
bool values_equal(const QSeries& x, const QSeries& y, int from, int to);

// The symbol (c q^m ; q^s): factors (1 - c q^(m + j s)). c is a rational
// multiple of a monomial; s >= 1.
struct PochSpec {
    LaurentPoly c;
    int m = 0;
    int s = 1;
};

// Finite product over j = 0..n-1, truncated at `order`. Negative m is
// allowed; the window's lower bound absorbs the negative factor degrees.
QSeries pochhammer_finite(const PochSpec& spec, int n, int order);

// Infinite product, truncated: only factors with m + j*s < order differ from
// 1 below the truncation. Requires m >= 0 and s >= 1.
QSeries pochhammer_infinite(const PochSpec& spec, int order);

// Sum of term(k) for k = 0, 1, ... while min_degree(k) < order. min_degree
// must be a nondecreasing valuation bound tending to infinity; after the
// cutoff the next two terms are materialized and checked to vanish below
// `order`, raising NonmonotoneCutoff otherwise.
QSeries qs_sum(int order, const std::function<int(int)>& min_degree,
               const std::function<QSeries(int)>& term);

// Bilateral sum over i in [-M, M] with M the smallest bound such that
// min(min_degree(M+1), min_degree(-(M+1))) >= order.
QSeries qs_sum_bilateral(int order, const std::function<int(int)>& min_degree,
                         const std::function<QSeries(int)>& term);

// The generic basic hypergeometric series with base q^s and argument
// t = t_coeff * q^t_exp:
//
//   sum_k  prod_i (n_i; q^s)_k / [ prod_j (d_j; q^s)_k * (q^s; q^s)_k ] * t^k
//
// where each parameter is a rational multiple of a q-power. The sum must
// either terminate (some numerator equals q^(-n*s)) or have t_exp >= 1 so
// term valuations grow; DivergentSeries otherwise.
struct HyperSpec {
    std::vector<std::pair<Rational, int>> numerators;    // (coeff, q-exponent)
    std::vector<std::pair<Rational, int>> denominators;  // (coeff, q-exponent)
    int base_step = 1;
    Rational t_coeff = Rational(1);
    int t_exp = 0;
};

QSeries q_hypergeometric(const HyperSpec& spec, int order);

}  // namespace qident
