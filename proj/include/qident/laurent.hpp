#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>

#include "qident/rational.hpp"

namespace qident {

// The fixed variable universe. Every polynomial lives in the Laurent ring
// Q[a^+-1, b^+-1, z^+-1, t^+-1]; variables a term does not use have
// exponent 0.
enum class Var : int { a = 0, b = 1, z = 2, t = 3 };

inline constexpr int kVarCount = 4;
inline constexpr std::array<char, kVarCount> kVarNames = {'a', 'b', 'z', 't'};

const char* var_name(Var v);
std::optional<Var> var_from_name(char c);

// Exponent vector over {a, b, z, t}. Exponents may be negative. The total
// order is lexicographic on the fixed variable order and is the canonical
// order used for normalized storage and serialization.
struct Monomial {
    std::array<int, kVarCount> exp{0, 0, 0, 0};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    int operator[](Var v) const { return exp[static_cast<int>(v)]; }
    int& operator[](Var v) { return exp[static_cast<int>(v)]; }

    bool is_unit() const { return exp == std::array<int, kVarCount>{0, 0, 0, 0}; }

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    // Componentwise quotient; always defined in a Laurent ring.
    Monomial operator/(const Monomial& o) const;

    std::string to_string() const;
};

// Multivariate Laurent polynomial with rational coefficients, kept in
// canonical form: no stored coefficient is zero, terms ordered by Monomial.
// Values are immutable in spirit; all operations return fresh polynomials.
class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}

    static LaurentPoly variable(Var v, int exponent = 1);
    static LaurentPoly monomial(const Rational& coeff, const Monomial& m);
    static LaurentPoly monomial(const Rational& coeff, int ea, int eb, int ez, int et);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True when the polynomial is a rational constant (possibly zero).
    bool is_constant() const;
    // True when there is exactly one term (a unit of the Laurent ring).
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }

    Rational constant_value() const;  // requires is_constant()
    const TermMap& terms() const { return terms_; }
    Rational coeff(const Monomial& m) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly operator*(const Rational& s) const;
    LaurentPoly operator/(const Rational& s) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    // Nonnegative power by repeated squaring.
    LaurentPoly pow(int n) const;

    // Exact division: returns r with r*d == *this, throws NotDivisible when
    // no such Laurent polynomial exists. d must be nonzero.
    LaurentPoly exact_div(const LaurentPoly& d) const;

    // Simultaneous substitution. A variable bound to a non-monomial may only
    // appear with nonnegative exponents (InvalidBinding otherwise); monomial
    // and scalar bindings always qualify.
    LaurentPoly substituted(const std::map<Var, LaurentPoly>& bindings) const;

    // Full evaluation at a rational point. Every variable with a nonzero
    // exponent must be bound (InvalidBinding) and negative exponents need a
    // nonzero value (DivisionByZero).
    Rational evaluated(const std::map<Var, Rational>& point) const;

    // Degree range of a single variable across all terms; [0,0] for zero.
    std::pair<int, int> exponent_range(Var v) const;

    // Terms whose exponent of v equals e, with that variable divided out.
    LaurentPoly graded_part(Var v, int e) const;

    std::string to_string() const;

  private:
    void add_term(const Monomial& m, const Rational& c);

    TermMap terms_;
};

inline LaurentPoly operator*(const Rational& s, const LaurentPoly& p) { return p * s; }

}  // namespace qident
