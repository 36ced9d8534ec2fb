#include "qident/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qident {

const char* var_name(Var v) {
    static const char* names[kVarCount] = {"a", "b", "z", "t"};
    return names[static_cast<int>(v)];
}

std::optional<Var> var_from_name(char c) {
    for (int i = 0; i < kVarCount; ++i)
        if (kVarNames[i] == c) return static_cast<Var>(i);
    return std::nullopt;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.exp[i] = exp[i] + o.exp[i];
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.exp[i] = -exp[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kVarCount; ++i) r.exp[i] = exp[i] - o.exp[i];
    return r;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (int i = 0; i < kVarCount; ++i) {
        if (exp[i] == 0) continue;
        if (any) os << "*";
        os << kVarNames[i];
        if (exp[i] != 1) os << "^" << exp[i];
        any = true;
    }
    return any ? os.str() : "1";
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

LaurentPoly LaurentPoly::variable(Var v, int exponent) {
    Monomial m;
    m[v] = exponent;
    return monomial(Rational(1), m);
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, const Monomial& m) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& coeff, int ea, int eb, int ez, int et) {
    return monomial(coeff, Monomial{{ea, eb, ez, et}});
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.is_unit();
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial " + to_string());
    return terms_.begin()->second;
}

Rational LaurentPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& s) const {
    LaurentPoly r;
    if (s == 0) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
    return r;
}

LaurentPoly LaurentPoly::operator/(const Rational& s) const {
    if (s == 0) throw DivisionByZero("polynomial divided by rational zero");
    return *this * (Rational(1) / s);
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) {
        if (!is_monomial())
            throw InvalidBinding("negative power of a non-monomial polynomial " + to_string());
        const auto& [m, c] = *terms_.begin();
        return monomial(Rational(1) / c, m.inverse()).pow(-n);
    }
    LaurentPoly result(1);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
    if (is_zero()) return LaurentPoly();
    if (d.is_constant()) return *this / d.constant_value();

    // Shift both operands so all exponents are nonnegative, then run plain
    // single-divisor multivariate division. In the Laurent ring the monomial
    // shifts are units, so the quotient just picks up the inverse shift.
    auto min_shift = [](const LaurentPoly& p) {
        Monomial s;
        bool first = true;
        for (const auto& [m, c] : p.terms()) {
            for (int i = 0; i < kVarCount; ++i)
                s.exp[i] = first ? m.exp[i] : std::min(s.exp[i], m.exp[i]);
            first = false;
        }
        return s;
    };
    const Monomial sp = min_shift(*this);
    const Monomial sd = min_shift(d);

    LaurentPoly rem;
    for (const auto& [m, c] : terms_) rem.terms_.emplace(m / sp, c);
    LaurentPoly div;
    for (const auto& [m, c] : d.terms_) div.terms_.emplace(m / sd, c);

    // Leading term = greatest monomial in the canonical order.
    const auto& [dlead_m, dlead_c] = *div.terms_.rbegin();

    LaurentPoly quot;
    while (!rem.is_zero()) {
        const auto& [rlead_m, rlead_c] = *rem.terms_.rbegin();
        Monomial qm = rlead_m / dlead_m;
        if (std::any_of(qm.exp.begin(), qm.exp.end(), [](int e) { return e < 0; }))
            throw NotDivisible("exact_div: " + to_string() + " is not divisible by " +
                               d.to_string());
        Rational qc = rlead_c / dlead_c;
        LaurentPoly qterm = monomial(qc, qm);
        quot += qterm;
        rem -= qterm * div;
    }
    // Undo the shifts: this = q * d with q = quot * sp / sd.
    LaurentPoly shifted;
    for (const auto& [m, c] : quot.terms_) shifted.terms_.emplace(m * (sp / sd), c);
    return shifted;
}

LaurentPoly LaurentPoly::substituted(const std::map<Var, LaurentPoly>& bindings) const {
    LaurentPoly result;
    for (const auto& [m, c] : terms_) {
        LaurentPoly term = monomial(c, Monomial{});
        Monomial residual;
        for (int i = 0; i < kVarCount; ++i) {
            Var v = static_cast<Var>(i);
            int e = m.exp[i];
            if (e == 0) continue;
            auto it = bindings.find(v);
            if (it == bindings.end()) {
                residual[v] = e;
                continue;
            }
            const LaurentPoly& target = it->second;
            if (e < 0 && !target.is_monomial())
                throw InvalidBinding(std::string("negative exponent of ") + var_name(v) +
                                     " with non-invertible binding " + target.to_string());
            term *= target.pow(e);
        }
        result += term * monomial(Rational(1), residual);
    }
    return result;
}

Rational LaurentPoly::evaluated(const std::map<Var, Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational value = c;
        for (int i = 0; i < kVarCount; ++i) {
            int e = m.exp[i];
            if (e == 0) continue;
            Var v = static_cast<Var>(i);
            auto it = point.find(v);
            if (it == point.end())
                throw InvalidBinding(std::string("unbound variable ") + var_name(v) +
                                     " in evaluation");
            const Rational& x = it->second;
            if (e < 0) {
                if (x == 0)
                    throw DivisionByZero(std::string("zero value for ") + var_name(v) +
                                         " at negative exponent");
                value *= Rational(1) / boost::multiprecision::pow(x, -e);
            } else {
                value *= boost::multiprecision::pow(x, e);
            }
        }
        total += value;
    }
    return total;
}

std::pair<int, int> LaurentPoly::exponent_range(Var v) const {
    if (terms_.empty()) return {0, 0};
    int lo = terms_.begin()->first[v], hi = lo;
    for (const auto& [m, c] : terms_) {
        lo = std::min(lo, m[v]);
        hi = std::max(hi, m[v]);
    }
    return {lo, hi};
}

LaurentPoly LaurentPoly::graded_part(Var v, int e) const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) {
        if (m[v] != e) continue;
        Monomial reduced = m;
        reduced[v] = 0;
        r.terms_.emplace(reduced, c);
    }
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading term first: iterate the canonical order descending.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit_m = m.is_unit();
        if (abs_c != 1 || unit_m) {
            os << numerator(abs_c).str();
            if (denominator(abs_c) != 1) os << "/" << denominator(abs_c).str();
            if (!unit_m) os << "*";
        }
        if (!unit_m) os << m.to_string();
        first = false;
    }
    return os.str();
}

}  // namespace qident
