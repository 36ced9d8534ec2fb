#include "qident/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qident {

namespace {
const LaurentPoly kZeroPoly;
}

QSeries::QSeries(int lower, int order) : lower_(lower) {
    if (lower >= order)
        throw EmptyWindow("window [" + std::to_string(lower) + ", " + std::to_string(order) +
                          ") is empty");
    coeffs_.resize(static_cast<std::size_t>(order - lower));
}

QSeries QSeries::constant(const LaurentPoly& c, int order) {
    return monomial(c, 0, order);
}

QSeries QSeries::monomial(const LaurentPoly& c, int degree, int order) {
    QSeries r(std::min(degree, 0), order);
    if (degree < order) r.coeff_mut(degree) = c;
    return r;
}

QSeries QSeries::binomial(const LaurentPoly& c, int degree, int order) {
    QSeries r(std::min(degree, 0), order);
    if (0 < order) r.coeff_mut(0) += LaurentPoly(1);
    if (degree < order) r.coeff_mut(degree) -= c;
    return r;
}

const LaurentPoly& QSeries::coeff(int n) const {
    if (n >= order())
        throw InsufficientOrder("coefficient of q^" + std::to_string(n) +
                                " requested above window order " + std::to_string(order()));
    if (n < lower_) return kZeroPoly;
    return coeffs_[static_cast<std::size_t>(n - lower_)];
}

LaurentPoly& QSeries::coeff_mut(int n) {
    if (n < lower_ || n >= order())
        throw InsufficientOrder("mutable coefficient q^" + std::to_string(n) +
                                " outside window [" + std::to_string(lower_) + ", " +
                                std::to_string(order()) + ")");
    return coeffs_[static_cast<std::size_t>(n - lower_)];
}

QSeries QSeries::operator+(const QSeries& o) const {
    if (std::max(lower_, o.lower_) >= std::min(order(), o.order()))
        throw EmptyWindow("sum of windows [" + std::to_string(lower_) + "," +
                          std::to_string(order()) + ") and [" + std::to_string(o.lower_) + "," +
                          std::to_string(o.order()) + ") has empty intersection");
    int L = std::min(lower_, o.lower_);
    int N = std::min(order(), o.order());
    QSeries r(L, N);
    for (int n = L; n < N; ++n) r.coeff_mut(n) = coeff(n) + o.coeff(n);
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    return *this + (o * Rational(-1));
}

QSeries QSeries::operator*(const QSeries& o) const {
    int L = lower_ + o.lower_;
    int N = std::min(lower_ + o.order(), o.lower_ + order());
    if (L >= N) throw EmptyWindow("product window is empty");
    QSeries r(L, N);
    for (int i = lower_; i < order(); ++i) {
        const LaurentPoly& ci = coeff(i);
        if (ci.is_zero()) continue;
        int jmax = std::min(o.order(), N - i);
        for (int j = o.lower_; j < jmax; ++j) {
            const LaurentPoly& cj = o.coeff(j);
            if (cj.is_zero()) continue;
            r.coeff_mut(i + j) += ci * cj;
        }
    }
    return r;
}

QSeries QSeries::operator*(const LaurentPoly& c) const {
    QSeries r(lower_, order());
    if (c.is_zero()) return r;
    for (int n = lower_; n < order(); ++n) r.coeff_mut(n) = coeff(n) * c;
    return r;
}

QSeries QSeries::operator*(const Rational& s) const {
    return *this * LaurentPoly(s);
}

QSeries QSeries::shifted(int d) const {
    QSeries r = *this;
    r.lower_ += d;
    return r;
}

QSeries QSeries::truncated(int newOrder) const {
    if (newOrder > order())
        throw InsufficientOrder("cannot truncate window [" + std::to_string(lower_) + "," +
                                std::to_string(order()) + ") up to " + std::to_string(newOrder));
    if (newOrder <= lower_) throw EmptyWindow("truncation would empty the window");
    QSeries r(lower_, newOrder);
    for (int n = lower_; n < newOrder; ++n) r.coeff_mut(n) = coeff(n);
    return r;
}

QSeries QSeries::extended_low(int newLower) const {
    if (newLower >= lower_) return *this;
    QSeries r(newLower, order());
    for (int n = lower_; n < order(); ++n) r.coeff_mut(n) = coeff(n);
    return r;
}

QSeries QSeries::inverted() const {
    const LaurentPoly& lead = coeff(lower_);
    if (lead.is_zero() || !lead.is_constant())
        throw NotInvertible("leading coefficient at q^" + std::to_string(lower_) +
                            " is not a nonzero rational: " + lead.to_string());
    const Rational c0 = lead.constant_value();
    const int len = order() - lower_;
    QSeries y(-lower_, -2 * lower_ + len);
    y.coeff_mut(-lower_) = LaurentPoly(Rational(1) / c0);
    for (int m = 1; m < len; ++m) {
        LaurentPoly acc;
        for (int i = 1; i <= m; ++i) {
            const LaurentPoly& xi = coeff(lower_ + i);
            if (xi.is_zero()) continue;
            acc += xi * y.coeff(-lower_ + m - i);
        }
        if (!acc.is_zero()) y.coeff_mut(-lower_ + m) = acc * Rational(-1) / c0;
    }
    return y;
}

QSeries QSeries::divided_exact(const QSeries& den) const {
    const LaurentPoly& d0 = den.coeff(den.lower());
    if (d0.is_zero()) throw NotInvertible("denominator has zero leading coefficient");
    const int len = std::min(order() - lower_, den.order() - den.lower());
    const int L = lower_ - den.lower();
    QSeries q(L, L + len);
    for (int m = 0; m < len; ++m) {
        LaurentPoly acc = coeff(lower_ + m);
        for (int i = 1; i <= m; ++i) {
            const LaurentPoly& di = den.coeff(den.lower() + i);
            if (di.is_zero()) continue;
            acc -= di * q.coeff(L + m - i);
        }
        if (!acc.is_zero()) q.coeff_mut(L + m) = acc.exact_div(d0);
    }
    return q;
}

QSeries QSeries::coeff_divided_exact(const LaurentPoly& d) const {
    QSeries r(lower_, order());
    for (int n = lower_; n < order(); ++n) {
        const LaurentPoly& c = coeff(n);
        if (!c.is_zero()) r.coeff_mut(n) = c.exact_div(d);
    }
    return r;
}

QSeries QSeries::coeff_substituted(const std::map<Var, LaurentPoly>& bindings) const {
    QSeries r(lower_, order());
    for (int n = lower_; n < order(); ++n) r.coeff_mut(n) = coeff(n).substituted(bindings);
    return r;
}

QSeries QSeries::substituted_q(int sign, int power, int target_order) const {
    if (power < 1) throw Error("substituted_q requires a positive power");
    if (sign != 1 && sign != -1) throw Error("substituted_q requires sign +1 or -1");
    // Coefficients land on multiples of `power`; everything in between is an
    // exact zero, so the reachable window extends to power*(order-1) + 1.
    const int reach = power * (order() - 1) + 1;
    if (target_order < 0) target_order = reach;
    if (target_order > reach)
        throw InsufficientOrder("input order " + std::to_string(order()) +
                                " cannot cover target order " + std::to_string(target_order) +
                                " under q -> " + (sign < 0 ? std::string("-") : std::string()) +
                                "q^" + std::to_string(power));
    QSeries r(power * lower_, target_order);
    for (int n = lower_; n < order(); ++n) {
        if (power * n >= target_order) break;
        const LaurentPoly& c = coeff(n);
        if (c.is_zero()) continue;
        bool negate = (sign < 0) && (n % 2 != 0);
        r.coeff_mut(power * n) = negate ? -c : c;
    }
    return r;
}

QSeries QSeries::mul_binomial(const LaurentPoly& c, int m) const {
    const int drop = std::min(0, m);
    QSeries r(lower_ + drop, order() + drop);
    for (int n = lower_ + drop; n < order() + drop; ++n) {
        LaurentPoly v;
        if (n >= lower_ && n < order()) v = coeff(n);
        int src = n - m;
        if (!c.is_zero() && src >= lower_ && src < order()) v -= c * coeff(src);
        if (!v.is_zero()) r.coeff_mut(n) = std::move(v);
    }
    return r;
}

QSeries QSeries::div_binomial(const LaurentPoly& c, int m) const {
    if (m == 0) {
        if (!c.is_constant() || c.constant_value() == 1)
            throw NotInvertible("cannot divide by (1 - " + c.to_string() + ")");
        return *this / (Rational(1) - c.constant_value());
    }
    if (m < 0) throw NotInvertible("cannot divide by a binomial with negative q-degree");
    QSeries r(lower_, order());
    for (int n = lower_; n < order(); ++n) {
        LaurentPoly v = coeff(n);
        if (n - m >= lower_) v += c * r.coeff(n - m);
        if (!v.is_zero()) r.coeff_mut(n) = std::move(v);
    }
    return r;
}

QSeries QSeries::coeff_graded_part(Var v, int e) const {
    QSeries r(lower_, order());
    for (int n = lower_; n < order(); ++n) {
        LaurentPoly part = coeff(n).graded_part(v, e);
        if (!part.is_zero()) r.coeff_mut(n) = std::move(part);
    }
    return r;
}

QSeries QSeries::nonneg_trimmed() const {
    if (order() <= 0) throw EmptyWindow("series has no nonnegative window");
    for (int n = lower_; n < 0; ++n)
        if (!coeff(n).is_zero())
            throw Error("series has a nonzero coefficient at negative degree q^" +
                        std::to_string(n) + ": " + coeff(n).to_string());
    if (lower_ >= 0) return extended_low(0);
    QSeries r(0, order());
    for (int n = 0; n < order(); ++n) r.coeff_mut(n) = coeff(n);
    return r;
}

std::string QSeries::to_string(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    bool any = false;
    for (int n = lower_; n < order() && shown < max_terms; ++n) {
        const LaurentPoly& c = coeff(n);
        if (c.is_zero()) continue;
        if (any) os << " + ";
        os << "(" << c.to_string() << ")*q^" << n;
        any = true;
        ++shown;
    }
    if (!any) os << "0";
    os << " + O(q^" << order() << ")";
    return os.str();
}

std::optional<int> first_mismatch(const QSeries& x, const QSeries& y, int from, int to) {
    for (int n = from; n < to; ++n)
        if (!(x.coeff(n) == y.coeff(n))) return n;
    return std::nullopt;
}

bool values_equal(const QSeries& x, const QSeries& y, int from, int to) {
    return !first_mismatch(x, y, from, to).has_value();
}

QSeries pochhammer_finite(const PochSpec& spec, int n, int order) {
    if (n < 0) throw Error("pochhammer_finite requires n >= 0");
    if (spec.s < 1) throw Error("pochhammer base step must be >= 1");
    int slack = 0;
    for (int j = 0; j < n; ++j) slack += std::max(0, -(spec.m + j * spec.s));
    QSeries r = QSeries::one(order + slack);
    for (int j = 0; j < n; ++j) r = r.mul_binomial(spec.c, spec.m + j * spec.s);
    return r;
}

QSeries pochhammer_infinite(const PochSpec& spec, int order) {
    if (spec.m < 0)
        throw Error("infinite Pochhammer product requires a nonnegative argument degree");
    if (spec.s < 1) throw Error("pochhammer base step must be >= 1");
    QSeries r = QSeries::one(order);
    for (int e = spec.m; e < order; e += spec.s) r = r.mul_binomial(spec.c, e);
    return r;
}

namespace {

void check_tail_terms_vanish(const std::function<QSeries(int)>& term, int order,
                             std::initializer_list<int> indices) {
    for (int k : indices) {
        QSeries t = term(k);
        for (int n = t.lower(); n < std::min(order, t.order()); ++n)
            if (!t.coeff(n).is_zero())
                throw NonmonotoneCutoff("term " + std::to_string(k) +
                                        " beyond the cutoff contributes at q^" +
                                        std::to_string(n));
    }
}

}  // namespace

QSeries qs_sum(int order, const std::function<int(int)>& min_degree,
               const std::function<QSeries(int)>& term) {
    const int cap = 100 * order + 1000;
    std::vector<QSeries> included;
    int k = 0;
    while (min_degree(k) < order) {
        included.push_back(term(k));
        ++k;
        if (k > cap)
            throw DivergentSeries("summation cutoff did not reach order " +
                                  std::to_string(order));
    }
    check_tail_terms_vanish(term, order, {k, k + 1});
    QSeries acc = QSeries::zero(order);
    for (const QSeries& t : included) acc = acc + t.truncated(order);
    return acc;
}

QSeries qs_sum_bilateral(int order, const std::function<int(int)>& min_degree,
                         const std::function<QSeries(int)>& term) {
    const int cap = 100 * order + 1000;
    int M = 0;
    while (std::min(min_degree(M + 1), min_degree(-(M + 1))) < order) {
        ++M;
        if (M > cap)
            throw DivergentSeries("bilateral cutoff did not reach order " +
                                  std::to_string(order));
    }
    check_tail_terms_vanish(term, order, {M + 1, -(M + 1), M + 2, -(M + 2)});
    QSeries acc = QSeries::zero(order);
    for (int i = -M; i <= M; ++i) acc = acc + term(i).truncated(order);
    return acc;
}

QSeries q_hypergeometric(const HyperSpec& spec, int order) {
    const int s = spec.base_step;
    if (s < 1) throw Error("hypergeometric base step must be >= 1");
    for (const auto& [c, m] : spec.denominators) {
        if (m < 0) throw NotInvertible("denominator parameter with negative q-degree");
        if (m == 0 && c == 1) throw NotInvertible("denominator parameter equals 1");
    }

    // A numerator equal to q^(-n*s) (or to 1) kills every term past k = n.
    std::optional<int> terminate;
    for (const auto& [c, m] : spec.numerators) {
        if (c == 1 && m <= 0 && (-m) % s == 0) {
            int bound = (-m) / s + 1;
            if (!terminate || bound < *terminate) terminate = bound;
        }
    }
    if (!terminate && spec.t_exp < 1)
        throw DivergentSeries("series neither terminates nor has growing term valuation");

    auto min_degree = [&](int k) {
        if (terminate && k >= *terminate) return order;  // exact zero terms
        long long d = static_cast<long long>(k) * spec.t_exp;
        for (const auto& [c, m] : spec.numerators)
            for (int j = 0; j < k; ++j) d += std::min(0, m + j * s);
        return static_cast<int>(std::min<long long>(d, order));
    };

    auto term = [&](int k) {
        if (terminate && k >= *terminate) return QSeries::zero(order);
        int slack = 0;
        for (const auto& [c, m] : spec.numerators)
            for (int j = 0; j < k; ++j) slack += std::max(0, -(m + j * s));
        const long long shift = static_cast<long long>(k) * spec.t_exp;
        const int inner_order = static_cast<int>(std::max<long long>(1, order - shift)) + slack;
        QSeries r = QSeries::one(inner_order);
        for (const auto& [c, m] : spec.numerators)
            for (int j = 0; j < k; ++j) r = r.mul_binomial(LaurentPoly(c), m + j * s);
        for (const auto& [c, m] : spec.denominators)
            for (int j = 0; j < k; ++j) r = r.div_binomial(LaurentPoly(c), m + j * s);
        for (int j = 1; j <= k; ++j) r = r.div_binomial(LaurentPoly(1), j * s);
        Rational tk(1);
        for (int j = 0; j < k; ++j) tk *= spec.t_coeff;
        return (r * tk).shifted(static_cast<int>(shift));
    };

    return qs_sum(order, min_degree, term);
}

}  // namespace qident
