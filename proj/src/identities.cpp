#include "qident/identities.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>

namespace qident {

namespace {

using Clock = std::chrono::steady_clock;

LaurentPoly pvar(Var v) {
    return LaurentPoly::variable(v);
}

Rational rational_pow(const Rational& s, int k) {
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= s;
    return r;
}

// Product of infinite Pochhammer symbols, optionally skipping one (the
// dropped-factor negative control).
QSeries poch_product(const std::vector<PochSpec>& specs, int order, int drop = -1) {
    QSeries r = QSeries::one(order);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (static_cast<int>(i) == drop) continue;
        r = r * pochhammer_infinite(specs[i], order);
    }
    return r;
}

// Divide by (q^s; q^s)_k, factor by factor.
QSeries div_qs_poch(QSeries x, int s, int k) {
    for (int j = 1; j <= k; ++j) x = x.div_binomial(LaurentPoly(1), s * j);
    return x;
}

int clamp_degree(long long d, int order) {
    return static_cast<int>(std::min<long long>(d, order));
}

// sum_k sgn^k q^(k^2 + extra k) (c q; q^2)_k / (q^2; q^2)_k, the common shape
// of the Goellnitz-Gordon style functions (c = -1 plain, +1 twisted, -a and
// -a^2 refined).
QSeries gg_sum(int order, const LaurentPoly& c, int extra, const Rational& sgn, bool perturb) {
    auto mindeg = [=](int k) {
        long long d = 1LL * k * k + 1LL * extra * k + (perturb && k >= 1 ? 1 : 0);
        return clamp_degree(d, order);
    };
    auto term = [=](int k) {
        long long e = 1LL * k * k + 1LL * extra * k + (perturb && k >= 1 ? 1 : 0);
        int w = static_cast<int>(std::max<long long>(1, order - e));
        QSeries r = pochhammer_finite({c, 1, 2}, k, w);
        r = div_qs_poch(std::move(r), 2, k);
        return (r * rational_pow(sgn, k)).shifted(clamp_degree(e, order));
    };
    return qs_sum(order, mindeg, term);
}

// (-zq; q^2)oo (z^2 q^4; q^4)oo, the product side shared by the two
// single-sum identities.
QSeries odd_distinct_product(int order, bool drop_second) {
    std::vector<PochSpec> specs = {{-pvar(Var::z), 1, 2},
                                   {pvar(Var::z) * pvar(Var::z), 4, 4}};
    return poch_product(specs, order, drop_second ? 1 : -1);
}

// sum_k z^k q^(2k^2+k) (z^2 q^2; q^2)_k (1 + z q^(2k+1)) / (q^2; q^2)_k
QSeries sum_lhs_15(int order, bool perturb) {
    const LaurentPoly z = pvar(Var::z);
    const LaurentPoly z2 = z * z;
    auto mindeg = [=](int k) {
        return clamp_degree(2LL * k * k + k + (perturb && k >= 1 ? 1 : 0), order);
    };
    auto term = [=](int k) {
        long long e = 2LL * k * k + k + (perturb && k >= 1 ? 1 : 0);
        int w = static_cast<int>(std::max<long long>(1, order - e));
        QSeries r = pochhammer_finite({z2, 2, 2}, k, w);
        r = r.mul_binomial(-z, 2 * k + 1);
        r = div_qs_poch(std::move(r), 2, k);
        return (r * z.pow(k)).shifted(clamp_degree(e, order));
    };
    return qs_sum(order, mindeg, term);
}

// k-th summand of the regrouped single sum:
// z^k q^(2k^2-k) (z^2 q^2; q^2)_(k-1) (1 - z^2 q^(4k)) / (q^2; q^2)_k
QSeries summand_46(int k, int order, bool perturb = false) {
    const LaurentPoly z = pvar(Var::z);
    const LaurentPoly z2 = z * z;
    long long e = 2LL * k * k - k + (perturb && k >= 1 ? 1 : 0);
    int w = static_cast<int>(std::max<long long>(1, order - e));
    QSeries r = pochhammer_finite({z2, 2, 2}, k - 1, w);
    r = r.mul_binomial(z2, 4 * k);
    r = div_qs_poch(std::move(r), 2, k);
    return (r * z.pow(k)).shifted(clamp_degree(e, order));
}

QSeries sum_lhs_46(int order, bool perturb) {
    auto mindeg = [=](int k) {
        if (k == 0) return 0;
        return clamp_degree(2LL * k * k - k + (perturb ? 1 : 0), order);
    };
    auto term = [=](int k) {
        if (k == 0) return QSeries::one(order);
        return summand_46(k, order, perturb);
    };
    return qs_sum(order, mindeg, term);
}

// Generating function of the gap-4 odd-part partitions with least part != 1
// and exactly k parts: z^k q^(2k^2+k) (z^2 q^2; q^2)_k / (q^2; q^2)_k.
QSeries g3k(int k, int order) {
    const LaurentPoly z = pvar(Var::z);
    long long e = 2LL * k * k + k;
    int w = static_cast<int>(std::max<long long>(1, order - e));
    QSeries r = pochhammer_finite({z * z, 2, 2}, k, w);
    r = div_qs_poch(std::move(r), 2, k);
    return (r * z.pow(k)).shifted(clamp_degree(e, order));
}

// Same with least part 1: z^k q^(2k^2-k) (z^2 q^2; q^2)_(k-1) / (q^2;q^2)_(k-1).
QSeries g1k_star(int k, int order) {
    const LaurentPoly z = pvar(Var::z);
    long long e = 2LL * k * k - k;
    int w = static_cast<int>(std::max<long long>(1, order - e));
    QSeries r = pochhammer_finite({z * z, 2, 2}, k - 1, w);
    r = div_qs_poch(std::move(r), 2, k - 1);
    return (r * z.pow(k)).shifted(clamp_degree(e, order));
}

// Double sum over i, j >= 0 with base q^s (s = 3 or 4):
//   a^i b^j q^(Ei(i)+Ej(j)+s i j) (ab;q^s)_i (ab;q^s)_j (1 - ab q^(s(i+j)))
//   / [ (1-ab) (q^s;q^s)_i (q^s;q^s)_j ]
// The (1-ab) division is exact per summand: for i+j >= 1 one of the
// Pochhammers supplies the factor, and for i=j=0 the summand is 1.
QSeries double_sum_lhs(int s, int order, bool perturb) {
    const LaurentPoly a = pvar(Var::a);
    const LaurentPoly b = pvar(Var::b);
    const LaurentPoly ab = a * b;
    const LaurentPoly one_minus_ab = LaurentPoly(1) - ab;
    auto ei = [s](long long i) { return (s * i * i - (s - 2) * i) / 2; };
    auto ej = [s](long long j) { return (s * j * j + (s - 2) * j) / 2; };
    auto expo = [=](int i, int j) {
        return ei(i) + ej(j) + 1LL * s * i * j + (perturb && (i || j) ? 1 : 0);
    };
    auto outer_mindeg = [=](int i) { return clamp_degree(expo(i, 0), order); };
    auto outer_term = [=](int i) {
        auto inner_mindeg = [=](int j) { return clamp_degree(expo(i, j), order); };
        auto inner_term = [=](int j) {
            long long e = expo(i, j);
            int w = static_cast<int>(std::max<long long>(1, order - e));
            QSeries r = pochhammer_finite({ab, 0, s}, i, w) * pochhammer_finite({ab, 0, s}, j, w);
            r = r.mul_binomial(ab, s * (i + j));
            r = r.coeff_divided_exact(one_minus_ab);
            r = div_qs_poch(std::move(r), s, i);
            r = div_qs_poch(std::move(r), s, j);
            return (r * (a.pow(i) * b.pow(j))).shifted(clamp_degree(e, order));
        };
        return qs_sum(order, inner_mindeg, inner_term);
    };
    return qs_sum(order, outer_mindeg, outer_term);
}

std::vector<PochSpec> double_sum_rhs_specs(int s) {
    const LaurentPoly a = pvar(Var::a);
    const LaurentPoly b = pvar(Var::b);
    return {{-a, 1, s}, {-b, s - 1, s}, {a * b, s, s}};
}

// Bilateral sum of a^i q^expo(i) over all integers i.
QSeries bilateral_lhs(int order, const std::function<long long(long long)>& expo, bool perturb) {
    const LaurentPoly a = pvar(Var::a);
    auto mindeg = [=](int i) {
        return clamp_degree(expo(i) + (perturb && i != 0 ? 1 : 0), order);
    };
    auto term = [=](int i) {
        int e = clamp_degree(expo(i) + (perturb && i != 0 ? 1 : 0), order);
        return QSeries::monomial(a.pow(i), e, order);
    };
    return qs_sum_bilateral(order, mindeg, term);
}

// (a t q; q)oo / (t q; q)oo, the Cauchy product in the t-marked form (every
// t carries one power of q so both sides truncate).
QSeries cauchy_lhs(int order, bool drop_numerator) {
    const LaurentPoly at = pvar(Var::a) * pvar(Var::t);
    const LaurentPoly t = pvar(Var::t);
    QSeries den_inv = pochhammer_infinite({t, 1, 1}, order).inverted();
    if (drop_numerator) return den_inv;
    return pochhammer_infinite({at, 1, 1}, order) * den_inv;
}

// sum_k (a; q)_k (t q)^k / (q; q)_k
QSeries cauchy_rhs(int order, bool perturb) {
    const LaurentPoly a = pvar(Var::a);
    const LaurentPoly t = pvar(Var::t);
    auto mindeg = [=](int k) { return clamp_degree(k + (perturb && k >= 1 ? 1 : 0), order); };
    auto term = [=](int k) {
        long long e = k + (perturb && k >= 1 ? 1 : 0);
        int w = static_cast<int>(std::max<long long>(1, order - e));
        QSeries r = pochhammer_finite({a, 0, 1}, k, w);
        r = div_qs_poch(std::move(r), 1, k);
        return (r * t.pow(k)).shifted(clamp_degree(e, order));
    };
    return qs_sum(order, mindeg, term);
}

// (a; q)_k / (q; q)_k
QSeries eq45_lhs(int k, int order, bool drop) {
    const LaurentPoly a = pvar(Var::a);
    QSeries r = drop ? QSeries::one(order) : pochhammer_finite({a, 0, 1}, k, order);
    return div_qs_poch(std::move(r), 1, k);
}

// sum_(i+j=k) (a; q^2)_i (a; q^2)_j q^j / [(q^2;q^2)_i (q^2;q^2)_j]
QSeries eq45_rhs(int k, int order, bool perturb) {
    const LaurentPoly a = pvar(Var::a);
    QSeries acc = QSeries::zero(order);
    for (int i = 0; i <= k; ++i) {
        int j = k - i;
        int shift = j + (perturb && j >= 1 ? 1 : 0);
        if (shift >= order) continue;
        QSeries r = pochhammer_finite({a, 0, 2}, i, order) * pochhammer_finite({a, 0, 2}, j, order);
        r = div_qs_poch(std::move(r), 2, i);
        r = div_qs_poch(std::move(r), 2, j);
        acc = acc + r.shifted(shift).truncated(order);
    }
    return acc;
}

// Ratio of infinite Pochhammer products with rational arguments (coeff, m)
// over base q^s. Used by the 4phi3 evaluation entries.
struct ProductRatio {
    std::vector<std::pair<Rational, int>> num;
    std::vector<std::pair<Rational, int>> den;
};

QSeries product_ratio(const ProductRatio& pr, int s, int order, bool drop_first_num) {
    QSeries r = QSeries::one(order);
    for (std::size_t i = 0; i < pr.num.size(); ++i) {
        if (drop_first_num && i == 0) continue;
        r = r * pochhammer_infinite({LaurentPoly(pr.num[i].first), pr.num[i].second, s}, order);
    }
    QSeries d = QSeries::one(order);
    for (const auto& [c, m] : pr.den)
        d = d * pochhammer_infinite({LaurentPoly(c), m, s}, order);
    return r * d.inverted();
}

// G(-q^2)-style left sides: substitute q -> sign q^2 into a gg_sum built at
// half order, add q (or a q) times the H image.
QSeries modular_lhs(int order, const LaurentPoly& c, int sub_sign, const Rational& sgn,
                    const LaurentPoly& h_multiplier, bool perturb) {
    const int half = order / 2 + 1;
    QSeries g = gg_sum(half, c, 0, sgn, perturb);
    QSeries h = gg_sum(half, c, 2, sgn, perturb);
    QSeries lhs = g.substituted_q(sub_sign, 2, order);
    QSeries h_part = h.substituted_q(sub_sign, 2, order > 1 ? order - 1 : 1).shifted(1);
    return lhs + h_part * h_multiplier;
}

struct DixonSpec {
    std::string name;
    std::string notes;
    HyperSpec hyper;
    ProductRatio rhs;
};

std::vector<DixonSpec> dixon_specs() {
    std::vector<DixonSpec> specs;
    const Rational h(1, 2);
    // a = q^2, b = 2, c = q: nonterminating, t = q/2.
    specs.push_back(
        {"qdixon1.2.spec1",
         "4phi3 evaluation (Gasper-Rahman II.13 shape) at a=q^2, b=2, c=q, t=q/2",
         {{{1, 2}, {-1, 2}, {2, 0}, {1, 1}}, {{-1, 1}, {h, 3}, {1, 2}}, 1, h, 1},
         {{{1, 3}, {h, 2}, {1, 1}, {h, 2}}, {{h, 3}, {1, 2}, {1, 2}, {h, 1}}}});
    // a = q^2, b = q^-n, c = q for n = 1, 2, 3: terminating at k = n.
    for (int n = 1; n <= 3; ++n) {
        specs.push_back(
            {"qdixon1.2.spec" + std::to_string(n + 1),
             "4phi3 evaluation, terminating case a=q^2, b=q^-" + std::to_string(n) + ", c=q",
             {{{1, 2}, {-1, 2}, {1, -n}, {1, 1}},
              {{-1, 1}, {1, 3 + n}, {1, 2}},
              1,
              Rational(1),
              1 + n},
             {{{1, 3}, {1, 2 + n}, {1, 1}, {1, 2 + n}},
              {{1, 3 + n}, {1, 2}, {1, 2}, {1, 1 + n}}}});
    }
    // a = q^4, b = 2, c = q^2: the other square root shape, t = q/2.
    specs.push_back(
        {"qdixon1.2.spec5",
         "4phi3 evaluation at a=q^4, b=2, c=q^2, t=q/2",
         {{{1, 4}, {-1, 3}, {2, 0}, {1, 2}}, {{-1, 2}, {h, 5}, {1, 3}}, 1, h, 1},
         {{{1, 5}, {h, 3}, {1, 1}, {h, 3}}, {{h, 5}, {1, 3}, {1, 3}, {h, 1}}}});
    return specs;
}

IdentitySpec make_entry(std::string name, std::string notes, std::vector<int> deltas,
                        std::function<QSeries(Side, int, int, Mutation)> build,
                        std::function<long long(int)> cutoff) {
    IdentitySpec e;
    e.name = std::move(name);
    e.notes = std::move(notes);
    e.delta_variants = std::move(deltas);
    e.build = std::move(build);
    e.cutoff = std::move(cutoff);
    return e;
}

std::vector<IdentitySpec> build_catalog() {
    std::vector<IdentitySpec> cat;
    const LaurentPoly a = pvar(Var::a);
    const LaurentPoly b = pvar(Var::b);
    const LaurentPoly z = pvar(Var::z);

    cat.push_back(make_entry(
        "eq1.5",
        "single sum over gap-4 odd-part weights = (-zq;q^2)oo (z^2q^4;q^4)oo; "
        "limiting 4phi3 evaluation",
        {},
        [](Side s, int order, int, Mutation m) {
            if (s == Side::lhs) return sum_lhs_15(order, m == Mutation::perturb_exponent);
            return odd_distinct_product(order, m == Mutation::drop_factor);
        },
        [](int k) { return 2LL * k * k + k; }));

    cat.push_back(make_entry(
        "eq4.6",
        "regrouped single sum 1 + sum_k z^k q^(2k^2-k) (z^2q^2;q^2)_(k-1) (1-z^2q^(4k)) / "
        "(q^2;q^2)_k with the same product side",
        {},
        [](Side s, int order, int, Mutation m) {
            if (s == Side::lhs) return sum_lhs_46(order, m == Mutation::perturb_exponent);
            return odd_distinct_product(order, m == Mutation::drop_factor);
        },
        [](int k) { return k == 0 ? 0 : 2LL * k * k - k; }));

    for (int s : {3, 4}) {
        std::string name = s == 3 ? "eq3.1" : "eq3.3";
        std::string notes =
            s == 3 ? "two-parameter double sum, base q^3, product (-aq;q^3)oo(-bq^2;q^3)oo"
                     "(abq^3;q^3)oo"
                   : "two-parameter double sum, base q^4, product (-aq;q^4)oo(-bq^3;q^4)oo"
                     "(abq^4;q^4)oo; the third factor follows the base-3 analogy, and "
                     "verification at order 60 confirms it (the alternative reading "
                     "(ab;q^4)oo already fails at degree 0)";
        cat.push_back(make_entry(
            name, notes, {},
            [s](Side side, int order, int, Mutation m) {
                if (side == Side::lhs)
                    return double_sum_lhs(s, order, m == Mutation::perturb_exponent);
                return poch_product(double_sum_rhs_specs(s), order,
                                    m == Mutation::drop_factor ? 2 : -1);
            },
            [s](int i) { return (1LL * s * i * i - (s - 2) * i) / 2; }));
    }

    cat.push_back(make_entry(
        "jacobi3.4", "bilateral theta sum a^i q^((3i^2-i)/2), triple product mod 3", {},
        [](Side side, int order, int, Mutation m) {
            if (side == Side::lhs)
                return bilateral_lhs(
                    order, [](long long i) { return (3 * i * i - i) / 2; },
                    m == Mutation::perturb_exponent);
            std::vector<PochSpec> specs = {{-pvar(Var::a), 1, 3},
                                           {LaurentPoly::monomial(-1, -1, 0, 0, 0), 2, 3},
                                           {LaurentPoly(1), 3, 3}};
            return poch_product(specs, order, m == Mutation::drop_factor ? 0 : -1);
        },
        [](int k) { return (3LL * k * k - std::abs(k)) / 2; }));

    cat.push_back(make_entry(
        "jacobi3.5", "bilateral theta sum a^i q^(2i^2-i), triple product mod 4", {},
        [](Side side, int order, int, Mutation m) {
            if (side == Side::lhs)
                return bilateral_lhs(
                    order, [](long long i) { return 2 * i * i - i; },
                    m == Mutation::perturb_exponent);
            std::vector<PochSpec> specs = {{-pvar(Var::a), 1, 4},
                                           {LaurentPoly::monomial(-1, -1, 0, 0, 0), 3, 4},
                                           {LaurentPoly(1), 4, 4}};
            return poch_product(specs, order, m == Mutation::drop_factor ? 0 : -1);
        },
        [](int k) { return 2LL * k * k - std::abs(k); }));

    cat.push_back(make_entry(
        "cauchy2.5",
        "Cauchy expansion (at)oo/(t)oo = sum_k (a)_k t^k/(q)_k, in the t-marked form "
        "t -> tq that makes both sides truncatable",
        {},
        [](Side side, int order, int, Mutation m) {
            if (side == Side::lhs) return cauchy_lhs(order, m == Mutation::drop_factor);
            return cauchy_rhs(order, m == Mutation::perturb_exponent);
        },
        [](int k) { return static_cast<long long>(k); }));

    for (int k = 1; k <= 8; ++k) {
        cat.push_back(make_entry(
            "eq4.5.k" + std::to_string(k),
            "t^" + std::to_string(k) + " coefficient identity of the even/odd Cauchy splitting",
            {},
            [k](Side side, int order, int, Mutation m) {
                if (side == Side::lhs) return eq45_lhs(k, order, m == Mutation::drop_factor);
                return eq45_rhs(k, order, m == Mutation::perturb_exponent);
            },
            nullptr));
    }

    cat.push_back(make_entry(
        "gg5.1",
        "Goellnitz-Gordon first identity: sum q^(n^2)(-q;q^2)_n/(q^2;q^2)_n = "
        "1/[(q;q^8)oo(q^4;q^8)oo(q^7;q^8)oo]",
        {},
        [](Side side, int order, int, Mutation m) {
            if (side == Side::lhs)
                return gg_sum(order, LaurentPoly(-1), 0, Rational(1),
                              m == Mutation::perturb_exponent);
            std::vector<PochSpec> specs = {{LaurentPoly(1), 1, 8},
                                           {LaurentPoly(1), 4, 8},
                                           {LaurentPoly(1), 7, 8}};
            return poch_product(specs, order, m == Mutation::drop_factor ? 1 : -1).inverted();
        },
        [](int k) { return 1LL * k * k; }));

    cat.push_back(make_entry(
        "gg5.2",
        "Goellnitz-Gordon second identity: sum q^(n^2+2n)(-q;q^2)_n/(q^2;q^2)_n = "
        "1/[(q^3;q^8)oo(q^4;q^8)oo(q^5;q^8)oo]",
        {},
        [](Side side, int order, int, Mutation m) {
            if (side == Side::lhs)
                return gg_sum(order, LaurentPoly(-1), 2, Rational(1),
                              m == Mutation::perturb_exponent);
            std::vector<PochSpec> specs = {{LaurentPoly(1), 3, 8},
                                           {LaurentPoly(1), 4, 8},
                                           {LaurentPoly(1), 5, 8}};
            return poch_product(specs, order, m == Mutation::drop_factor ? 1 : -1).inverted();
        },
        [](int k) { return 1LL * k * k + 2LL * k; }));

    cat.push_back(make_entry(
        "mod5.3", "modular relation G(-q^2) + q H(-q^2) = (-q;q^4)oo(q^2;q^4)oo(-q^3;q^4)oo", {},
        [](Side side, int order, int, Mutation m) {
            if (side == Side::lhs)
                return modular_lhs(order, LaurentPoly(-1), -1, Rational(1), LaurentPoly(1),
                                   m == Mutation::perturb_exponent);
            std::vector<PochSpec> specs = {{LaurentPoly(-1), 1, 4},
                                           {LaurentPoly(1), 2, 4},
                                           {LaurentPoly(-1), 3, 4}};
            return poch_product(specs, order, m == Mutation::drop_factor ? 1 : -1);
        },
        [](int k) { return 2LL * k * k; }));

    cat.push_back(make_entry(
        "mod5.6",
        "twisted modular relation G_t(q^2) + q H_t(q^2) = (-q;q^4)oo(-q^2;q^4)oo(q^3;q^4)oo", {},
        [](Side side, int order, int, Mutation m) {
            if (side == Side::lhs)
                return modular_lhs(order, LaurentPoly(1), 1, Rational(1), LaurentPoly(1),
                                   m == Mutation::perturb_exponent);
            std::vector<PochSpec> specs = {{LaurentPoly(-1), 1, 4},
                                           {LaurentPoly(-1), 2, 4},
                                           {LaurentPoly(1), 3, 4}};
            return poch_product(specs, order, m == Mutation::drop_factor ? 1 : -1);
        },
        [](int k) { return 2LL * k * k; }));

    // The two arithmetic-mean representations that follow from mod5.6 and
    // its q -> -q image.
    auto mean_products = [](int order, bool drop) {
        std::vector<PochSpec> p1 = {{LaurentPoly(-1), 1, 4},
                                    {LaurentPoly(-1), 2, 4},
                                    {LaurentPoly(1), 3, 4}};
        std::vector<PochSpec> p2 = {{LaurentPoly(1), 1, 4},
                                    {LaurentPoly(-1), 2, 4},
                                    {LaurentPoly(-1), 3, 4}};
        return std::make_pair(poch_product(p1, order, drop ? 2 : -1), poch_product(p2, order));
    };

    cat.push_back(make_entry(
        "mean5.7",
        "G_t(q^2) as the arithmetic mean of the two sign images of the mod5.6 product", {},
        [mean_products](Side side, int order, int, Mutation m) {
            if (side == Side::lhs) {
                int half = order / 2 + 1;
                return gg_sum(half, LaurentPoly(1), 0, Rational(1),
                              m == Mutation::perturb_exponent)
                    .substituted_q(1, 2, order);
            }
            auto [p1, p2] = mean_products(order, m == Mutation::drop_factor);
            return (p1 + p2) * Rational(1, 2);
        },
        [](int k) { return 2LL * k * k; }));

    cat.push_back(make_entry(
        "mean5.8",
        "H_t(q^2) as the q-scaled half difference of the same two products; the subtracted "
        "product's third factor is (-q^3;q^4)oo, the q -> -q image of (q^3;q^4)oo",
        {},
        [mean_products](Side side, int order, int, Mutation m) {
            if (side == Side::lhs) {
                int half = order / 2 + 2;
                return gg_sum(half, LaurentPoly(1), 2, Rational(1),
                              m == Mutation::perturb_exponent)
                    .substituted_q(1, 2, order);
            }
            auto [p1, p2] = mean_products(order + 1, m == Mutation::drop_factor);
            return ((p1 - p2) * Rational(1, 2)).shifted(-1);
        },
        [](int k) { return 2LL * k * k + 4LL * k; }));

    cat.push_back(make_entry(
        "limit5.11.doubled",
        "base-doubled limiting evaluation: sum (-d)^k q^(k^2) (a^2;q^2)_k (1+aq^(2k)) / "
        "(q^2;q^2)_k = (a^2;q^2)oo (dq;q^2)oo / [(a;q^2)oo (daq;q^2)oo], d = +-1",
        {1, -1},
        [](Side side, int order, int delta, Mutation m) {
            const LaurentPoly a = pvar(Var::a);
            if (side == Side::lhs) {
                bool pert = m == Mutation::perturb_exponent;
                auto mindeg = [=](int k) {
                    return clamp_degree(1LL * k * k + (pert && k >= 1 ? 1 : 0), order);
                };
                auto term = [=](int k) {
                    long long e = 1LL * k * k + (pert && k >= 1 ? 1 : 0);
                    int w = static_cast<int>(std::max<long long>(1, order - e));
                    QSeries r = pochhammer_finite({a * a, 0, 2}, k, w);
                    r = r.mul_binomial(-a, 2 * k);
                    r = div_qs_poch(std::move(r), 2, k);
                    return (r * rational_pow(Rational(-delta), k)).shifted(clamp_degree(e, order));
                };
                return qs_sum(order, mindeg, term);
            }
            QSeries num = pochhammer_infinite({a * a, 0, 2}, order);
            if (m != Mutation::drop_factor)
                num = num * pochhammer_infinite({LaurentPoly(delta), 1, 2}, order);
            QSeries den = pochhammer_infinite({a, 0, 2}, order) *
                          pochhammer_infinite({LaurentPoly(delta) * a, 1, 2}, order);
            return num.divided_exact(den);
        },
        [](int k) { return 1LL * k * k; }));

    auto rhs_512 = [](int order, int delta, bool drop) {
        const LaurentPoly a = pvar(Var::a);
        std::vector<PochSpec> specs = {{-a, 1, 4},
                                       {LaurentPoly(delta), 2, 4},
                                       {LaurentPoly(-delta) * a, 3, 4}};
        return poch_product(specs, order, drop ? 1 : -1);
    };

    cat.push_back(make_entry(
        "eq5.12",
        "refined modular evaluation: sum (-d)^k q^(2k^2) (a^2q^2;q^4)_k (1+aq^(4k+1)) / "
        "(q^4;q^4)_k = (-aq;q^4)oo (dq^2;q^4)oo (-daq^3;q^4)oo, d = +-1",
        {1, -1},
        [rhs_512](Side side, int order, int delta, Mutation m) {
            const LaurentPoly a = pvar(Var::a);
            if (side == Side::lhs) {
                bool pert = m == Mutation::perturb_exponent;
                auto mindeg = [=](int k) {
                    return clamp_degree(2LL * k * k + (pert && k >= 1 ? 1 : 0), order);
                };
                auto term = [=](int k) {
                    long long e = 2LL * k * k + (pert && k >= 1 ? 1 : 0);
                    int w = static_cast<int>(std::max<long long>(1, order - e));
                    QSeries r = pochhammer_finite({a * a, 2, 4}, k, w);
                    r = r.mul_binomial(-a, 4 * k + 1);
                    r = div_qs_poch(std::move(r), 4, k);
                    return (r * rational_pow(Rational(-delta), k)).shifted(clamp_degree(e, order));
                };
                return qs_sum(order, mindeg, term);
            }
            return rhs_512(order, delta, m == Mutation::drop_factor);
        },
        [](int k) { return 2LL * k * k; }));

    cat.push_back(make_entry(
        "mod5.13",
        "refined modular relation G_(a^2,d)(-q^2) + aq H_(a^2,d)(-q^2) equals the eq5.12 "
        "product, d = +-1; specializes to mod5.3 at d=1, a=1 and to mod5.6 at d=-1, a=1",
        {1, -1},
        [rhs_512](Side side, int order, int delta, Mutation m) {
            const LaurentPoly a = pvar(Var::a);
            if (side == Side::lhs)
                return modular_lhs(order, -(a * a), -1, Rational(delta), a,
                                   m == Mutation::perturb_exponent);
            return rhs_512(order, delta, m == Mutation::drop_factor);
        },
        [](int k) { return 2LL * k * k; }));

    cat.push_back(make_entry(
        "eq5.9.doubled",
        "base-doubled 4phi3 with c = d sqrt(aq): base q^2, a = q^4, b = 2, d = +-1",
        {1, -1},
        [](Side side, int order, int delta, Mutation m) {
            const Rational h(1, 2);
            if (side == Side::lhs) {
                bool pert = m == Mutation::perturb_exponent;
                auto mindeg = [=](int k) {
                    return clamp_degree(1LL * k + (pert && k >= 1 ? 1 : 0), order);
                };
                auto term = [=](int k) {
                    long long e = 1LL * k + (pert && k >= 1 ? 1 : 0);
                    int w = static_cast<int>(std::max<long long>(1, order - e));
                    QSeries r = pochhammer_finite({LaurentPoly(1), 4, 2}, k, w);
                    r = r * pochhammer_finite({LaurentPoly(2), 0, 2}, k, w);
                    r = r.mul_binomial(LaurentPoly(-1), 2 * k + 2);
                    r = div_qs_poch(std::move(r), 2, k);
                    for (int j = 0; j < k; ++j) r = r.div_binomial(LaurentPoly(h), 6 + 2 * j);
                    return (r * rational_pow(Rational(delta) * h, k))
                        .shifted(clamp_degree(e, order));
                };
                return qs_sum(order, mindeg, term);
            }
            Rational d(delta);
            ProductRatio pr{{{1, 4}, {h, 4}, {d, 1}, {d * h, 3}},
                            {{h, 6}, {d, 3}, {1, 2}, {d * h, 1}}};
            return product_ratio(pr, 2, order, m == Mutation::drop_factor);
        },
        [](int k) { return static_cast<long long>(k); }));

    for (const DixonSpec& ds : dixon_specs()) {
        cat.push_back(make_entry(
            ds.name, ds.notes, {},
            [ds](Side side, int order, int, Mutation m) {
                if (side == Side::lhs) {
                    HyperSpec h = ds.hyper;
                    if (m == Mutation::perturb_exponent) h.t_exp += 1;
                    return q_hypergeometric(h, order);
                }
                return product_ratio(ds.rhs, ds.hyper.base_step, order,
                                     m == Mutation::drop_factor);
            },
            [ds](int k) {
                long long d = 1LL * k * ds.hyper.t_exp;
                for (const auto& [c, m] : ds.hyper.numerators)
                    for (int j = 0; j < k; ++j) d += std::min(0, m + j * ds.hyper.base_step);
                return d;
            }));
    }

    return cat;
}

QSeries normalized_side(const IdentitySpec& e, Side side, int order, int delta, Mutation m) {
    return e.build(side, order, delta, m).nonneg_trimmed().truncated(order);
}

VerificationReport run_verify(const IdentitySpec& e, int order, std::optional<int> delta,
                              Mutation m, const std::string& label) {
    VerificationReport rep;
    rep.name = label;
    rep.order = order;
    rep.delta = delta;
    auto t0 = Clock::now();
    QSeries lhs = normalized_side(e, Side::lhs, order, delta.value_or(1), m);
    QSeries rhs = normalized_side(e, Side::rhs, order, delta.value_or(1), m);
    auto mm = first_mismatch(lhs, rhs, 0, order);
    rep.pass = !mm.has_value();
    if (mm) rep.first_mismatch = Mismatch{*mm, lhs.coeff(*mm), rhs.coeff(*mm)};
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return rep;
}

}  // namespace

const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> cat = build_catalog();
    return cat;
}

const IdentitySpec& find_identity(const std::string& name) {
    for (const IdentitySpec& e : catalog())
        if (e.name == name) return e;
    throw UnknownIdentity("no catalog entry named '" + name + "'");
}

QSeries build_side(const std::string& name, Side side, int order, int delta) {
    return normalized_side(find_identity(name), side, order, delta, Mutation::none);
}

std::vector<VerificationReport> verify_variants(const std::string& name, int order) {
    const IdentitySpec& e = find_identity(name);
    std::vector<VerificationReport> out;
    if (e.delta_variants.empty()) {
        out.push_back(run_verify(e, order, std::nullopt, Mutation::none, e.name));
    } else {
        for (int d : e.delta_variants)
            out.push_back(run_verify(e, order, d, Mutation::none, e.name));
    }
    return out;
}

VerificationReport verify(const std::string& name, int order) {
    auto parts = verify_variants(name, order);
    VerificationReport rep;
    rep.name = name;
    rep.order = order;
    rep.pass = true;
    for (const auto& p : parts) {
        rep.elapsed_ms += p.elapsed_ms;
        if (!p.pass && rep.pass) {
            rep.pass = false;
            rep.delta = p.delta;
            rep.first_mismatch = p.first_mismatch;
        }
    }
    return rep;
}

VerificationReport verify_mutated(const std::string& name, int order, Mutation mutation) {
    const IdentitySpec& e = find_identity(name);
    std::optional<int> delta;
    if (!e.delta_variants.empty()) delta = e.delta_variants.front();
    std::string label =
        e.name + (mutation == Mutation::drop_factor ? "#drop-factor" : "#perturb-exponent");
    return run_verify(e, order, delta, mutation, label);
}

std::vector<VerificationReport> verify_all(int order, bool parallel) {
    const auto& cat = catalog();
    std::vector<std::vector<VerificationReport>> buckets(cat.size());
    if (parallel) {
        std::vector<std::future<std::vector<VerificationReport>>> futs;
        futs.reserve(cat.size());
        for (const IdentitySpec& e : cat)
            futs.push_back(std::async(std::launch::async,
                                      [&e, order] { return verify_variants(e.name, order); }));
        for (std::size_t i = 0; i < futs.size(); ++i) buckets[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < cat.size(); ++i)
            buckets[i] = verify_variants(cat[i].name, order);
    }
    std::vector<VerificationReport> out;
    for (auto& b : buckets)
        for (auto& r : b) out.push_back(std::move(r));
    return out;
}

namespace {

VerificationReport make_check_report(const std::string& name, int order) {
    VerificationReport rep;
    rep.name = name;
    rep.order = order;
    rep.pass = true;
    return rep;
}

void record_fail(VerificationReport& rep, int degree, const LaurentPoly& lhs,
                 const LaurentPoly& rhs) {
    if (!rep.pass) return;
    rep.pass = false;
    rep.first_mismatch = Mismatch{degree, lhs, rhs};
}

void compare_series(VerificationReport& rep, const QSeries& lhs, const QSeries& rhs, int from,
                    int to) {
    if (!rep.pass) return;
    if (auto n = first_mismatch(lhs, rhs, from, to))
        record_fail(rep, *n, lhs.coeff(*n), rhs.coeff(*n));
}

struct Timer {
    VerificationReport& rep;
    Clock::time_point t0 = Clock::now();
    explicit Timer(VerificationReport& r) : rep(r) {}
    ~Timer() {
        rep.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    }
};

}  // namespace

VerificationReport verify_theorem_vs_series(Theorem t, int n_max) {
    const char* names[] = {"theorem1-enumeration-vs-series", "theorem2-enumeration-vs-series",
                           "theorem3-enumeration-vs-series"};
    const char* entries[] = {"eq1.5", "eq3.3", "eq3.1"};
    const Family lhs_family[] = {Family::O4, Family::O4, Family::D3};
    const Family rhs_family[] = {Family::D24, Family::D24, Family::D};
    const WeightId lhs_weight[] = {WeightId::THM1_LHS, WeightId::THM2_LHS, WeightId::THM3_LHS};
    const WeightId rhs_weight[] = {WeightId::THM1_RHS, WeightId::THM2_RHS, WeightId::THM3_RHS};
    int i = static_cast<int>(t);

    VerificationReport rep = make_check_report(names[i], n_max);
    Timer timer(rep);
    QSeries lhs = build_side(entries[i], Side::lhs, n_max + 1);
    QSeries rhs = build_side(entries[i], Side::rhs, n_max + 1);
    for (int n = 0; n <= n_max && rep.pass; ++n) {
        LaurentPoly el = weighted_sum(n, lhs_family[i], lhs_weight[i]);
        if (!(el == lhs.coeff(n))) record_fail(rep, n, el, lhs.coeff(n));
        LaurentPoly er = weighted_sum(n, rhs_family[i], rhs_weight[i]);
        if (!(er == rhs.coeff(n))) record_fail(rep, n, er, rhs.coeff(n));
    }
    return rep;
}

VerificationReport verify_gg_combinatorial(int n_max) {
    VerificationReport rep = make_check_report("refined-gg-enumeration-vs-series", n_max);
    Timer timer(rep);
    const LaurentPoly a = pvar(Var::a);
    for (int delta : {1, -1}) {
        QSeries g = gg_sum(n_max + 1, -a, 0, Rational(delta), false);
        QSeries h = gg_sum(n_max + 1, -a, 2, Rational(delta), false);
        for (int n = 0; n <= n_max && rep.pass; ++n) {
            LaurentPoly wg = weighted_sum(n, Family::GG1, WeightId::GG_REFINED_G, delta);
            if (!(wg == g.coeff(n))) record_fail(rep, n, wg, g.coeff(n));
            LaurentPoly wh = weighted_sum(n, Family::GG2, WeightId::GG_REFINED_H, delta);
            if (!(wh == h.coeff(n))) record_fail(rep, n, wh, h.coeff(n));
        }
    }
    return rep;
}

VerificationReport verify_jacobi_reduction(int order) {
    VerificationReport rep = make_check_report("ab1-reduction-to-triple-product", order);
    Timer timer(rep);
    const std::map<Var, LaurentPoly> binding = {
        {Var::b, LaurentPoly::monomial(1, -1, 0, 0, 0)}};
    const char* doubles[] = {"eq3.1", "eq3.3"};
    const char* bilaterals[] = {"jacobi3.4", "jacobi3.5"};
    for (int i = 0; i < 2 && rep.pass; ++i) {
        for (Side side : {Side::lhs, Side::rhs}) {
            QSeries reduced = build_side(doubles[i], side, order).coeff_substituted(binding);
            QSeries target = build_side(bilaterals[i], side, order);
            compare_series(rep, reduced, target, 0, order);
        }
    }
    return rep;
}

VerificationReport verify_reduction_4_6(int order) {
    VerificationReport rep = make_check_report("summand-regrouping-and-single-sum-equality",
                                               order);
    Timer timer(rep);
    for (int k = 1; k <= 8 && rep.pass; ++k) {
        QSeries grouped = g3k(k, order) + g1k_star(k, order);
        compare_series(rep, grouped, summand_46(k, order), 0, order);
    }
    compare_series(rep, build_side("eq1.5", Side::lhs, order),
                   build_side("eq4.6", Side::lhs, order), 0, order);
    return rep;
}

VerificationReport verify_cauchy_split(int order) {
    VerificationReport rep = make_check_report("even-odd-cauchy-splitting", order);
    Timer timer(rep);
    const LaurentPoly a = pvar(Var::a);
    const LaurentPoly t = pvar(Var::t);
    const LaurentPoly at = a * t;

    QSeries whole = pochhammer_infinite({at, 1, 1}, order) *
                    pochhammer_infinite({t, 1, 1}, order).inverted();
    QSeries split = pochhammer_infinite({at, 1, 2}, order) *
                    pochhammer_infinite({t, 1, 2}, order).inverted() *
                    pochhammer_infinite({at, 2, 2}, order) *
                    pochhammer_infinite({t, 2, 2}, order).inverted();
    compare_series(rep, whole, split, 0, order);

    // Coefficientwise in t: the k = 0 slice is the trivial 1 = 1 instance.
    QSeries sum_form = cauchy_rhs(order, false);
    auto half_sum = [&](int qshift) {
        auto mindeg = [=](int k) { return clamp_degree((1LL + qshift) * k, order); };
        auto term = [&, qshift](int k) {
            long long e = (1LL + qshift) * k;
            int w = static_cast<int>(std::max<long long>(1, order - e));
            QSeries r = pochhammer_finite({a, 0, 2}, k, w);
            r = div_qs_poch(std::move(r), 2, k);
            return (r * t.pow(k)).shifted(clamp_degree(e, order));
        };
        return qs_sum(order, mindeg, term);
    };
    QSeries product_form = half_sum(0) * half_sum(1);
    for (int k = 0; k <= 8 && rep.pass; ++k)
        compare_series(rep, sum_form.coeff_graded_part(Var::t, k),
                       product_form.coeff_graded_part(Var::t, k), 0, order);
    return rep;
}

std::vector<VerificationReport> verify_partition_properties(int n_max) {
    std::vector<VerificationReport> out;

    {
        VerificationReport rep = make_check_report("euler-bijection-roundtrip", n_max);
        Timer timer(rep);
        for (auto [family, step] : {std::pair{Family::O4, 4}, std::pair{Family::D3, 3}}) {
            for (int n = 0; n <= n_max && rep.pass; ++n) {
                for (const Partition& p : enumerate_family(n, family)) {
                    Partition back = euler_add(euler_subtract(p, step), step);
                    if (!(back == p)) {
                        record_fail(rep, n, LaurentPoly(0), LaurentPoly(0));
                        break;
                    }
                }
            }
        }
        out.push_back(rep);
    }

    {
        VerificationReport rep = make_check_report("chain-distinct-part-correspondence", n_max);
        Timer timer(rep);
        for (int n = 0; n <= n_max && rep.pass; ++n) {
            for (const Partition& p : enumerate_family(n, Family::O4)) {
                Partition reduced = euler_subtract(p, 4);
                bool all_odd = true;
                for (int part : reduced.parts()) all_odd = all_odd && part % 2 == 1;
                int chains = static_cast<int>(chain_decompose(p, 4).chains.size());
                if (!all_odd || reduced.size() != p.size() ||
                    reduced.distinct_count() != chains) {
                    record_fail(rep, n, LaurentPoly(reduced.distinct_count()),
                                LaurentPoly(chains));
                    break;
                }
            }
        }
        out.push_back(rep);
    }

    {
        VerificationReport rep = make_check_report("chains-least4-equal-least5-on-odd", n_max);
        Timer timer(rep);
        for (int n = 0; n <= n_max && rep.pass; ++n) {
            for (const Partition& p : enumerate_family(n, Family::O4)) {
                ChainDecomposition d = chain_decompose(p, 4);
                if (d.count_with_least_at_least(4) != d.count_with_least_at_least(5)) {
                    record_fail(rep, n, LaurentPoly(d.count_with_least_at_least(4)),
                                LaurentPoly(d.count_with_least_at_least(5)));
                    break;
                }
            }
        }
        out.push_back(rep);
    }

    const struct {
        const char* name;
        Family lf, rf;
        WeightId lw, rw;
    } weighted[] = {
        {"weighted-equality-odd4-vs-distinct24", Family::O4, Family::D24, WeightId::THM1_LHS,
         WeightId::THM1_RHS},
        {"weighted-equality-odd4-refined", Family::O4, Family::D24, WeightId::THM2_LHS,
         WeightId::THM2_RHS},
        {"weighted-equality-gap3-vs-distinct", Family::D3, Family::D, WeightId::THM3_LHS,
         WeightId::THM3_RHS},
    };
    for (const auto& w : weighted) {
        VerificationReport rep = make_check_report(w.name, n_max);
        Timer timer(rep);
        for (int n = 0; n <= n_max && rep.pass; ++n) {
            LaurentPoly l = weighted_sum(n, w.lf, w.lw);
            LaurentPoly r = weighted_sum(n, w.rf, w.rw);
            if (!(l == r)) record_fail(rep, n, l, r);
        }
        out.push_back(rep);
    }

    {
        VerificationReport rep = make_check_report("gap2-counts-vs-mod8-counts", n_max);
        Timer timer(rep);
        for (int n = 0; n <= n_max && rep.pass; ++n) {
            long long g1 = count_family(n, Family::GG1);
            long long m1 = count_family(n, Family::Mod8_1);
            if (g1 != m1) record_fail(rep, n, LaurentPoly(Rational(g1)), LaurentPoly(Rational(m1)));
            long long g2 = count_family(n, Family::GG2);
            long long m2 = count_family(n, Family::Mod8_2);
            if (g2 != m2) record_fail(rep, n, LaurentPoly(Rational(g2)), LaurentPoly(Rational(m2)));
        }
        out.push_back(rep);
    }

    {
        VerificationReport rep = make_check_report("even-parts-are-multiples-of-4", n_max);
        Timer timer(rep);
        for (int n = 0; n <= n_max && rep.pass; ++n) {
            for (const Partition& p : enumerate_family(n, Family::D24)) {
                if (p.count_mod(0, 2) != p.count_mod(0, 4)) {
                    record_fail(rep, n, LaurentPoly(p.count_mod(0, 2)),
                                LaurentPoly(p.count_mod(0, 4)));
                    break;
                }
            }
        }
        out.push_back(rep);
    }

    {
        VerificationReport rep = make_check_report("generating-functions-by-part-count", n_max);
        Timer timer(rep);
        const LaurentPoly z = pvar(Var::z);
        const LaurentPoly wchain = LaurentPoly(1) - z * z;
        for (int k = 0; k <= 5 && rep.pass; ++k) {
            QSeries with_least3 = g3k(k, n_max + 1);
            QSeries with_least1 = k >= 1 ? g1k_star(k, n_max + 1) : QSeries::zero(n_max + 1);
            for (int n = 0; n <= n_max && rep.pass; ++n) {
                LaurentPoly sum3, sum1;
                for (const Partition& p : enumerate_family(n, Family::O4)) {
                    if (p.size() != k) continue;
                    LaurentPoly w = weight(p, WeightId::THM1_LHS);
                    if (!p.empty() && p.least_part() == 1)
                        sum1 += w;
                    else
                        sum3 += w;
                }
                if (!(sum3 == with_least3.coeff(n)))
                    record_fail(rep, n, sum3, with_least3.coeff(n));
                if (!(sum1 == with_least1.coeff(n)))
                    record_fail(rep, n, sum1, with_least1.coeff(n));
            }
        }
        out.push_back(rep);
    }

    {
        VerificationReport rep = make_check_report("weighted-product-principle", n_max);
        Timer timer(rep);
        const LaurentPoly z = pvar(Var::z);
        const LaurentPoly t = pvar(Var::t);
        const int order = std::min(n_max, 20) + 1;
        const std::vector<std::vector<int>> js = {{1, 2, 3}, {2, 5}, {1, 4, 9}};
        for (const auto& J : js) {
            QSeries prod = QSeries::one(order);
            for (int j : J) prod = prod.mul_binomial(t * z, j).div_binomial(t, j);
            // All multisets with parts in J, weighted t^nu (1-z)^(distinct parts).
            for (int n = 0; n < order && rep.pass; ++n) {
                LaurentPoly total;
                std::function<void(std::size_t, int, int, int)> rec =
                    [&](std::size_t idx, int rem, int nu, int nd) {
                        if (idx == J.size()) {
                            if (rem == 0) total += t.pow(nu) * (LaurentPoly(1) - z).pow(nd);
                            return;
                        }
                        rec(idx + 1, rem, nu, nd);
                        for (int mult = 1; J[idx] * mult <= rem; ++mult)
                            rec(idx + 1, rem - J[idx] * mult, nu + mult, nd + 1);
                    };
                rec(0, n, 0, 0);
                if (!(total == prod.coeff(n))) record_fail(rep, n, total, prod.coeff(n));
            }
        }
        out.push_back(rep);
    }

    return out;
}

}  // namespace qident
