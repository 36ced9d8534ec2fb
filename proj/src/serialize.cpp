#include "qident/serialize.hpp"

namespace qident {

Json poly_to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Json term;
        term["coeff"] = rational_to_string(c);
        Json exps;
        exps["a"] = m[Var::a];
        exps["b"] = m[Var::b];
        exps["z"] = m[Var::z];
        exps["t"] = m[Var::t];
        term["exps"] = exps;
        arr.push_back(std::move(term));
    }
    return arr;
}

Json coeffs_to_json(const QSeries& x) {
    Json arr = Json::array();
    for (int n = x.lower(); n < x.order(); ++n) {
        Json entry;
        entry["degree"] = n;
        entry["poly"] = poly_to_json(x.coeff(n));
        arr.push_back(std::move(entry));
    }
    return arr;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["identity"] = r.name;
    j["order"] = r.order;
    j["delta"] = r.delta ? Json(*r.delta) : Json(nullptr);
    j["status"] = r.pass ? "pass" : "fail";
    if (r.first_mismatch) {
        Json m;
        m["degree"] = r.first_mismatch->degree;
        m["lhs"] = poly_to_json(r.first_mismatch->lhs);
        m["rhs"] = poly_to_json(r.first_mismatch->rhs);
        j["first_mismatch"] = std::move(m);
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

Json partitions_to_json(int n, Family f, std::optional<WeightId> w, int delta) {
    Json j;
    j["n"] = n;
    j["family"] = family_name(f);
    Json parts = Json::array();
    Json weights = Json::array();
    LaurentPoly total;
    for (const Partition& p : enumerate_family(n, f)) {
        parts.push_back(p.parts());
        if (w) {
            LaurentPoly wt = weight(p, *w, delta);
            weights.push_back(poly_to_json(wt));
            total += wt;
        }
    }
    j["partitions"] = std::move(parts);
    if (w) {
        j["weights"] = std::move(weights);
        j["total"] = poly_to_json(total);
    }
    return j;
}

}  // namespace qident
