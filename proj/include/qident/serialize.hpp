#pragma once

#include <optional>

#include "json.hpp"
#include "qident/identities.hpp"

namespace qident {

// ordered_json keeps insertion order, which makes every emitted document
// canonical: parsing and re-serializing is byte-identical.
using Json = nlohmann::ordered_json;

// [{coeff: "num/den", exps: {a,b,z,t}}, ...] in canonical monomial order.
Json poly_to_json(const LaurentPoly& p);

// [{degree, poly}, ...] for every degree in the window.
Json coeffs_to_json(const QSeries& x);

Json report_to_json(const VerificationReport& r);

// {n, family, partitions[, weights, total]}
Json partitions_to_json(int n, Family f, std::optional<WeightId> w, int delta = 1);

}  // namespace qident
