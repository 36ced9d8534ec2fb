#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qident/partitions.hpp"
#include "qident/qseries.hpp"

namespace qident {

enum class Side { lhs, rhs };

// Negative controls: drop_factor removes one named product factor from the
// entry's product side, perturb_exponent bumps one exponent on its sum side.
// Either must turn verification into a fail at a finite degree.
enum class Mutation { none, drop_factor, perturb_exponent };

struct Mismatch {
    int degree = 0;
    LaurentPoly lhs;
    LaurentPoly rhs;
};

struct VerificationReport {
    std::string name;
    int order = 0;
    std::optional<int> delta;  // set for sign-instantiated runs
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    long long elapsed_ms = 0;
};

// One catalog entry. Both side builders must produce windows covering
// [0, order) with nonnegative valuation; sign-parametrized entries list
// their delta instantiations and are verified once per sign.
struct IdentitySpec {
    std::string name;
    std::string notes;
    std::vector<int> delta_variants;  // empty for plain entries
    std::function<QSeries(Side, int order, int delta, Mutation)> build;
    // Valuation bound of the k-th summand of the entry's sum side, when the
    // entry has one; documents the summation cutoff.
    std::function<long long(int)> cutoff;
};

const std::vector<IdentitySpec>& catalog();
const IdentitySpec& find_identity(const std::string& name);  // UnknownIdentity

QSeries build_side(const std::string& name, Side side, int order, int delta = 1);

// Coefficientwise comparison of the two sides on [0, order). Entries with
// delta variants pass only if every sign passes.
VerificationReport verify(const std::string& name, int order);
std::vector<VerificationReport> verify_variants(const std::string& name, int order);
VerificationReport verify_mutated(const std::string& name, int order, Mutation mutation);
// Every entry, in catalog order; entries may be verified concurrently.
std::vector<VerificationReport> verify_all(int order, bool parallel = true);

enum class Theorem { T1, T2, T3 };

// Exhaustive weighted enumeration against the series coefficients, for every
// n <= n_max: T1 against the single-sum identity's sides, T2 against the
// mod-4 double sum, T3 against the mod-3 double sum.
VerificationReport verify_theorem_vs_series(Theorem t, int n_max);

// The refined functions with symbolic a against weighted enumeration over
// the gap-2 families, both signs.
VerificationReport verify_gg_combinatorial(int n_max);

// Substituting b -> 1/a into the double-sum identities reproduces the
// bilateral triple-product specializations, coefficientwise to `order`.
VerificationReport verify_jacobi_reduction(int order);

// Per k <= 8 the regrouped summand identity, plus the equality of the two
// single-sum forms to `order`.
VerificationReport verify_reduction_4_6(int order);

// The even/odd product splitting and its t^k coefficient identities
// (k <= 8), in the t-marked form.
VerificationReport verify_cauchy_split(int order);

// Enumerative partition properties (bijections, chain statistics, weighted
// equalities, gap-2 family counts) up to n_max.
std::vector<VerificationReport> verify_partition_properties(int n_max);

}  // namespace qident
