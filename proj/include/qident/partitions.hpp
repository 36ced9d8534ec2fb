#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qident/laurent.hpp"

namespace qident {

// Weakly decreasing list of positive parts; the empty partition is the
// unique partition of 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    int sum() const;                     // sigma
    int size() const;                    // nu, the number of parts
    int count_mod(int r, int m) const;   // nu(.; r, m)
    int distinct_count() const;          // nu_d
    int distinct_count_ge(int l) const;  // nu_{d,l}
    int least_part() const;              // EmptyPartition on the empty partition

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string to_string() const;

  private:
    std::vector<int> parts_;
};

struct PartitionStats {
    int sigma = 0;
    int nu = 0;
    int nu_distinct = 0;
    std::optional<int> least_part;  // empty for the empty partition
};

PartitionStats statistics(const Partition& p);

// The partition families under study. Gap conditions read along the sorted
// parts; the empty partition belongs to every family.
enum class Family {
    O4,            // odd parts, successive gaps >= 4
    D24,           // distinct parts, none == 2 (mod 4)
    D3,            // gaps >= 3, no part divisible by 3
    D,             // distinct parts
    GG1,           // gaps >= 2, gap exactly 2 only between odd parts
    GG2,           // GG1 with least part >= 3
    Unrestricted,  // all partitions
    Mod8_1,        // parts == 1, 4, 7 (mod 8), repeats allowed
    Mod8_2,        // parts == 3, 4, 5 (mod 8), repeats allowed
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

bool in_family(const Partition& p, Family f);

// All partitions of n in the family, each exactly once, in descending
// lexicographic order.
std::vector<Partition> enumerate_family(int n, Family f);
long long count_family(int n, Family f);

// Split into maximal runs of consecutive sorted parts differing by exactly
// `gap`. Chains are listed largest-first and each chain keeps the
// partition's descending part order, so concatenating them reproduces the
// partition.
struct ChainDecomposition {
    int gap = 0;
    std::vector<std::vector<int>> chains;

    // N_lambda: chains whose least part is >= lambda.
    int count_with_least_at_least(int lambda) const;
};

ChainDecomposition chain_decompose(const Partition& p, int gap);

// Multiplicative partition weights. THM* tags are the two sides of the
// weighted identities over (O4, D24), (O4, D24) refined, and (D3, D);
// GG_REFINED_* weigh each odd part delta and each even part delta*a, with
// delta instantiated as +1 or -1.
enum class WeightId {
    THM1_LHS,
    THM1_RHS,
    THM2_LHS,
    THM2_RHS,
    THM3_LHS,
    THM3_RHS,
    GG_REFINED_G,
    GG_REFINED_H,
};

const char* weight_name(WeightId w);
std::optional<WeightId> weight_from_name(const std::string& s);

// The family a weight presumes; weight() raises FamilyMismatch outside it.
Family weight_family(WeightId w);

LaurentPoly weight(const Partition& p, WeightId w, int delta = 1);
LaurentPoly weighted_sum(int n, Family f, WeightId w, int delta = 1);

// Subtract 0 from the smallest part, `step` from the second smallest,
// 2*step from the third, and so on. Defined when the sorted parts differ
// pairwise by >= step (InvalidGap otherwise); euler_add is its inverse and
// is total.
Partition euler_subtract(const Partition& p, int step);
Partition euler_add(const Partition& p, int step);

}  // namespace qident
