#include "qident/partitions.hpp"

#include <algorithm>
#include <sstream>

#include "qident/errors.hpp"

namespace qident {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

int Partition::sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

int Partition::size() const {
    return static_cast<int>(parts_.size());
}

int Partition::count_mod(int r, int m) const {
    if (m <= 0) throw Error("modulus must be positive");
    int rr = ((r % m) + m) % m;
    int c = 0;
    for (int p : parts_)
        if (p % m == rr) ++c;
    return c;
}

int Partition::distinct_count() const {
    int c = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1]) ++c;
    return c;
}

int Partition::distinct_count_ge(int l) const {
    int c = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if ((i == 0 || parts_[i] != parts_[i - 1]) && parts_[i] >= l) ++c;
    return c;
}

int Partition::least_part() const {
    if (parts_.empty()) throw EmptyPartition("least part of the empty partition is undefined");
    return parts_.back();
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

PartitionStats statistics(const Partition& p) {
    PartitionStats s;
    s.sigma = p.sum();
    s.nu = p.size();
    s.nu_distinct = p.distinct_count();
    if (!p.empty()) s.least_part = p.least_part();
    return s;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::O4: return "O4";
        case Family::D24: return "D24";
        case Family::D3: return "D3";
        case Family::D: return "D";
        case Family::GG1: return "GG1";
        case Family::GG2: return "GG2";
        case Family::Unrestricted: return "UNRESTRICTED";
        case Family::Mod8_1: return "MOD8(1)";
        case Family::Mod8_2: return "MOD8(2)";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::O4, Family::D24, Family::D3, Family::D, Family::GG1, Family::GG2,
                     Family::Unrestricted, Family::Mod8_1, Family::Mod8_2})
        if (s == family_name(f)) return f;
    return std::nullopt;
}

namespace {

bool part_allowed(int p, Family f) {
    switch (f) {
        case Family::O4: return p % 2 == 1;
        case Family::D24: return p % 4 != 2;
        case Family::D3: return p % 3 != 0;
        case Family::D: return true;
        case Family::GG1: return true;
        case Family::GG2: return p >= 3;
        case Family::Unrestricted: return true;
        case Family::Mod8_1: return p % 8 == 1 || p % 8 == 4 || p % 8 == 7;
        case Family::Mod8_2: return p % 8 == 3 || p % 8 == 4 || p % 8 == 5;
    }
    return false;
}

// Largest part allowed directly below `prev` in the sorted order.
int max_next_part(int prev, Family f) {
    switch (f) {
        case Family::O4: return prev - 4;
        case Family::D24:
        case Family::D: return prev - 1;
        case Family::D3: return prev - 3;
        case Family::GG1:
        case Family::GG2: return prev % 2 == 0 ? prev - 3 : prev - 2;
        case Family::Unrestricted:
        case Family::Mod8_1:
        case Family::Mod8_2: return prev;
    }
    return 0;
}

void enumerate_rec(int remaining, int cap, Family f, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
        if (!part_allowed(p, f)) continue;
        acc.push_back(p);
        enumerate_rec(remaining - p, std::min(remaining - p, max_next_part(p, f)), f, acc, out);
        acc.pop_back();
    }
}

}  // namespace

bool in_family(const Partition& p, Family f) {
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!part_allowed(parts[i], f)) return false;
        if (i > 0 && parts[i] > max_next_part(parts[i - 1], f)) return false;
    }
    return true;
}

std::vector<Partition> enumerate_family(int n, Family f) {
    if (n < 0) throw Error("cannot enumerate partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, f, acc, out);
    return out;
}

long long count_family(int n, Family f) {
    return static_cast<long long>(enumerate_family(n, f).size());
}

int ChainDecomposition::count_with_least_at_least(int lambda) const {
    int c = 0;
    for (const auto& chain : chains)
        if (chain.back() >= lambda) ++c;
    return c;
}

ChainDecomposition chain_decompose(const Partition& p, int gap) {
    if (gap < 1) throw InvalidGap("chain gap must be >= 1");
    ChainDecomposition d;
    d.gap = gap;
    for (int part : p.parts()) {
        if (!d.chains.empty() && d.chains.back().back() - part == gap)
            d.chains.back().push_back(part);
        else
            d.chains.push_back({part});
    }
    return d;
}

const char* weight_name(WeightId w) {
    switch (w) {
        case WeightId::THM1_LHS: return "THM1_LHS";
        case WeightId::THM1_RHS: return "THM1_RHS";
        case WeightId::THM2_LHS: return "THM2_LHS";
        case WeightId::THM2_RHS: return "THM2_RHS";
        case WeightId::THM3_LHS: return "THM3_LHS";
        case WeightId::THM3_RHS: return "THM3_RHS";
        case WeightId::GG_REFINED_G: return "GG_REFINED_G";
        case WeightId::GG_REFINED_H: return "GG_REFINED_H";
    }
    return "?";
}

std::optional<WeightId> weight_from_name(const std::string& s) {
    for (WeightId w : {WeightId::THM1_LHS, WeightId::THM1_RHS, WeightId::THM2_LHS,
                       WeightId::THM2_RHS, WeightId::THM3_LHS, WeightId::THM3_RHS,
                       WeightId::GG_REFINED_G, WeightId::GG_REFINED_H})
        if (s == weight_name(w)) return w;
    return std::nullopt;
}

Family weight_family(WeightId w) {
    switch (w) {
        case WeightId::THM1_LHS:
        case WeightId::THM2_LHS: return Family::O4;
        case WeightId::THM1_RHS:
        case WeightId::THM2_RHS: return Family::D24;
        case WeightId::THM3_LHS: return Family::D3;
        case WeightId::THM3_RHS: return Family::D;
        case WeightId::GG_REFINED_G: return Family::GG1;
        case WeightId::GG_REFINED_H: return Family::GG2;
    }
    return Family::Unrestricted;
}

LaurentPoly weight(const Partition& p, WeightId w, int delta) {
    if (!in_family(p, weight_family(w)))
        throw FamilyMismatch("partition " + p.to_string() + " is outside the family of " +
                             weight_name(w));
    const LaurentPoly a = LaurentPoly::variable(Var::a);
    const LaurentPoly b = LaurentPoly::variable(Var::b);
    const LaurentPoly z = LaurentPoly::variable(Var::z);
    const LaurentPoly one(1);
    switch (w) {
        case WeightId::THM1_LHS: {
            int n5 = chain_decompose(p, 4).count_with_least_at_least(5);
            return z.pow(p.size()) * (one - z * z).pow(n5);
        }
        case WeightId::THM1_RHS:
            return z.pow(p.count_mod(1, 2)) * (-(z * z)).pow(p.count_mod(0, 2));
        case WeightId::THM2_LHS: {
            int n5 = chain_decompose(p, 4).count_with_least_at_least(5);
            return a.pow(p.count_mod(1, 4)) * b.pow(p.count_mod(3, 4)) * (one - a * b).pow(n5);
        }
        case WeightId::THM2_RHS:
            return a.pow(p.count_mod(1, 4)) * b.pow(p.count_mod(3, 4)) *
                   (-(a * b)).pow(p.count_mod(0, 4));
        case WeightId::THM3_LHS: {
            int n3 = chain_decompose(p, 3).count_with_least_at_least(3);
            return a.pow(p.count_mod(1, 3)) * b.pow(p.count_mod(2, 3)) * (one - a * b).pow(n3);
        }
        case WeightId::THM3_RHS:
            return a.pow(p.count_mod(1, 3)) * b.pow(p.count_mod(2, 3)) *
                   (-(a * b)).pow(p.count_mod(0, 3));
        case WeightId::GG_REFINED_G:
        case WeightId::GG_REFINED_H: {
            if (delta != 1 && delta != -1) throw Error("delta must be +1 or -1");
            return LaurentPoly(Rational(delta)).pow(p.size()) * a.pow(p.count_mod(0, 2));
        }
    }
    return one;
}

LaurentPoly weighted_sum(int n, Family f, WeightId w, int delta) {
    LaurentPoly total;
    for (const Partition& p : enumerate_family(n, f)) total += weight(p, w, delta);
    return total;
}

Partition euler_subtract(const Partition& p, int step) {
    std::vector<int> asc(p.parts().rbegin(), p.parts().rend());
    for (std::size_t j = 0; j < asc.size(); ++j) {
        asc[j] -= step * static_cast<int>(j);
        if (asc[j] <= 0)
            throw InvalidGap("subtraction yields a nonpositive part in " + p.to_string());
        if (j > 0 && asc[j] < asc[j - 1])
            throw InvalidGap("subtraction yields disordered parts in " + p.to_string());
    }
    return Partition(std::vector<int>(asc.rbegin(), asc.rend()));
}

Partition euler_add(const Partition& p, int step) {
    std::vector<int> asc(p.parts().rbegin(), p.parts().rend());
    for (std::size_t j = 0; j < asc.size(); ++j) asc[j] += step * static_cast<int>(j);
    return Partition(std::vector<int>(asc.rbegin(), asc.rend()));
}

}  // namespace qident
