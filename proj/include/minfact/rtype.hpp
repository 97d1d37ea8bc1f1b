#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "minfact/int128.hpp"

namespace minfact {

// Branching data for the search: degree n, the tuple of factor cycle
// lengths a_1..a_k (order is meaningful to the enumerator, the closed
// formulas only see the multiset), and the multiset p_1..p_c of short
// cycle lengths of the target permutation.  The target's remaining cycle
// has length n - sum(p).
struct RamificationType {
    int n = 0;
    std::vector<int> a;
    std::vector<int> p;

    int k() const { return static_cast<int>(a.size()); }
    int c() const { return static_cast<int>(p.size()); }
    long long p_sum() const;
    long long a_sum() const;
    // Length of the target's long cycle, n - sum(p).
    int exterior_length() const;

    bool operator==(const RamificationType& o) const = default;
};

struct ValidationReport {
    bool ok = false;
    std::vector<std::string> violations;  // every failed rule, not just the first
};

// Checks all admissibility rules and reports every violation:
//   k >= 2, every a_j >= 2, every p_i >= 1, sum(p) < n, a_j > sum(p),
//   sum(a) = n + k + c - 1.
ValidationReport validate(const RamificationType& t);

// |Aut| of the multiset p: product of factorials of the value multiplicities.
// The identity permutation of an empty multiset counts as 1.
u128 aut_size(const std::vector<int>& p);

struct SkippedType {
    RamificationType type;
    u128 estimate = 0;  // candidate-tuple bound that exceeded the budget
};

struct TypeSweep {
    std::vector<RamificationType> types;
    std::vector<SkippedType> skipped;
};

// Every valid type with 2 <= n <= n_max, in a fixed deterministic order:
// ascending (n, sum(p), p, k, a) with a and p emitted nondecreasing.
// Types whose estimated search size (product of candidate counts over the
// first k-1 colors; the last factor of a product is forced) exceeds
// `bound` land in `skipped` instead of `types`.
TypeSweep admissible_types(int n_max, u128 bound);

// JSON literal of the form {"n":5,"a":[4,4],"p":[1,1]}.
nlohmann::ordered_json to_json(const RamificationType& t);
RamificationType type_from_json(const nlohmann::json& j);
RamificationType parse_type(const std::string& text);

// "(n=5, a=(4,4), p=(1,1))" -- used by log and error messages.
std::string describe(const RamificationType& t);

}  // namespace minfact
