#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "minfact/int128.hpp"
#include "minfact/perm.hpp"
#include "minfact/rtype.hpp"

namespace minfact {

// One solution of sigma_k ... sigma_1 = sigma: factors[j-1] is the color-j
// factor, an a_j-cycle.  Instances are only created through `create`, which
// re-derives every defining property, so holding a Factorization is proof
// that it is genuinely a minimal transitive factorization of the canonical
// target of its type.
struct Factorization {
    RamificationType type;
    Permutation sigma;             // canonical_sigma(type)
    std::vector<Permutation> factors;

    // Validates: each factor is one a_j-cycle, the product equals the
    // canonical target, the factor supports connect all n points, and the
    // total cycle count is k*n - n + 2.  Throws invariant_error otherwise.
    static Factorization create(const RamificationType& t,
                                std::vector<Permutation> factors);

    bool operator==(const Factorization& o) const = default;
};

// All cycles of length a in S_n, ordered lexicographically by canonical
// cycle form (min point first).  Size is C(n,a) * (a-1)!.
std::vector<Permutation> cycles_of_length(int n, int a);

struct SearchStats {
    std::uint64_t nodes = 0;      // candidate extensions examined
    std::uint64_t emitted = 0;    // factorizations found
};

struct CountOptions {
    int threads = 1;          // workers for counting; partitioned by first factor
    bool use_pruning = true;  // false = plain nested loops, for soundness checks
    SearchStats* stats = nullptr;
};

// Depth-first search in color order.  With pruning on, a partial product is
// abandoned once the defect of the still-required remainder exceeds the
// total defect the remaining factors can supply, and the last factor is
// checked directly instead of enumerated.  Emission order is lexicographic
// in the tuple of factor canonical forms and independent of the options.
void enumerate_minimal_factorizations(
    const RamificationType& t,
    const std::function<void(const Factorization&)>& emit,
    const CountOptions& opts = {});

// Count without materializing.  Exact; throws std::overflow_error if the
// count would not fit in 128 bits.  threads > 1 splits the first color's
// candidates across workers; the sum is order-independent, so the result
// is identical to a sequential run.
u128 count_minimal_factorizations(const RamificationType& t,
                                  const CountOptions& opts = {});

std::vector<Factorization> all_minimal_factorizations(const RamificationType& t);

// One JSON-lines record: {"sigma":"(1)(2 3)","factors":["(1)(2 3)","..."]}.
nlohmann::ordered_json to_json(const Factorization& f);

}  // namespace minfact
