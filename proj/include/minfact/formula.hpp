#pragma once

#include <optional>

#include <json.hpp>

#include "minfact/int128.hpp"
#include "minfact/rtype.hpp"

namespace minfact {

// Closed-form number of minimal transitive factorizations of the canonical
// target of t:
//
//     (k-1)k(k+1)...(k+c-2) * p_1^2...p_c^2 * (n-p)^(k-1)
//
// The factorial ratio is evaluated as that rising product, so k regions
// with no short cycles (c = 0) need no special case.
u128 factorization_count_closed(const RamificationType& t);

// Closed-form number of constellations:
//
//     (k-1)k...(k+c-2) * p_1...p_c * (n-p)^(k-2) / aut_size(p)
//
// The division is asserted exact; a remainder throws invariant_error.
u128 constellation_count_closed(const RamificationType& t);

// The same quantity before dividing by aut_size(p): the count with the
// interior faces of equal length kept distinguishable.
u128 labeled_constellation_count(const RamificationType& t);

// Raw-parameter version used by the induction cross-check, where the
// reduced pole multiset does not belong to any valid type of the same n:
// rising(k-1, #poles terms) * prod(poles) * long_len^(k-2).
u128 labeled_constellation_count(int k, const std::vector<int>& poles, int long_len);

// Cacti special case: factorizations of an n-cycle into k cycles with no
// short cycles in the target give n^(k-2) constellations.  Requires that a
// c = 0 type with these parameters exists at all (2 <= k <= n-1).
u128 cacti_count(int n, int k);

// One row of a verification run: closed values always, brute-force and
// orbit recounts when requested, and whether everything that can be
// compared agrees.
struct CountReport {
    RamificationType type;
    u128 closed_factorizations = 0;
    u128 closed_constellations = 0;
    std::optional<u128> brute_factorizations;
    std::optional<u128> orbit_constellations;
    bool agree = true;
};

struct ReportOptions {
    bool brute = false;
    bool orbits = false;
    int threads = 1;
};

// Runs the closed formulas and, on request, the enumerator and the orbit
// count, and cross-checks the factorization/constellation ratio
// p_1...p_c*(n-p)*aut_size(p) (exact; violation throws invariant_error).
CountReport make_count_report(const RamificationType& t, const ReportOptions& opts = {});

nlohmann::ordered_json to_json(const CountReport& r);

}  // namespace minfact
