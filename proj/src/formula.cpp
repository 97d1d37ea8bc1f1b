#include "minfact/formula.hpp"

#include <stdexcept>

#include "minfact/constellation.hpp"
#include "minfact/enumerate.hpp"
#include "minfact/errors.hpp"

namespace minfact {

namespace {

void require_valid(const RamificationType& t) {
    const ValidationReport rep = validate(t);
    if (rep.ok) return;
    std::string msg = "invalid ramification type " + describe(t) + ":";
    for (const auto& v : rep.violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
}

// (k-1)k(k+1)...(k+c-2): the ratio (k+c-2)!/(k-2)! without ever forming
// either factorial.  Empty product for c = 0.
u128 rising_from_k_minus_1(int k, int c) {
    u128 r = 1;
    for (int i = 0; i < c; ++i) r = checked_mul(r, static_cast<u128>(k - 1 + i));
    return r;
}

}  // namespace

u128 factorization_count_closed(const RamificationType& t) {
    require_valid(t);
    u128 r = rising_from_k_minus_1(t.k(), t.c());
    for (int v : t.p) {
        r = checked_mul(r, static_cast<u128>(v));
        r = checked_mul(r, static_cast<u128>(v));
    }
    return checked_mul(r, checked_pow(static_cast<u128>(t.exterior_length()),
                                      static_cast<unsigned>(t.k() - 1)));
}

u128 labeled_constellation_count(int k, const std::vector<int>& poles, int long_len) {
    u128 r = rising_from_k_minus_1(k, static_cast<int>(poles.size()));
    for (int v : poles) r = checked_mul(r, static_cast<u128>(v));
    return checked_mul(r, checked_pow(static_cast<u128>(long_len),
                                      static_cast<unsigned>(k - 2)));
}

u128 labeled_constellation_count(const RamificationType& t) {
    require_valid(t);
    return labeled_constellation_count(t.k(), t.p, t.exterior_length());
}

u128 constellation_count_closed(const RamificationType& t) {
    const u128 labeled = labeled_constellation_count(t);
    const u128 aut = aut_size(t.p);
    if (labeled % aut != 0)
        throw invariant_error("labeled constellation count " + to_string(labeled) +
                              " is not divisible by aut size " + to_string(aut) +
                              " for " + describe(t));
    return labeled / aut;
}

u128 cacti_count(int n, int k) {
    if (k < 2 || k > n - 1)
        throw std::invalid_argument(
            "no plain-target type exists for n=" + std::to_string(n) +
            ", k=" + std::to_string(k) + " (need 2 <= k <= n-1)");
    return checked_pow(static_cast<u128>(n), static_cast<unsigned>(k - 2));
}

CountReport make_count_report(const RamificationType& t, const ReportOptions& opts) {
    require_valid(t);
    CountReport rep;
    rep.type = t;
    rep.closed_factorizations = factorization_count_closed(t);
    rep.closed_constellations = constellation_count_closed(t);

    // The two closed counts must be in the exact ratio the orbit grouping
    // produces: p_1...p_c * (n-p) * aut_size(p) factorizations per
    // constellation.
    u128 ratio = aut_size(t.p);
    for (int v : t.p) ratio = checked_mul(ratio, static_cast<u128>(v));
    ratio = checked_mul(ratio, static_cast<u128>(t.exterior_length()));
    if (checked_mul(rep.closed_constellations, ratio) != rep.closed_factorizations)
        throw invariant_error("closed counts of " + describe(t) +
                              " violate the factorization/constellation ratio");

    if (opts.brute) {
        CountOptions copts;
        copts.threads = opts.threads;
        rep.brute_factorizations = count_minimal_factorizations(t, copts);
        if (*rep.brute_factorizations != rep.closed_factorizations) rep.agree = false;
    }
    if (opts.orbits) {
        rep.orbit_constellations = count_constellations_by_orbits(t);
        if (*rep.orbit_constellations != rep.closed_constellations) rep.agree = false;
    }
    return rep;
}

namespace {

// Counts that fit in 64 bits are emitted as JSON numbers, larger ones as
// decimal strings (JSON numbers above 2^64 would silently lose digits).
nlohmann::ordered_json json_count(u128 v) {
    if (v <= static_cast<u128>(UINT64_MAX)) return static_cast<std::uint64_t>(v);
    return to_string(v);
}

}  // namespace

nlohmann::ordered_json to_json(const CountReport& r) {
    nlohmann::ordered_json j;
    j["type"] = to_json(r.type);
    j["closed_factorizations"] = json_count(r.closed_factorizations);
    j["closed_constellations"] = json_count(r.closed_constellations);
    if (r.brute_factorizations) j["brute_factorizations"] = json_count(*r.brute_factorizations);
    if (r.orbit_constellations) j["orbit_constellations"] = json_count(*r.orbit_constellations);
    j["agree"] = r.agree;
    return j;
}

}  // namespace minfact
