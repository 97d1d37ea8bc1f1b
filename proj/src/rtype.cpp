#include "minfact/rtype.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace minfact {

long long RamificationType::p_sum() const {
    return std::accumulate(p.begin(), p.end(), 0LL);
}

long long RamificationType::a_sum() const {
    return std::accumulate(a.begin(), a.end(), 0LL);
}

int RamificationType::exterior_length() const {
    return static_cast<int>(n - p_sum());
}

ValidationReport validate(const RamificationType& t) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

    if (t.k() < 2) fail("k must be at least 2 (got k=" + std::to_string(t.k()) + ")");
    for (int i = 0; i < t.k(); ++i)
        if (t.a[i] < 2)
            fail("a[" + std::to_string(i + 1) + "]=" + std::to_string(t.a[i]) +
                 " but every factor length must be at least 2");
    for (int i = 0; i < t.c(); ++i)
        if (t.p[i] < 1)
            fail("p[" + std::to_string(i + 1) + "]=" + std::to_string(t.p[i]) +
                 " but short cycle lengths must be positive");

    const long long ps = t.p_sum();
    if (t.n <= ps)
        fail("n=" + std::to_string(t.n) + " must exceed sum(p)=" + std::to_string(ps));
    for (int i = 0; i < t.k(); ++i)
        if (t.a[i] <= ps)
            fail("a[" + std::to_string(i + 1) + "]=" + std::to_string(t.a[i]) +
                 " must exceed sum(p)=" + std::to_string(ps));

    const long long want = static_cast<long long>(t.n) + t.k() + t.c() - 1;
    if (t.a_sum() != want)
        fail("sum(a)=" + std::to_string(t.a_sum()) + " but n+k+c-1=" + std::to_string(want));

    rep.ok = rep.violations.empty();
    return rep;
}

u128 aut_size(const std::vector<int>& p) {
    std::map<int, int> mult;
    for (int v : p) ++mult[v];
    u128 r = 1;
    for (auto [value, m] : mult) {
        (void)value;
        for (int i = 2; i <= m; ++i) r = checked_mul(r, static_cast<u128>(i));
    }
    return r;
}

namespace {

// C(n,a) * (a-1)!: how many a-cycles S_n contains, i.e. the branching
// factor one search level contributes.
u128 cycle_candidates(int n, int a) {
    u128 binom = 1;
    for (int i = 0; i < a; ++i) {
        binom = checked_mul(binom, static_cast<u128>(n - i));
        binom /= static_cast<u128>(i + 1);  // exact: prefix products of C
    }
    for (int i = 2; i <= a - 1; ++i) binom = checked_mul(binom, static_cast<u128>(i));
    return binom;
}

// Partitions of total into nondecreasing parts >= 1, lexicographic.
void partitions_into(int total, int min_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = min_part; part <= total; ++part) {
        cur.push_back(part);
        partitions_into(total - part, part, cur, out);
        cur.pop_back();
    }
}

// Nondecreasing tuples of fixed length in [lo, hi] with a given sum,
// lexicographic.
void tuples_with_sum(int len, int lo, int hi, int sum, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (len == 0) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    for (int v = lo; v <= hi && static_cast<long long>(v) * len <= sum; ++v) {
        if (sum - v > static_cast<long long>(hi) * (len - 1)) continue;
        cur.push_back(v);
        tuples_with_sum(len - 1, v, hi, sum - v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TypeSweep admissible_types(int n_max, u128 bound) {
    TypeSweep sweep;
    for (int n = 2; n <= n_max; ++n) {
        for (int ps = 0; ps < n; ++ps) {
            std::vector<std::vector<int>> parts;
            if (ps == 0) {
                parts.push_back({});
            } else {
                std::vector<int> cur;
                partitions_into(ps, 1, cur, parts);
            }
            for (const auto& p : parts) {
                const int c = static_cast<int>(p.size());
                const int lo = std::max(2, ps + 1);
                // k(lo) <= n+k+c-1 caps how many factors can fit.
                for (int k = 2; static_cast<long long>(k) * (lo - 1) <= n + c - 1; ++k) {
                    const int target = n + k + c - 1;
                    std::vector<std::vector<int>> tuples;
                    std::vector<int> cur;
                    tuples_with_sum(k, lo, n, target, cur, tuples);
                    for (auto& a : tuples) {
                        RamificationType t{n, std::move(a), p};
                        u128 estimate = 1;
                        bool over = false;
                        for (int j = 0; j + 1 < t.k(); ++j) {
                            estimate = checked_mul(estimate, cycle_candidates(n, t.a[j]));
                            if (estimate > bound) {
                                over = true;
                                break;
                            }
                        }
                        if (over)
                            sweep.skipped.push_back({std::move(t), estimate});
                        else
                            sweep.types.push_back(std::move(t));
                    }
                }
            }
        }
    }
    return sweep;
}

nlohmann::ordered_json to_json(const RamificationType& t) {
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["a"] = t.a;
    j["p"] = t.p;
    return j;
}

RamificationType type_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j.contains("p"))
        throw std::invalid_argument("type literal must be {\"n\":..,\"a\":[..],\"p\":[..]}");
    RamificationType t;
    t.n = j.at("n").get<int>();
    t.a = j.at("a").get<std::vector<int>>();
    t.p = j.at("p").get<std::vector<int>>();
    return t;
}

RamificationType parse_type(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad type literal: ") + e.what());
    }
    return type_from_json(j);
}

std::string describe(const RamificationType& t) {
    std::ostringstream os;
    os << "(n=" << t.n << ", a=(";
    for (int i = 0; i < t.k(); ++i) os << (i ? "," : "") << t.a[i];
    os << "), p=(";
    for (int i = 0; i < t.c(); ++i) os << (i ? "," : "") << t.p[i];
    os << "))";
    return os.str();
}

}  // namespace minfact
