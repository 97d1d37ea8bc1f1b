#include "minfact/identities.hpp"

#include <sstream>
#include <stdexcept>

namespace minfact::identities {

Integer binomial(long long x, long long y) {
    if (y < 0) return 0;
    // Falling product over y terms; correct for negative x too, and zero by
    // itself whenever 0 <= x < y because a factor hits zero.
    Integer num = 1;
    for (long long i = 0; i < y; ++i) num *= Integer(x - i);
    Integer den = 1;
    for (long long i = 2; i <= y; ++i) den *= Integer(i);
    Integer q = num / den;
    if (q * den != num)
        throw std::logic_error("binomial product was not divisible by y!");
    return q;
}

std::pair<Integer, Integer> vandermonde_like_sum(long long a, long long b, long long c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("vandermonde_like_sum needs a,b,c >= 0");
    Integer lhs = 0;
    for (long long d = 0; d <= c; ++d) lhs += binomial(a + d, d) * binomial(b - d, c - d);
    return {lhs, binomial(a + b + 1, c)};
}

std::pair<Integer, Integer> weighted_vandermonde_sum(long long a, long long b, long long c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("weighted_vandermonde_sum needs a,b,c >= 0");
    Integer lhs = 0;
    for (long long d = 0; d <= c; ++d)
        lhs += Integer(d) * binomial(a + d, d) * binomial(b - d, c - d);
    return {lhs, Integer(a + 1) * binomial(a + b + 1, c - 1)};
}

namespace {

// x^e for possibly negative e; x must be nonzero when e < 0.
Rational rational_pow(const Rational& x, long long e) {
    if (e < 0) {
        if (x == 0) throw std::domain_error("negative power of zero");
        return Rational(1) / rational_pow(x, -e);
    }
    Rational r = 1;
    for (long long i = 0; i < e; ++i) r *= x;
    return r;
}

std::string render(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

std::pair<Rational, Rational> poly_identity_weighted(int k, const Rational& x,
                                                     const Rational& y) {
    if (k < 2) throw std::invalid_argument("poly_identity_weighted needs k >= 2");
    if (x == 0) throw std::domain_error("poly_identity_weighted needs x != 0");
    Rational lhs = 0;
    for (int m = 2; m <= k; ++m)
        lhs += Rational(m) * Rational(binomial(k, m)) * rational_pow(x, k - m - 1) *
               rational_pow(y, m - 1);
    const Rational rhs =
        Rational(k) * (rational_pow(x + y, k - 1) / x - rational_pow(x, k - 2));
    return {lhs, rhs};
}

std::pair<Rational, Rational> poly_identity_plain(int k, const Rational& x,
                                                  const Rational& y) {
    if (k < 2) throw std::invalid_argument("poly_identity_plain needs k >= 2");
    if (x == 0) throw std::domain_error("poly_identity_plain needs x != 0");
    Rational lhs = 0;
    for (int m = 2; m <= k; ++m)
        lhs += Rational(binomial(k, m)) * rational_pow(x, k - m - 1) * rational_pow(y, m);
    const Rational rhs = rational_pow(x + y, k) / x - rational_pow(x, k - 1) -
                         Rational(k) * rational_pow(x, k - 2) * y;
    return {lhs, rhs};
}

std::pair<Rational, Rational> average_vr(long long m, long long k, long long n,
                                         long long c, long long d,
                                         long long p_prime, long long p_last) {
    if (k < 2) throw std::invalid_argument("average_vr needs k >= 2");
    if (c < 1) throw std::invalid_argument("average_vr needs c >= 1");
    const Rational form1 = Rational(m, k) * Rational(n + k + c) - Rational(m) -
                           Rational(d) - Rational(p_last) -
                           Rational(d, c) * Rational(p_prime);
    const Rational form2 = Rational(m * n + m * c - k * p_last, k) -
                           Rational(d) * Rational(p_prime + c, c);
    return {form1, form2};
}

std::vector<SuiteResult> run_binomial_grid(int max_abc) {
    const std::string grid =
        "0<=a,b,c<=" + std::to_string(max_abc);
    SuiteResult plain{"vandermonde-like", grid, 0, 0, ""};
    SuiteResult weighted{"vandermonde-weighted", grid, 0, 0, ""};
    for (long long a = 0; a <= max_abc; ++a)
        for (long long b = 0; b <= max_abc; ++b)
            for (long long c = 0; c <= max_abc; ++c) {
                const auto abc = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                 " c=" + std::to_string(c);
                ++plain.checked;
                if (auto [l, r] = vandermonde_like_sum(a, b, c); l != r) {
                    if (plain.failures++ == 0) plain.first_failure = abc;
                }
                ++weighted.checked;
                if (auto [l, r] = weighted_vandermonde_sum(a, b, c); l != r) {
                    if (weighted.failures++ == 0) weighted.first_failure = abc;
                }
            }
    return {plain, weighted};
}

std::vector<SuiteResult> run_poly_grid(int max_k) {
    const std::vector<Rational> samples = {
        1, -1, 2, -2, 3, -3, Rational(1, 2), Rational(-1, 3), 5};
    const std::string grid = "2<=k<=" + std::to_string(max_k) +
                             ", x,y in {1,-1,2,-2,3,-3,1/2,-1/3,5}";
    SuiteResult weighted{"poly-weighted", grid, 0, 0, ""};
    SuiteResult plain{"poly-plain", grid, 0, 0, ""};
    for (int k = 2; k <= max_k; ++k)
        for (const auto& x : samples)
            for (const auto& y : samples) {
                const auto kxy = "k=" + std::to_string(k) + " x=" + render(x) +
                                 " y=" + render(y);
                ++weighted.checked;
                if (auto [l, r] = poly_identity_weighted(k, x, y); l != r) {
                    if (weighted.failures++ == 0) weighted.first_failure = kxy;
                }
                ++plain.checked;
                if (auto [l, r] = poly_identity_plain(k, x, y); l != r) {
                    if (plain.failures++ == 0) plain.first_failure = kxy;
                }
            }
    return {weighted, plain};
}

SuiteResult run_average_vr_grid() {
    // Five-point samples decide the identity: every free variable enters
    // both forms with degree at most one, and k, c run over full ranges.
    const std::vector<long long> vals = {-10, -3, 0, 1, 7};
    SuiteResult res{"face-average-two-forms",
                    "m,n,d,p',p_last in {-10,-3,0,1,7}, 2<=k<=10, 1<=c<=10", 0, 0, ""};
    for (long long k = 2; k <= 10; ++k)
        for (long long c = 1; c <= 10; ++c)
            for (long long m : vals)
                for (long long n : vals)
                    for (long long d : vals)
                        for (long long pp : vals)
                            for (long long pl : vals) {
                                ++res.checked;
                                auto [f1, f2] = average_vr(m, k, n, c, d, pp, pl);
                                if (f1 != f2 && res.failures++ == 0)
                                    res.first_failure =
                                        "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                        " n=" + std::to_string(n) + " c=" + std::to_string(c) +
                                        " d=" + std::to_string(d) + " p'=" + std::to_string(pp) +
                                        " p_last=" + std::to_string(pl);
                            }
    return res;
}

std::vector<SuiteResult> run_all_grids() {
    std::vector<SuiteResult> all = run_binomial_grid();
    for (auto& s : run_poly_grid()) all.push_back(std::move(s));
    all.push_back(run_average_vr_grid());
    return all;
}

}  // namespace minfact::identities
