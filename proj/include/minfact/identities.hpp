#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace minfact::identities {

// Everything here is exact: big integers and normalized big rationals,
// never floating point.  Each checker evaluates the two sides of an
// identity by independent routes (termwise sum vs closed form) and returns
// both so the caller, not the formula, decides what "equal" means.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the conventions the sums below rely on:
// 0 for y < 0; otherwise x(x-1)...(x-y+1)/y!, which is valid for negative
// x as well and vanishes by itself whenever 0 <= x < y.
Integer binomial(long long x, long long y);

// sum_{d=0}^{c} C(a+d,d) C(b-d,c-d)   vs   C(a+b+1,c)
std::pair<Integer, Integer> vandermonde_like_sum(long long a, long long b, long long c);

// sum_{d=0}^{c} d C(a+d,d) C(b-d,c-d)   vs   (a+1) C(a+b+1,c-1)
std::pair<Integer, Integer> weighted_vandermonde_sum(long long a, long long b, long long c);

// sum_{m=2}^{k} m C(k,m) x^(k-m-1) y^(m-1)   vs   k((x+y)^(k-1)/x - x^(k-2))
std::pair<Rational, Rational> poly_identity_weighted(int k, const Rational& x,
                                                     const Rational& y);

// sum_{m=2}^{k} C(k,m) x^(k-m-1) y^m   vs   (x+y)^k/x - x^(k-1) - k x^(k-2) y
std::pair<Rational, Rational> poly_identity_plain(int k, const Rational& x,
                                                  const Rational& y);

// The average vertex-minus-root count in the face-splitting argument,
// in its two displayed forms:
//   m/k(n+k+c) - m - d - p_last - (d/c) p_prime
//   (mn + mc - k p_last)/k - d(p_prime + c)/c
// Requires k >= 2 and c >= 1 (the second form divides by both).
std::pair<Rational, Rational> average_vr(long long m, long long k, long long n,
                                         long long c, long long d,
                                         long long p_prime, long long p_last);

// Grid sweeps used by the CLI and the acceptance suite.  A failure records
// the first offending input rendered as text; checked counts every tuple.
struct SuiteResult {
    std::string name;
    std::string grid;          // human-readable description of the domain
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
};

// Both binomial relations over 0 <= a,b,c <= max_abc.
std::vector<SuiteResult> run_binomial_grid(int max_abc = 12);

// Both polynomial identities for 2 <= k <= max_k, x and y over
// {1,-1,2,-2,3,-3,1/2,-1/3,5} (all nonzero, so x != 0 holds throughout).
std::vector<SuiteResult> run_poly_grid(int max_k = 12);

// Two-form agreement of average_vr for 2 <= k <= 10, 1 <= c <= 10 and the
// remaining five variables over {-10,-3,0,1,7}.  Every variable enters
// each form with degree at most one, so this sampled box decides the
// identity; the full +-10 box would cost ~2e9 rational evaluations for no
// additional information.
SuiteResult run_average_vr_grid();

std::vector<SuiteResult> run_all_grids();

}  // namespace minfact::identities
