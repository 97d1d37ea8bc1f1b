#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

#include "minfact/perm.hpp"

using minfact::Permutation;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
}

}  // namespace

TEST_CASE("composition applies the right factor first") {
    // (1 2 3) after (1 2): 1 -> 2 -> 3, 2 -> 1 -> 2, 3 -> 3 -> 1, i.e. (1 3).
    const auto s = minfact::from_cycles({{1, 2, 3}});
    const auto t = minfact::from_cycles({{1, 2}, {3}});
    CHECK(minfact::compose(s, t) == minfact::from_cycles({{1, 3}, {2}}));
    // The other order: (2 3) after (1 2) sends 1 -> 2 -> 3, so it is (1 3 2).
    const auto u = minfact::from_cycles({{2, 3}, {1}});
    CHECK(minfact::compose(u, t) == minfact::from_cycles({{1, 3, 2}}));
    CHECK(minfact::compose(t, u) == minfact::from_cycles({{1, 2, 3}}));
}

TEST_CASE("group axioms hold on random permutations") {
    std::mt19937 rng(20240917);
    for (int n : {1, 2, 5, 9}) {
        const auto id = Permutation::identity(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto f = random_perm(n, rng);
            const auto g = random_perm(n, rng);
            const auto h = random_perm(n, rng);
            CHECK(minfact::compose(minfact::compose(f, g), h) ==
                  minfact::compose(f, minfact::compose(g, h)));
            CHECK(minfact::compose(f, f.inverse()) == id);
            CHECK(minfact::compose(f.inverse(), f) == id);
            CHECK(minfact::compose(f, id) == f);
            CHECK(minfact::compose(id, f) == f);
        }
    }
}

TEST_CASE("constructor rejects non-bijections") {
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
}

TEST_CASE("cycle decomposition is canonical and round-trips") {
    const auto p = minfact::from_cycles({{1}, {2, 5}, {3, 6, 4}});
    const auto cs = minfact::cycles(p);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == std::vector<int>{1});
    CHECK(cs[1] == std::vector<int>{2, 5});
    CHECK(cs[2] == std::vector<int>{3, 6, 4});
    CHECK(minfact::from_cycles(cs) == p);

    // Input order and rotation do not matter as long as the cycles tile
    // {1..n}; gaps and overlaps are rejected.
    CHECK(minfact::from_cycles({{6, 4, 3}, {5, 2}, {1}}) == p);
    CHECK_THROWS_AS(minfact::from_cycles({{2, 5}, {3, 6, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(minfact::from_cycles({{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(minfact::from_cycles({{1, 3}}), std::invalid_argument);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = random_perm(8, rng);
        CHECK(minfact::from_cycles(minfact::cycles(q)) == q);
    }
}

TEST_CASE("cycle type and defect") {
    const auto p = minfact::from_cycles({{1}, {2, 5}, {3, 6, 4}});
    CHECK(minfact::cycle_type(p) == std::vector<int>{1, 2, 3});
    CHECK(minfact::defect(p) == 3);  // 6 points minus 3 cycles
    CHECK(minfact::defect(Permutation::identity(4)) == 0);
    CHECK(minfact::defect(minfact::from_cycles({{1, 2, 3, 4}})) == 3);
}

TEST_CASE("conjugation relabels cycles") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_perm(7, rng);
        const auto g = random_perm(7, rng);
        const auto q = minfact::conjugate(g, p);
        CHECK(q == minfact::compose(minfact::compose(g, p), g.inverse()));
        CHECK(minfact::cycle_type(q) == minfact::cycle_type(p));
        // Pointwise: q(g(x)) = g(p(x)).
        for (int x = 1; x <= 7; ++x) CHECK(q(g(x)) == g(p(x)));
    }
}

TEST_CASE("canonical base permutation lays out blocks in order") {
    using minfact::RamificationType;
    const auto s = minfact::canonical_sigma(RamificationType{5, {4, 4}, {1, 1}});
    CHECK(minfact::to_cycle_string(s) == "(1)(2)(3 4 5)");
    const auto t = minfact::canonical_sigma(RamificationType{6, {4, 5}, {1, 2}});
    CHECK(minfact::to_cycle_string(t) == "(1)(2 3)(4 5 6)");
    const auto u = minfact::canonical_sigma(RamificationType{3, {2, 2}, {}});
    CHECK(minfact::to_cycle_string(u) == "(1 2 3)");
}

TEST_CASE("centralizer enumeration matches the class equation") {
    // |Z(p)| * |conjugacy class of p| = n! for every p.
    const auto count_class = [](const Permutation& p) {
        const int n = p.size();
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        long long cls = 0;
        const auto type = minfact::cycle_type(p);
        do {
            if (minfact::cycle_type(Permutation(img)) == type) ++cls;
        } while (std::next_permutation(img.begin(), img.end()));
        return cls;
    };
    const auto factorial = [](int n) {
        long long f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    };

    const auto p = minfact::from_cycles({{1}, {2}, {3, 4, 5}});
    const auto z = minfact::centralizer_elements(p);
    CHECK(z.size() == 6);  // 2 fixed points give 2!, the 3-cycle gives 3
    for (const auto& g : z)
        CHECK(minfact::compose(g, p) == minfact::compose(p, g));
    CHECK(static_cast<long long>(z.size()) * count_class(p) == factorial(5));

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 5; ++trial) {
        const auto q = random_perm(6, rng);
        const auto zq = minfact::centralizer_elements(q);
        CHECK(static_cast<long long>(zq.size()) * count_class(q) == factorial(6));
    }
}

TEST_CASE("cycle strings parse and print exactly") {
    const auto p = minfact::from_cycles({{1}, {2, 5}, {3, 6, 4}});
    const auto s = minfact::to_cycle_string(p);
    CHECK(s == "(1)(2 5)(3 6 4)");
    CHECK(minfact::parse_cycle_string(s) == p);

    CHECK(minfact::to_cycle_string(Permutation::identity(3)) == "(1)(2)(3)");
    CHECK(minfact::parse_cycle_string("(1)(2)(3)") == Permutation::identity(3));

    std::mt19937 rng(1234);
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = random_perm(9, rng);
        CHECK(minfact::parse_cycle_string(minfact::to_cycle_string(q)) == q);
    }

    // Strings that are not in canonical form are rejected, as are junk strings.
    CHECK_THROWS_AS(minfact::parse_cycle_string("(2 3)(1)"), std::invalid_argument);
    CHECK_THROWS_AS(minfact::parse_cycle_string("(3 2)(1)"), std::invalid_argument);
    CHECK_THROWS_AS(minfact::parse_cycle_string("(1)(2 3"), std::invalid_argument);
    CHECK_THROWS_AS(minfact::parse_cycle_string("(1)(2 3)x"), std::invalid_argument);
    CHECK_THROWS_AS(minfact::parse_cycle_string("(1)(2 4)"), std::invalid_argument);
    CHECK_THROWS_AS(minfact::parse_cycle_string("(1)(2 2)"), std::invalid_argument);
    CHECK_THROWS_AS(minfact::parse_cycle_string(""), std::invalid_argument);
}

TEST_CASE("support size counts moved points") {
    CHECK(minfact::from_cycles({{1}, {2, 4}, {3}, {5}}).support_size() == 2);
    CHECK(Permutation::identity(5).support_size() == 0);
    CHECK(minfact::from_cycles({{1, 2}, {3, 4, 5}}).support_size() == 5);
}
