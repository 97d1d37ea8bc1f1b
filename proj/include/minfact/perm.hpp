#pragma once

#include <string>
#include <vector>

#include "minfact/rtype.hpp"

namespace minfact {

// A permutation of {1..n}.  Immutable after construction; all mutating-style
// operations return new values.  Points are 1-based in the public interface
// and in cycle notation; storage is a plain 0-based image table.
class Permutation {
public:
    Permutation() = default;
    // `image` maps i -> image[i-1], 1-based on both sides.  Throws
    // std::invalid_argument unless it is a bijection on {1..n}.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    // Image of the 1-based point x.
    int operator()(int x) const { return img_[x - 1]; }

    Permutation inverse() const;

    // Number of points with p(x) != x.
    int support_size() const;

    bool operator==(const Permutation& o) const = default;
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    const std::vector<int>& image() const { return img_; }

private:
    std::vector<int> img_;
};

// compose(f,g) applies g first: compose(f,g)(x) = f(g(x)).  This matches
// reading a product chain right to left.
Permutation compose(const Permutation& f, const Permutation& g);

// g . p . g^-1
Permutation conjugate(const Permutation& g, const Permutation& p);

// Canonical cycle decomposition: each cycle starts at its smallest point,
// cycles sorted by their smallest point, fixed points included.
std::vector<std::vector<int>> cycles(const Permutation& p);

// Inverse of `cycles`: throws std::invalid_argument unless the cycles are
// disjoint and cover {1..n} exactly, n = total number of points listed.
Permutation from_cycles(const std::vector<std::vector<int>>& cys);

// Cycle lengths, sorted ascending.
std::vector<int> cycle_type(const Permutation& p);

// n minus the number of cycles; 0 exactly for the identity.
int defect(const Permutation& p);

// Canonical target permutation of a type: consecutive blocks
// (1..p1)(p1+1..p1+p2)...(p+1..n), the long cycle last.
Permutation canonical_sigma(const RamificationType& t);

// All g with g.sigma = sigma.g, by scanning S_n.  Exact but exponential;
// meant for the small n this library brute-forces (n <= 10 or so).
std::vector<Permutation> centralizer_elements(const Permutation& sigma);

// Canonical cycle notation, e.g. "(1)(2 3)(4 5 6)".  Every point appears,
// so the text determines n.  parse_cycle_string accepts exactly this shape
// and round-trips bit for bit.
std::string to_cycle_string(const Permutation& p);
Permutation parse_cycle_string(const std::string& text);

}  // namespace minfact
