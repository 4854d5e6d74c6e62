#pragma once

#include "randcolor/exact.hpp"
#include "randcolor/graph.hpp"
#include "randcolor/rng.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace randcolor {

/// Prescribed color-class sizes (c_1, ..., c_s): s >= 2, every c_i >= 1.
class Composition {
public:
    explicit Composition(std::vector<std::int64_t> classes);

    /// Splits n as evenly as possible into s classes, larger parts first.
    static Composition balanced(std::int64_t n, std::size_t s);

    /// Largest-remainder apportionment of n according to the (positive)
    /// ratios, which are normalized to sum to one. Ties go to the lowest
    /// index. Throws if some class would end up empty.
    static Composition from_ratios(std::int64_t n, std::span<const Rational> ratios);

    std::span<const std::int64_t> classes() const { return classes_; }
    std::int64_t operator[](std::size_t i) const { return classes_[i]; }
    std::size_t parts() const { return classes_.size(); }
    std::int64_t total() const { return n_; }

    /// The classes as exact integers, ready for the symmetric functions.
    std::vector<Integer> as_integers() const;

    /// gamma_i = c_i / n.
    std::vector<Rational> distribution() const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<std::int64_t> classes_;
    std::int64_t n_ = 0;
};

/// "50,30,20" or "balanced:s" (the latter needs n).
Composition parse_composition(std::string_view text, std::int64_t n);

/// One c-coloring; colors are 0-based (color i here is class i+1).
struct ColorAssignment {
    std::vector<std::uint32_t> colors;
};

struct EdgeCounts {
    std::vector<std::int64_t> per_color;
    std::int64_t mono = 0;
    std::int64_t bi = 0;

    friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

/// Uniform c-coloring: a Fisher-Yates shuffle of the color multiset.
ColorAssignment sample(const Composition& c, Rng& rng);

/// Same as sample() but reuses the caller's buffer.
void sample_into(const Composition& c, Rng& rng, std::vector<std::uint32_t>& colors);

EdgeCounts count(const Graph& g, const ColorAssignment& f, std::size_t colors);
EdgeCounts count(const Graph& g, const ColorAssignment& f, const Composition& c);

/// Number of monochromatic edges only; the hot loop of the simulators.
std::int64_t count_monochromatic(const Graph& g, std::span<const std::uint32_t> colors);

/// P(every vertex of A_j gets color iota(j)), with |A_j| = sizes[j].
/// iota is 0-based and must be injective.
Rational prob_fixed_colors(const Composition& c, std::span<const std::int64_t> sizes,
                           std::span<const std::size_t> iota);

/// P(each A_j is monochromatic and the k colors are pairwise distinct).
/// Uses a closed form for equal sizes and for the (2,1,...,1) shape and
/// enumerates injections otherwise (only for s <= 12). Zero when k > s.
Rational prob_distinct_colors(const Composition& c, std::span<const std::int64_t> sizes);

/// Direct sum over all injections [k] -> [s]. Throws when s > 12.
Rational prob_distinct_by_injections(const Composition& c, std::span<const std::int64_t> sizes);

/// k sets of b vertices each: k! E_k(c_1^(b), ..., c_s^(b)) / n^(kb).
Rational prob_distinct_equal_sizes(const Composition& c, std::size_t k, std::int64_t b);

/// Sizes (2,1,...,1) with k sets: (k-1)! [(n-k) e_k - (k+1) e_{k+1}] / n^(k+1).
Rational prob_distinct_one_pair(const Composition& c, std::size_t k);

/// Two disjoint pairs in distinct colors:
/// 2 (e2(e2 - e1 + 1) - e3(2 e1 - 3) + 2 e4) / n^(4).
Rational prob_two_pairs(const Composition& c);

/// Squared distance of gamma = c/n from the simplex center, exact.
Rational imbalance(const Composition& c);

} // namespace randcolor
