#pragma once

// Ground truth by exhaustion: every c-coloring of a small graph is visited
// once, in lexicographic multiset-permutation order.

#include "randcolor/coloring.hpp"
#include "randcolor/exact.hpp"
#include "randcolor/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace randcolor::oracle {

inline constexpr std::uint64_t default_budget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// n! / (c_1! ... c_s!).
Integer coloring_count(const Composition& c);

/// Exact joint law of (M_1, ..., M_s).
struct ExactDistribution {
    std::map<std::vector<std::int64_t>, Integer> counts;
    Integer total_colorings;
    std::int64_t edges = 0;

    std::map<std::vector<std::int64_t>, Rational> support() const;
    Rational probability(const std::vector<std::int64_t>& per_color) const;
};

/// Throws BudgetExceeded when the number of colorings is above budget.
ExactDistribution enumerate(const Graph& g, const Composition& c,
                            std::uint64_t budget = default_budget);

struct ExactMoments {
    std::vector<Rational> mean;                   // E[M_i]
    std::vector<Rational> var;                    // Var(M_i)
    std::vector<std::vector<Rational>> covariance;  // Cov(M_i, M_j)
    Rational mean_M;
    Rational var_M;
    Rational mean_L;
    Rational var_L;
};

ExactMoments exact_moments(const ExactDistribution& d);

/// Event over disjoint vertex sets of the given sizes: with iota, set j
/// must be colored iota[j] (0-based); without, each set is monochromatic
/// and the colors are pairwise distinct.
struct EventSpec {
    std::vector<std::int64_t> sizes;
    std::optional<std::vector<std::size_t>> iota;
};

/// Exact frequency of the event among all c-colorings. vertex_sets picks
/// which disjoint sets to use; by default consecutive blocks 0.., a_1.., ...
Rational event_frequency(const Composition& c, const EventSpec& event,
                         std::uint64_t budget = default_budget,
                         const std::optional<std::vector<std::vector<std::uint32_t>>>& vertex_sets = {});

/// Frequencies of many events in a single pass over the colorings.
std::vector<Rational> event_frequencies(const Composition& c, const std::vector<EventSpec>& events,
                                        std::uint64_t budget = default_budget);

} // namespace randcolor::oracle
