#pragma once

// First and second moments of the monochromatic / bichromatic edge counts
// under a uniform c-coloring, in closed form.
//
// Every formula is a template on the scalar: Rational is authoritative,
// double is the fast mirror used for large sweeps. Both run the same
// expression, so any disagreement beyond rounding is a transcription bug.

#include "randcolor/coloring.hpp"
#include "randcolor/exact.hpp"
#include "randcolor/graph.hpp"
#include "randcolor/symfun.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace randcolor {

namespace detail {

inline void require_order(std::int64_t n, std::int64_t minimum, const char* what)
{
    if (n < minimum) {
        throw std::domain_error(std::string(what) + " needs n >= " + std::to_string(minimum) +
                                " (got n = " + std::to_string(n) +
                                "); use the enumeration oracle for tiny graphs");
    }
}

inline void require_match(const GraphStats& g, const Composition& c)
{
    if (g.n != c.total()) {
        throw std::invalid_argument("composition sums to " + std::to_string(c.total()) +
                                    " but the graph has " + std::to_string(g.n) + " vertices");
    }
}

/// c^(l) / n^(l).
template <class Scalar>
Scalar falling_ratio(std::int64_t c, std::int64_t n, unsigned l)
{
    return falling_factorial_as<Scalar>(c, l) / falling_factorial_as<Scalar>(n, l);
}

template <class Scalar>
std::vector<Scalar> elementary_of(const Composition& c, int kmax)
{
    std::vector<Scalar> out;
    for (const Integer& e : elementary_symmetric_all(c.as_integers(), kmax)) {
        out.push_back(scalar_from<Scalar>(e));
    }
    return out;
}

} // namespace detail

/// E[M_i] = m c_i^(2) / n^(2).
template <class Scalar = Rational>
Scalar mean_Mi(std::int64_t m, std::int64_t n, std::int64_t c_i)
{
    detail::require_order(n, 2, "mean_Mi");
    return scalar_from<Scalar>(m) * detail::falling_ratio<Scalar>(c_i, n, 2);
}

/// Var(M_i); i is a 0-based class index.
template <class Scalar = Rational>
Scalar var_Mi(const GraphStats& g, const Composition& c, std::size_t i)
{
    detail::require_match(g, c);
    detail::require_order(g.n, 4, "var_Mi");
    if (i >= c.parts()) throw std::out_of_range("color index out of range");
    const std::int64_t n = g.n;
    const std::int64_t ci = c[i];
    const Scalar m = scalar_from<Scalar>(g.m);
    const Scalar sigma2 = scalar_from<Scalar>(g.sigma2);
    const Scalar r2 = detail::falling_ratio<Scalar>(ci, n, 2);
    const Scalar r3 = detail::falling_ratio<Scalar>(ci, n, 3);
    const Scalar r4 = detail::falling_ratio<Scalar>(ci, n, 4);
    const Scalar adjacent = falling_factorial_as<Scalar>(ci, 3) * scalar_from<Scalar>(n - ci) /
                            falling_factorial_as<Scalar>(n, 4);
    return adjacent * sigma2 - (r2 * r2 - r4) * m * m + (r2 - 2 * r3 + r4) * m;
}

/// Probabilities that two adjacent (a) or two disjoint (b) edges are both
/// bichromatic.
template <class Scalar>
struct PairCoefficients {
    Scalar a;
    Scalar b;
};

template <class Scalar = Rational>
PairCoefficients<Scalar> coefficients_ab(const Composition& c)
{
    const std::int64_t n = c.total();
    detail::require_order(n, 4, "coefficients_ab");
    const auto e = detail::elementary_of<Scalar>(c, 3);
    const Scalar kn2 = falling_factorial_as<Scalar>(n, 2);
    const Scalar kn3 = falling_factorial_as<Scalar>(n, 3);
    const Scalar kn4 = falling_factorial_as<Scalar>(n, 4);
    const Scalar a = e[2] / kn2 + 3 * e[3] / kn3;
    const Scalar b = 4 * (e[2] * e[2] - scalar_from<Scalar>(n - 1) * e[2] - 3 * e[3]) / kn4;
    return {a, b};
}

template <class Scalar>
struct MeanPair {
    Scalar mean_L;
    Scalar mean_M;
};

/// E[L] = 2 m e_2 / n^(2) and E[M] = (m / n^(2)) sum_i c_i^(2).
template <class Scalar = Rational>
MeanPair<Scalar> mean_M_L(std::int64_t m, const Composition& c)
{
    const std::int64_t n = c.total();
    detail::require_order(n, 2, "mean_M_L");
    const auto e = detail::elementary_of<Scalar>(c, 2);
    const Scalar kn2 = falling_factorial_as<Scalar>(n, 2);
    Scalar same = scalar_from<Scalar>(std::int64_t{0});
    for (auto ci : c.classes()) same += falling_factorial_as<Scalar>(ci, 2);
    const Scalar ms = scalar_from<Scalar>(m);
    return {2 * ms * e[2] / kn2, ms * same / kn2};
}

/// The common variance of L and M.
template <class Scalar = Rational>
Scalar var_common(const GraphStats& g, const Composition& c)
{
    detail::require_match(g, c);
    detail::require_order(g.n, 4, "var_common");
    const auto [a, b] = coefficients_ab<Scalar>(c);
    const auto e = detail::elementary_of<Scalar>(c, 2);
    const Scalar p = e[2] / falling_factorial_as<Scalar>(g.n, 2);
    const Scalar m = scalar_from<Scalar>(g.m);
    const Scalar sigma2 = scalar_from<Scalar>(g.sigma2);
    return (a - b) * sigma2 + m * m * (b - 4 * p * p) + m * (2 * p - 2 * a + b);
}

/// p_3(gamma) - p_2(gamma)^2 with gamma = c/n; zero exactly at balance.
template <class Scalar = Rational>
Scalar rho(const Composition& c)
{
    Scalar p2 = scalar_from<Scalar>(std::int64_t{0});
    Scalar p3 = p2;
    for (const Rational& g : c.distribution()) {
        const Scalar x = scalar_from<Scalar>(g);
        p2 += x * x;
        p3 += x * x * x;
    }
    return p3 - p2 * p2;
}

/// (1 - theta)^2 var / m^2: lower bound on P(|X - EX| > theta E|X - EX|) for
/// any statistic with 0 <= X <= m.
template <class Scalar = Rational>
Scalar pz_lower_bound(const Scalar& theta, const Scalar& var, std::int64_t m)
{
    if (theta < 0 || theta >= 1) throw std::invalid_argument("theta must lie in [0, 1)");
    if (m < 1) throw std::invalid_argument("pz_lower_bound needs m >= 1");
    const Scalar ms = scalar_from<Scalar>(m);
    const Scalar one_minus = 1 - theta;
    return one_minus * one_minus * var / (ms * ms);
}

template <class Scalar>
struct BasicMomentReport {
    std::vector<Scalar> per_color_mean;
    std::vector<Scalar> per_color_var;
    Scalar mean_M;
    Scalar mean_L;
    Scalar var_common;
    Scalar a_c;
    Scalar b_c;
    Scalar rho;
    Scalar zeta_sq;
    Scalar imbalance_sq;
    Scalar normalized_var;
};

using MomentReport = BasicMomentReport<Rational>;
using MomentReportF = BasicMomentReport<double>;

template <class Scalar = Rational>
BasicMomentReport<Scalar> full_report(const GraphStats& g, const Composition& c)
{
    detail::require_match(g, c);
    detail::require_order(g.n, 4, "full_report");
    if (g.m < 1) throw std::domain_error("full_report needs at least one edge");

    BasicMomentReport<Scalar> r;
    for (std::size_t i = 0; i < c.parts(); ++i) {
        r.per_color_mean.push_back(mean_Mi<Scalar>(g.m, g.n, c[i]));
        r.per_color_var.push_back(var_Mi<Scalar>(g, c, i));
    }
    const auto means = mean_M_L<Scalar>(g.m, c);
    r.mean_M = means.mean_M;
    r.mean_L = means.mean_L;
    r.var_common = var_common<Scalar>(g, c);
    const auto ab = coefficients_ab<Scalar>(c);
    r.a_c = ab.a;
    r.b_c = ab.b;
    r.rho = rho<Scalar>(c);
    r.zeta_sq = scalar_from<Scalar>(zeta_squared(g));
    r.imbalance_sq = scalar_from<Scalar>(imbalance(c));
    const Scalar m = scalar_from<Scalar>(g.m);
    r.normalized_var = r.var_common / (m * m);
    return r;
}

inline MomentReport full_report(const Graph& g, const Composition& c)
{
    return full_report<Rational>(stats(g), c);
}

/// Relative agreement of the double mirror with the exact report. Variance
/// terms are compared on the m^2 scale (they can cancel to exactly zero).
bool mirrors_agree(const MomentReport& exact, const MomentReportF& approx, std::int64_t m,
                   double rel_tol = 1e-9);

} // namespace randcolor
