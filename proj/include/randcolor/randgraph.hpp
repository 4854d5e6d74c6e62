#pragma once

// Random graph models and the deterministic ratio E[Sigma_2] / (E m)^2 that
// decides concentration for randomly colored random graphs.

#include "randcolor/exact.hpp"
#include "randcolor/expr.hpp"
#include "randcolor/graph.hpp"
#include "randcolor/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace randcolor::randgraph {

/// Finite-support degree law given as (degree, probability) atoms.
struct DegreeLaw {
    std::vector<std::pair<std::int64_t, Rational>> atoms;

    /// "v1:p1,v2:p2,...". Probabilities must be positive and sum to one.
    static DegreeLaw parse(std::string_view text);

    Rational mean() const;
    Rational second_moment() const;
};

struct Gnp {
    std::int64_t n = 0;
    Param p;
};

/// Erased configuration model with i.i.d. degrees.
struct Config {
    std::int64_t n = 0;
    DegreeLaw law;
};

/// n uniform points on the unit torus, edge iff wrap-around distance <= r.
struct GeometricTorus {
    std::int64_t n = 0;
    Param r;
};

/// Independent edges with p_ij = min(1, w_i w_j / sum w).
struct ChungLu {
    std::int64_t n = 0;
    std::vector<Rational> weights;
    bool star_like = false;
};

struct ModelSpec {
    std::variant<Gnp, Config, GeometricTorus, ChungLu> model;

    std::int64_t order() const;
    std::string kind() const;

    /// Chung-Lu with w_1 = n and every other weight 1.
    static ModelSpec star_like(std::int64_t n);
};

/// A model string with parameters that may depend on n:
/// "gnp:n=500,p=0.1", "gnp:p=4/n", "config:n=500,law=3:1.0",
/// "geo:n=500,r=0.1", "cl:n=500,w=weights.txt", "starlike:n=500".
class ModelTemplate {
public:
    static ModelTemplate parse(std::string_view text);

    /// Instantiates at the given n (overrides any n in the string).
    ModelSpec at(std::int64_t n) const;
    /// Instantiates at the n fixed in the string; throws if there is none.
    ModelSpec fixed() const;

    const std::string& text() const { return text_; }
    const std::string& kind() const { return kind_; }

private:
    std::string text_;
    std::string kind_;
    std::optional<std::int64_t> n_;
    std::map<std::string, std::string> params_;
};

ModelSpec parse_model(std::string_view text);

struct RandomGraphSample {
    Graph graph;
    /// Configuration model only: size and Sigma_2 of the multigraph before
    /// loops and parallel edges were erased.
    std::optional<std::int64_t> pre_erasure_m;
    std::optional<Integer> pre_erasure_sigma2;
};

RandomGraphSample generate(const ModelSpec& spec, Rng& rng);

enum class RatioMode { ClosedForm, MonteCarlo };
enum class Verdict { Concentrates, AntiConcentrates, Inconclusive };

std::string to_string(RatioMode mode);
std::string to_string(Verdict verdict);

struct RatioCriterion {
    std::int64_t n = 0;
    double numerator = 0;     // E[Sigma_2]
    double denominator = 0;   // (E m)^2
    double ratio = 0;
    std::optional<Rational> exact_ratio;
    double ratio_se = 0;      // Monte Carlo only, first-order propagated
    double numerator_se = 0;
    double mean_m_se = 0;
    RatioMode mode = RatioMode::ClosedForm;
    Verdict verdict = Verdict::Inconclusive;
    /// Monte Carlo on the configuration model: the same ratio computed on
    /// the pre-erasure degrees.
    std::optional<double> pre_erasure_ratio;
};

/// Throws std::invalid_argument for unsupported kinds.
RatioCriterion ratio_closed_form(const ModelSpec& spec);

RatioCriterion ratio_monte_carlo(const ModelSpec& spec, std::size_t trials, std::uint64_t seed,
                                 unsigned threads = 1);

struct VerdictThresholds {
    double decreasing_exponent = -0.5;  // concentrates: exponent <= this
    double final_value = 0.05;          // ... and last ratio below this
    double floor_value = 0.05;          // anti: every ratio above this
    double flat_exponent = 0.1;         // ... and |exponent| below this
};

Verdict classify_ratio_trend(std::span<const std::int64_t> grid, std::span<const double> ratios,
                             const VerdictThresholds& thresholds = {});

struct RatioSweep {
    std::vector<RatioCriterion> points;
    std::optional<double> exponent;
    Verdict verdict = Verdict::Inconclusive;
};

RatioSweep sweep_closed_form(const ModelTemplate& model, std::span<const std::int64_t> grid,
                             const VerdictThresholds& thresholds = {});
RatioSweep sweep_monte_carlo(const ModelTemplate& model, std::span<const std::int64_t> grid,
                             std::size_t trials, std::uint64_t seed, unsigned threads = 1,
                             const VerdictThresholds& thresholds = {});

struct SizeDispersion {
    std::int64_t n = 0;
    double mean_m = 0;
    double var_m = 0;
    double var_m_over_mean_sq = 0;
};

struct AssumptionCheck {
    std::vector<SizeDispersion> points;
    std::optional<double> exponent;
    bool holds = false;
};

/// Estimates Var(m) / (E m)^2 along the grid and whether it trends to 0.
AssumptionCheck assumption_star_check(const ModelTemplate& model, std::span<const std::int64_t> grid,
                                      std::size_t trials, std::uint64_t seed, unsigned threads = 1);

} // namespace randcolor::randgraph
