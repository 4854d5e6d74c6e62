#pragma once

// Batch analyses: regime classification along n-grids, empirical-vs-exact
// comparison and the oracle verification corpus.

#include "randcolor/coloring.hpp"
#include "randcolor/exact.hpp"
#include "randcolor/graph.hpp"
#include "randcolor/moments.hpp"
#include "randcolor/randgraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace randcolor::experiments {

/// A graph sequence indexed by n. Deterministic names: "star", "cycle",
/// "path", "complete", "circulant:d=K". Anything else is read as a random
/// model template (see randgraph::ModelTemplate), sampled once per n.
/// "threshold:IDID" names a single fixed graph.
class GraphFamily {
public:
    static GraphFamily parse(std::string_view text);

    /// seed only matters for random families.
    Graph at(std::int64_t n, std::uint64_t seed = 0) const;
    bool is_random() const { return model_.has_value(); }
    /// Set by "n=..." in the string or by a fixed-size family.
    std::optional<std::int64_t> fixed_order() const { return n_; }
    const std::string& text() const { return text_; }

private:
    std::string text_;
    std::string kind_;
    std::int64_t degree_ = 0;
    std::string sequence_;
    std::optional<std::int64_t> n_;
    std::optional<randgraph::ModelTemplate> model_;
};

/// An edge-list file if the path exists, else a family string carrying its
/// own n ("star:n=8", "circulant:n=12,d=4", "gnp:n=50,p=0.1",
/// "threshold:IDID").
Graph resolve_graph(std::string_view spec, std::uint64_t seed = 0);

/// How class sizes follow n: "balanced:s", "ratios:3/4,1/4", or explicit
/// sizes "5,3" (valid only at their own total).
class ColoringRule {
public:
    enum class Kind { Balanced, Ratios, Sizes };

    static ColoringRule parse(std::string_view text);

    Composition at(std::int64_t n) const;
    Kind kind() const { return kind_; }
    const std::string& text() const { return text_; }
    std::span<const Rational> ratios() const { return ratios_; }

private:
    Kind kind_ = Kind::Balanced;
    std::size_t parts_ = 2;
    std::vector<Rational> ratios_;
    std::vector<std::int64_t> sizes_;
    std::string text_;
};

struct FamilySpec {
    GraphFamily graph;
    ColoringRule coloring;
    std::vector<std::int64_t> grid;
};

/// "50,100,200" or "50:3200:x2" (geometric) or "50:200:+50" (arithmetic).
std::vector<std::int64_t> parse_grid(std::string_view text);

enum class Regime { Concentration, AntiConcentration };
std::string to_string(Regime r);
Regime regime_from_string(std::string_view text);

/// Finite-grid proxies for the limit statements. Anti-concentration needs
/// imbalance_sq above imbalance_min at every grid point, zeta_sq above
/// zeta_sq_min at the largest n, and no decreasing power-law trend in
/// zeta_sq (fitted exponent above zeta_exponent_min).
struct RegimeThresholds {
    double zeta_sq_min = 0.2;
    double imbalance_min = 1e-3;
    double zeta_exponent_min = -0.1;
};

struct RegimeRow {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> classes;
    Rational zeta_sq;
    Rational rho;
    Rational imbalance_sq;
    Rational normalized_var;
    Rational rho_zeta_product;
    Rational pz_bound;  // theta = 1/2
    std::optional<std::int64_t> trials;
    std::optional<double> empirical_mean;
    std::optional<double> empirical_mean_se;
    std::optional<double> empirical_var;
    std::optional<double> empirical_var_se;
    /// Fraction of samples with |M - E M| > E|M - E M| / 2, the event the
    /// PZ bound controls (E|M - E M| estimated from the same samples).
    std::optional<double> deviation_prob;
    Regime predicted_regime = Regime::Concentration;

    friend bool operator==(const RegimeRow&, const RegimeRow&) = default;
};

struct RegimeResult {
    std::vector<RegimeRow> rows;
    RegimeThresholds thresholds;
    std::optional<double> zeta_exponent;
    std::optional<double> normalized_var_exponent;
    Regime regime = Regime::Concentration;
};

/// Classification from exact quantities only.
Regime classify_regime(std::span<const RegimeRow> rows, const RegimeThresholds& thresholds,
                       std::optional<double>* zeta_exponent = nullptr);

/// trials = 0 is exact-only. Throws std::domain_error when some n has no edges.
RegimeResult run_regime(const FamilySpec& family, std::size_t trials, std::uint64_t seed,
                        unsigned threads = 1, const RegimeThresholds& thresholds = {});

/// Summary statistics of a sample with the usual standard errors. The
/// variance SE uses the fourth central moment.
struct SampleSummary {
    std::size_t count = 0;
    double mean = 0;
    double mean_se = 0;
    double var = 0;
    double var_se = 0;
    std::int64_t min = 0;
    std::int64_t max = 0;
};

SampleSummary summarize(std::span<const std::int64_t> xs);

/// M for `trials` independent uniform c-colorings; trial t uses the stream
/// derive_seed(seed, {n, t}), so the result ignores the thread count.
std::vector<std::int64_t> simulate_monochromatic(const Graph& g, const Composition& c,
                                                 std::size_t trials, std::uint64_t seed,
                                                 unsigned threads = 1);

struct ComparisonRecord {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> classes;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    Rational exact_mean;
    Rational exact_var;
    SampleSummary empirical;
    bool mean_pass = false;
    bool var_pass = false;
    /// L = m - M never varied across the samples.
    bool l_constant = false;
};

/// Empirical mean and variance of M against the exact values, each passing
/// when within 4 standard errors. Needs trials >= 100.
ComparisonRecord run_comparison(const Graph& g, const Composition& c, std::size_t trials,
                                std::uint64_t seed, unsigned threads = 1);

struct CorpusGraph {
    std::string name;
    Graph graph;
};

/// Paths, cycles and stars on 4..8 vertices, K4..K6, threshold("IDID") and
/// 20 seeded random graphs on 4..8 vertices with at least one edge.
std::vector<CorpusGraph> verification_corpus();

/// All ordered compositions of n into s positive parts.
std::vector<Composition> all_compositions(std::int64_t n, std::size_t s);

struct VerificationSummary {
    std::size_t graphs = 0;
    std::size_t cells = 0;        // (graph, composition) pairs
    std::size_t event_checks = 0; // probability formulas checked
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Every formula against enumeration, exact equality, over the corpus
/// restricted to graphs with at most max_n vertices and s in {2, 3}.
VerificationSummary verify_against_oracle(std::int64_t max_n = 8,
                                          std::uint64_t budget = 10'000'000);

} // namespace randcolor::experiments
