#include "randcolor/experiments.hpp"

#include "randcolor/fit.hpp"
#include "randcolor/oracle.hpp"
#include "randcolor/parallel.hpp"
#include "randcolor/rng.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace randcolor::experiments {

namespace {

// Stream tag for graphs sampled by random families; coloring trials use
// (n, trial) keys and never reach this value.
constexpr std::uint64_t graph_stream = 0x6772617068ULL;

std::int64_t parse_count(std::string_view text, const char* what)
{
    const Rational v = parse_rational(text);
    if (v.get_den() != 1 || v < 0) {
        throw std::invalid_argument(std::string(what) + " must be a non-negative integer, got '" +
                                    std::string(text) + "'");
    }
    return v.get_num().get_si();
}

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto cut = text.find(sep, start);
        if (cut == std::string_view::npos) cut = text.size();
        out.emplace_back(text.substr(start, cut - start));
        start = cut + 1;
    }
    return out;
}

std::string join(std::span<const std::int64_t> xs)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

} // namespace

GraphFamily GraphFamily::parse(std::string_view text)
{
    GraphFamily f;
    f.text_ = std::string(text);
    const auto colon = text.find(':');
    const std::string head(text.substr(0, colon));
    static const std::set<std::string> deterministic = {"star", "cycle", "path", "complete",
                                                        "circulant", "threshold"};
    if (!deterministic.count(head)) {
        f.model_ = randgraph::ModelTemplate::parse(text);
        // n fixed in the template is still visible through fixed_order()
        for (const auto& item : split(colon == std::string_view::npos ? "" : text.substr(colon + 1), ',')) {
            if (item.rfind("n=", 0) == 0) f.n_ = parse_count(item.substr(2), "n");
        }
        return f;
    }
    f.kind_ = head;
    if (head == "threshold") {
        if (colon == std::string_view::npos) throw std::invalid_argument("threshold needs a sequence, e.g. threshold:IDID");
        f.sequence_ = std::string(text.substr(colon + 1));
        f.n_ = static_cast<std::int64_t>(f.sequence_.size());
        generators::threshold(f.sequence_);
        return f;
    }
    if (colon != std::string_view::npos) {
        for (const auto& item : split(text.substr(colon + 1), ',')) {
            const auto eq = item.find('=');
            const std::string key = item.substr(0, eq);
            if (eq == std::string::npos) throw std::invalid_argument("family parameter '" + item + "' needs key=value");
            const std::string value = item.substr(eq + 1);
            if (key == "n") {
                f.n_ = parse_count(value, "n");
            } else if (key == "d" && head == "circulant") {
                f.degree_ = parse_count(value, "d");
            } else {
                throw std::invalid_argument("family '" + head + "' has no parameter '" + key + "'");
            }
        }
    }
    if (head == "circulant" && f.degree_ == 0) throw std::invalid_argument("circulant needs d=K");
    return f;
}

Graph GraphFamily::at(std::int64_t n, std::uint64_t seed) const
{
    if (n < 1) throw std::invalid_argument("graph order must be positive");
    if (model_) {
        Rng rng(derive_seed(seed, {graph_stream, static_cast<std::uint64_t>(n)}));
        return randgraph::generate(model_->at(n), rng).graph;
    }
    const auto un = static_cast<std::size_t>(n);
    if (kind_ == "star") return generators::star(un);
    if (kind_ == "cycle") return generators::cycle(un);
    if (kind_ == "path") return generators::path(un);
    if (kind_ == "complete") return generators::complete(un);
    if (kind_ == "circulant") return generators::regular_circulant(un, static_cast<std::size_t>(degree_));
    if (n != *n_) throw std::invalid_argument("threshold:" + sequence_ + " has exactly " + std::to_string(*n_) + " vertices");
    return generators::threshold(sequence_);
}

Graph resolve_graph(std::string_view spec, std::uint64_t seed)
{
    const std::filesystem::path path{std::string(spec)};
    std::error_code ec;
    if (std::filesystem::is_regular_file(path, ec)) return load_edge_list(path);
    const auto family = GraphFamily::parse(spec);
    if (!family.fixed_order()) {
        throw std::invalid_argument("'" + std::string(spec) +
                                    "' is neither a file nor a family with n=... (e.g. star:n=8)");
    }
    return family.at(*family.fixed_order(), seed);
}

ColoringRule ColoringRule::parse(std::string_view text)
{
    ColoringRule r;
    r.text_ = std::string(text);
    if (text.rfind("balanced:", 0) == 0) {
        r.kind_ = Kind::Balanced;
        r.parts_ = static_cast<std::size_t>(parse_count(text.substr(9), "number of colors"));
        if (r.parts_ < 2) throw std::invalid_argument("balanced colorings need s >= 2");
        return r;
    }
    if (text.rfind("ratios:", 0) == 0) {
        r.kind_ = Kind::Ratios;
        for (const auto& item : split(text.substr(7), ',')) {
            Rational g = parse_rational(item);
            if (g <= 0) throw std::invalid_argument("ratios must be positive");
            r.ratios_.push_back(g);
        }
        if (r.ratios_.size() < 2) throw std::invalid_argument("ratios need at least two classes");
        Rational total = 0;
        for (const auto& g : r.ratios_) total += g;
        for (auto& g : r.ratios_) g /= total;
        r.parts_ = r.ratios_.size();
        return r;
    }
    r.kind_ = Kind::Sizes;
    for (const auto& item : split(text, ',')) r.sizes_.push_back(parse_count(item, "class size"));
    Composition check(r.sizes_);
    r.parts_ = check.parts();
    return r;
}

Composition ColoringRule::at(std::int64_t n) const
{
    switch (kind_) {
    case Kind::Balanced:
        return Composition::balanced(n, parts_);
    case Kind::Ratios:
        return Composition::from_ratios(n, ratios_);
    default: {
        Composition c(sizes_);
        if (c.total() != n) {
            throw std::invalid_argument("class sizes " + text_ + " sum to " + std::to_string(c.total()) +
                                        ", not n = " + std::to_string(n));
        }
        return c;
    }
    }
}

std::vector<std::int64_t> parse_grid(std::string_view text)
{
    std::vector<std::int64_t> out;
    const auto parts = split(text, ':');
    if (parts.size() == 3 && !parts[2].empty() && (parts[2][0] == 'x' || parts[2][0] == '+')) {
        const std::int64_t lo = parse_count(parts[0], "grid start");
        const std::int64_t hi = parse_count(parts[1], "grid end");
        const std::int64_t step = parse_count(parts[2].substr(1), "grid step");
        const bool geometric = parts[2][0] == 'x';
        if (geometric ? step < 2 : step < 1) throw std::invalid_argument("grid step does not advance");
        for (std::int64_t n = lo; n <= hi; n = geometric ? n * step : n + step) {
            out.push_back(n);
            if (n == 0) break;
        }
    } else if (parts.size() == 1) {
        for (const auto& item : split(text, ',')) out.push_back(parse_count(item, "grid point"));
    } else {
        throw std::invalid_argument("grid must be 'n1,n2,...', 'lo:hi:xK' or 'lo:hi:+K'");
    }
    if (out.empty()) throw std::invalid_argument("empty grid");
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i] <= out[i - 1]) throw std::invalid_argument("grid must be strictly increasing");
    }
    return out;
}

std::string to_string(Regime r)
{
    return r == Regime::Concentration ? "concentration" : "anti_concentration";
}

Regime regime_from_string(std::string_view text)
{
    if (text == "concentration") return Regime::Concentration;
    if (text == "anti_concentration") return Regime::AntiConcentration;
    throw std::invalid_argument("unknown regime '" + std::string(text) + "'");
}

Regime classify_regime(std::span<const RegimeRow> rows, const RegimeThresholds& th,
                       std::optional<double>* zeta_exponent)
{
    if (rows.empty()) return Regime::Concentration;
    std::vector<std::int64_t> grid;
    std::vector<double> zeta;
    bool imbalanced = true;
    for (const auto& r : rows) {
        grid.push_back(r.n);
        zeta.push_back(r.zeta_sq.get_d());
        imbalanced = imbalanced && r.imbalance_sq.get_d() > th.imbalance_min;
    }
    const auto exponent = power_law_exponent(grid, zeta);
    if (zeta_exponent) *zeta_exponent = exponent;
    const bool zeta_large = zeta.back() > th.zeta_sq_min;
    const bool zeta_flat = rows.size() < 2 || (exponent && *exponent > th.zeta_exponent_min);
    return imbalanced && zeta_large && zeta_flat ? Regime::AntiConcentration : Regime::Concentration;
}

SampleSummary summarize(std::span<const std::int64_t> xs)
{
    SampleSummary s;
    s.count = xs.size();
    if (xs.empty()) return s;
    s.min = *std::min_element(xs.begin(), xs.end());
    s.max = *std::max_element(xs.begin(), xs.end());
    long double sum = 0;
    for (auto x : xs) sum += static_cast<long double>(x);
    const long double n = static_cast<long double>(xs.size());
    const long double mean = sum / n;
    long double m2 = 0, m4 = 0;
    for (auto x : xs) {
        const long double d = static_cast<long double>(x) - mean;
        const long double d2 = d * d;
        m2 += d2;
        m4 += d2 * d2;
    }
    s.mean = static_cast<double>(mean);
    if (xs.size() < 2) return s;
    const long double var = m2 / (n - 1);
    s.var = static_cast<double>(var);
    s.mean_se = static_cast<double>(std::sqrt(var / n));
    if (xs.size() > 3) {
        // Var(s^2) ~ (mu4 - (n-3)/(n-1) sigma^4) / n
        const long double mu4 = m4 / n;
        const long double v = (mu4 - (n - 3) / (n - 1) * var * var) / n;
        s.var_se = static_cast<double>(std::sqrt(std::max<long double>(v, 0)));
    }
    return s;
}

std::vector<std::int64_t> simulate_monochromatic(const Graph& g, const Composition& c,
                                                 std::size_t trials, std::uint64_t seed,
                                                 unsigned threads)
{
    if (static_cast<std::int64_t>(g.order()) != c.total()) {
        throw std::invalid_argument("composition total does not match the graph order");
    }
    const auto n = static_cast<std::uint64_t>(g.order());
    // One buffer per block would be faster, but a per-trial buffer keeps the
    // work item a pure function of its index.
    return run_indexed<std::int64_t>(trials, threads, [&](std::size_t t) {
        Rng rng(derive_seed(seed, {n, static_cast<std::uint64_t>(t)}));
        thread_local std::vector<std::uint32_t> colors;
        sample_into(c, rng, colors);
        return count_monochromatic(g, colors);
    });
}

RegimeResult run_regime(const FamilySpec& family, std::size_t trials, std::uint64_t seed,
                        unsigned threads, const RegimeThresholds& thresholds)
{
    RegimeResult result;
    result.thresholds = thresholds;
    const Rational half(1, 2);
    for (auto n : family.grid) {
        if (n < 4) throw std::invalid_argument("every grid point must be at least 4");
        const Graph g = family.graph.at(n, seed);
        const auto st = stats(g);
        if (st.m == 0) {
            throw std::domain_error("degenerate family: no edges at n = " + std::to_string(n));
        }
        const Composition c = family.coloring.at(n);
        const MomentReport rep = full_report<Rational>(st, c);

        RegimeRow row;
        row.n = n;
        row.m = st.m;
        row.classes.assign(c.classes().begin(), c.classes().end());
        row.zeta_sq = rep.zeta_sq;
        row.rho = rep.rho;
        row.imbalance_sq = rep.imbalance_sq;
        row.normalized_var = rep.normalized_var;
        row.rho_zeta_product = rep.rho * rep.zeta_sq;
        row.pz_bound = pz_lower_bound<Rational>(half, rep.var_common, st.m);
        if (trials > 0) {
            const auto samples = simulate_monochromatic(g, c, trials, seed, threads);
            const auto s = summarize(samples);
            row.trials = static_cast<std::int64_t>(trials);
            row.empirical_mean = s.mean;
            row.empirical_mean_se = s.mean_se;
            row.empirical_var = s.var;
            row.empirical_var_se = s.var_se;
            const double exact_mean = rep.mean_M.get_d();
            double mad = 0;
            for (auto x : samples) mad += std::abs(static_cast<double>(x) - exact_mean);
            mad /= static_cast<double>(samples.size());
            std::size_t hits = 0;
            for (auto x : samples) hits += std::abs(static_cast<double>(x) - exact_mean) > 0.5 * mad;
            row.deviation_prob = static_cast<double>(hits) / static_cast<double>(samples.size());
        }
        result.rows.push_back(std::move(row));
    }

    result.regime = classify_regime(result.rows, thresholds, &result.zeta_exponent);
    std::vector<double> nv;
    for (auto& r : result.rows) {
        r.predicted_regime = result.regime;
        nv.push_back(r.normalized_var.get_d());
    }
    result.normalized_var_exponent = power_law_exponent(family.grid, nv);
    return result;
}

ComparisonRecord run_comparison(const Graph& g, const Composition& c, std::size_t trials,
                                std::uint64_t seed, unsigned threads)
{
    if (trials < 100) throw std::invalid_argument("run_comparison needs at least 100 trials");
    const auto st = stats(g);
    const MomentReport rep = full_report<Rational>(st, c);
    const auto samples = simulate_monochromatic(g, c, trials, seed, threads);

    ComparisonRecord out;
    out.n = st.n;
    out.m = st.m;
    out.classes.assign(c.classes().begin(), c.classes().end());
    out.trials = trials;
    out.seed = seed;
    out.exact_mean = rep.mean_M;
    out.exact_var = rep.var_common;
    out.empirical = summarize(samples);
    const auto within = [](double observed, double exact, double se) {
        // slack only absorbs floating rounding when se is exactly zero
        return std::abs(observed - exact) <= 4 * se + 1e-9 * std::max(1.0, std::abs(exact));
    };
    out.mean_pass = within(out.empirical.mean, out.exact_mean.get_d(), out.empirical.mean_se);
    out.var_pass = within(out.empirical.var, out.exact_var.get_d(), out.empirical.var_se);
    out.l_constant = out.empirical.min == out.empirical.max;
    return out;
}

std::vector<CorpusGraph> verification_corpus()
{
    std::vector<CorpusGraph> out;
    for (std::size_t n = 4; n <= 8; ++n) {
        out.push_back({"path" + std::to_string(n), generators::path(n)});
        out.push_back({"cycle" + std::to_string(n), generators::cycle(n)});
        out.push_back({"star" + std::to_string(n), generators::star(n)});
    }
    for (std::size_t n = 4; n <= 6; ++n) out.push_back({"K" + std::to_string(n), generators::complete(n)});
    out.push_back({"threshold_IDID", generators::threshold("IDID")});

    Rng rng(derive_seed(20240601, {}));
    for (int k = 0; k < 20; ++k) {
        const auto n = static_cast<std::size_t>(4 + rng.below(5));
        std::vector<Edge> edges;
        while (edges.empty()) {
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (rng.below(2)) edges.emplace_back(u, v);
        }
        out.push_back({"random" + std::to_string(k) + "_n" + std::to_string(n), Graph(n, std::move(edges))});
    }
    return out;
}

std::vector<Composition> all_compositions(std::int64_t n, std::size_t s)
{
    std::vector<Composition> out;
    if (s < 2 || n < static_cast<std::int64_t>(s)) return out;
    std::vector<std::int64_t> parts(s, 1);
    parts.back() = n - static_cast<std::int64_t>(s) + 1;
    // odometer over the first s-1 parts; the last part takes the remainder
    for (;;) {
        out.emplace_back(parts);
        std::size_t i = s - 1;
        for (;;) {
            if (i == 0) return out;
            --i;
            ++parts[i];
            std::int64_t used = 0;
            for (std::size_t j = 0; j + 1 < s; ++j) used += parts[j];
            if (n - used >= 1) {
                parts.back() = n - used;
                break;
            }
            parts[i] = 1;
        }
    }
}

namespace {

std::vector<std::vector<std::int64_t>> event_shapes(std::int64_t n)
{
    std::set<std::vector<std::int64_t>> shapes;
    std::vector<std::int64_t> cur;
    const auto grow = [&](auto&& self, std::size_t max_len, std::int64_t max_entry) -> void {
        if (!cur.empty()) {
            std::int64_t sum = 0;
            for (auto x : cur) sum += x;
            if (sum <= n) shapes.insert(cur);
        }
        if (cur.size() == max_len) return;
        for (std::int64_t a = 1; a <= max_entry; ++a) {
            cur.push_back(a);
            self(self, max_len, max_entry);
            cur.pop_back();
        }
    };
    grow(grow, 3, 3);
    grow(grow, 4, 2);
    return {shapes.begin(), shapes.end()};
}

std::string describe(const std::string& graph, const Composition& c, const std::string& what)
{
    return graph + " c=(" + join(c.classes()) + "): " + what;
}

void check_events(const Composition& c, std::uint64_t budget, VerificationSummary& summary)
{
    const auto s = c.parts();
    std::vector<oracle::EventSpec> events;
    struct Expected {
        std::string label;
        Rational value;
    };
    std::vector<Expected> expected;
    for (const auto& shape : event_shapes(c.total())) {
        const std::size_t k = shape.size();
        events.push_back({shape, std::nullopt});
        expected.push_back({"prob_distinct_colors sizes=(" + join(shape) + ")", prob_distinct_colors(c, shape)});
        if (k <= s) {
            std::vector<std::size_t> forward(k), backward(k);
            for (std::size_t j = 0; j < k; ++j) {
                forward[j] = j;
                backward[j] = s - 1 - j;
            }
            for (const auto& iota : {forward, backward}) {
                events.push_back({shape, iota});
                std::string label = "prob_fixed_colors sizes=(" + join(shape) + ") iota=(";
                for (std::size_t j = 0; j < k; ++j) label += (j ? "," : "") + std::to_string(iota[j]);
                expected.push_back({label + ")", prob_fixed_colors(c, shape, iota)});
            }
        }
    }
    if (c.total() >= 4) {
        events.push_back({{2, 2}, std::nullopt});
        expected.push_back({"prob_two_pairs", prob_two_pairs(c)});
    }
    const auto observed = oracle::event_frequencies(c, events, budget);
    for (std::size_t i = 0; i < events.size(); ++i) {
        ++summary.event_checks;
        if (observed[i] != expected[i].value) {
            summary.mismatches.push_back(describe("(events)", c, expected[i].label + " formula " +
                                                                     expected[i].value.get_str() + " oracle " +
                                                                     observed[i].get_str()));
        }
    }
}

} // namespace

VerificationSummary verify_against_oracle(std::int64_t max_n, std::uint64_t budget)
{
    VerificationSummary summary;
    std::set<std::vector<std::int64_t>> events_done;
    for (const auto& [name, g] : verification_corpus()) {
        const auto st = stats(g);
        if (st.n > max_n) continue;
        ++summary.graphs;
        for (std::size_t s : {2u, 3u}) {
            for (const auto& c : all_compositions(st.n, s)) {
                ++summary.cells;
                const auto moments = oracle::exact_moments(oracle::enumerate(g, c, budget));
                const auto mismatch = [&](const std::string& what, const Rational& formula,
                                          const Rational& truth) {
                    if (formula != truth) {
                        summary.mismatches.push_back(describe(name, c, what + " formula " + formula.get_str() +
                                                                       " oracle " + truth.get_str()));
                    }
                };
                for (std::size_t i = 0; i < c.parts(); ++i) {
                    const std::string idx = "[" + std::to_string(i + 1) + "]";
                    mismatch("mean_Mi" + idx, mean_Mi<Rational>(st.m, st.n, c[i]), moments.mean[i]);
                    mismatch("var_Mi" + idx, var_Mi<Rational>(st, c, i), moments.var[i]);
                }
                const auto means = mean_M_L<Rational>(st.m, c);
                mismatch("mean_M", means.mean_M, moments.mean_M);
                mismatch("mean_L", means.mean_L, moments.mean_L);
                const Rational common = var_common<Rational>(st, c);
                mismatch("var_common vs Var(M)", common, moments.var_M);
                mismatch("var_common vs Var(L)", common, moments.var_L);

                const std::vector<std::int64_t> key(c.classes().begin(), c.classes().end());
                if (events_done.insert(key).second) check_events(c, budget, summary);
            }
        }
    }
    return summary;
}

} // namespace randcolor::experiments
