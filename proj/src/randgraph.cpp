#include "randcolor/randgraph.hpp"

#include "randcolor/fit.hpp"
#include "randcolor/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace randcolor::randgraph {

DegreeLaw DegreeLaw::parse(std::string_view text)
{
    DegreeLaw law;
    Rational total = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string_view item = text.substr(start, comma - start);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("degree law atom '" + std::string(item) +
                                        "' is not 'value:probability'");
        }
        const Rational value = parse_rational(item.substr(0, colon));
        const Rational prob = parse_rational(item.substr(colon + 1));
        if (value.get_den() != 1 || value < 0) {
            throw std::invalid_argument("degree values must be non-negative integers");
        }
        if (prob <= 0) throw std::invalid_argument("degree law probabilities must be positive");
        law.atoms.emplace_back(value.get_num().get_si(), prob);
        total += prob;
        start = comma + 1;
    }
    if (total != 1) {
        throw std::invalid_argument("degree law probabilities sum to " + total.get_str() +
                                    ", not 1");
    }
    return law;
}

Rational DegreeLaw::mean() const
{
    Rational out = 0;
    for (const auto& [v, p] : atoms) out += p * to_integer(v);
    return out;
}

Rational DegreeLaw::second_moment() const
{
    Rational out = 0;
    for (const auto& [v, p] : atoms) out += p * to_integer(v * v);
    return out;
}

std::int64_t ModelSpec::order() const
{
    return std::visit([](const auto& m) { return m.n; }, model);
}

std::string ModelSpec::kind() const
{
    struct Namer {
        std::string operator()(const Gnp&) const { return "gnp"; }
        std::string operator()(const Config&) const { return "config"; }
        std::string operator()(const GeometricTorus&) const { return "geo"; }
        std::string operator()(const ChungLu& c) const { return c.star_like ? "starlike" : "cl"; }
    };
    return std::visit(Namer{}, model);
}

ModelSpec ModelSpec::star_like(std::int64_t n)
{
    if (n < 2) throw std::invalid_argument("starlike needs n >= 2");
    ChungLu cl;
    cl.n = n;
    cl.weights.assign(static_cast<std::size_t>(n), Rational(1));
    cl.weights[0] = Rational(to_integer(n));
    cl.star_like = true;
    return ModelSpec{cl};
}

namespace {

std::string canonical_kind(std::string_view kind)
{
    if (kind == "gnp" || kind == "er") return "gnp";
    if (kind == "config" || kind == "cm") return "config";
    if (kind == "geo" || kind == "geometric" || kind == "torus") return "geo";
    if (kind == "cl" || kind == "chunglu" || kind == "chung_lu") return "cl";
    if (kind == "starlike" || kind == "star_like") return "starlike";
    throw std::invalid_argument("unknown random graph model '" + std::string(kind) +
                                "' (expected gnp, config, geo, cl or starlike)");
}

std::vector<Rational> load_weights(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weights file '" + path + "'");
    std::vector<Rational> out;
    std::string token;
    while (in >> token) {
        Rational w = parse_rational(token);
        if (w <= 0) throw std::invalid_argument("Chung-Lu weights must be positive");
        out.push_back(w);
    }
    return out;
}

const std::string& require_param(const std::map<std::string, std::string>& params,
                                 const std::string& key, const std::string& kind)
{
    auto it = params.find(key);
    if (it == params.end()) {
        throw std::invalid_argument("model '" + kind + "' needs parameter '" + key + "'");
    }
    return it->second;
}

} // namespace

ModelTemplate ModelTemplate::parse(std::string_view text)
{
    ModelTemplate t;
    t.text_ = std::string(text);
    const auto colon = text.find(':');
    t.kind_ = canonical_kind(text.substr(0, colon));
    if (colon == std::string_view::npos) return t;

    // Items without '=' continue the previous value, so "law=3:0.5,4:0.5"
    // survives the comma split.
    std::string last_key;
    std::size_t start = colon + 1;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string item(text.substr(start, comma - start));
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            if (last_key.empty()) throw std::invalid_argument("model parameter '" + item + "' has no key");
            t.params_[last_key] += "," + item;
        } else {
            last_key = item.substr(0, eq);
            t.params_[last_key] = item.substr(eq + 1);
        }
        start = comma + 1;
    }

    if (auto it = t.params_.find("n"); it != t.params_.end()) {
        const Rational n = parse_rational(it->second);
        if (n.get_den() != 1 || n < 1) throw std::invalid_argument("n must be a positive integer");
        t.n_ = n.get_num().get_si();
        t.params_.erase(it);
    }
    static const std::map<std::string, std::vector<std::string>> allowed = {
        {"gnp", {"p"}}, {"config", {"law"}}, {"geo", {"r"}}, {"cl", {"w"}}, {"starlike", {}}};
    for (const auto& [key, value] : t.params_) {
        const auto& ok = allowed.at(t.kind_);
        if (std::find(ok.begin(), ok.end(), key) == ok.end()) {
            throw std::invalid_argument("model '" + t.kind_ + "' has no parameter '" + key + "'");
        }
    }
    // Fail early on syntax errors rather than at the first grid point.
    if (t.kind_ == "gnp") NExpression::parse(require_param(t.params_, "p", t.kind_));
    if (t.kind_ == "geo") NExpression::parse(require_param(t.params_, "r", t.kind_));
    if (t.kind_ == "config") DegreeLaw::parse(require_param(t.params_, "law", t.kind_));
    return t;
}

ModelSpec ModelTemplate::fixed() const
{
    if (!n_) throw std::invalid_argument("model '" + text_ + "' does not fix n");
    return at(*n_);
}

ModelSpec ModelTemplate::at(std::int64_t n) const
{
    if (n < 2) throw std::invalid_argument("random graph models need n >= 2");
    if (kind_ == "gnp") {
        Gnp m{n, NExpression::parse(require_param(params_, "p", kind_)).eval(n)};
        if (m.p.value < 0 || m.p.value > 1) {
            throw std::invalid_argument("gnp needs p in [0, 1] (got " + std::to_string(m.p.value) +
                                        " at n = " + std::to_string(n) + ")");
        }
        return ModelSpec{m};
    }
    if (kind_ == "config") {
        Config m{n, DegreeLaw::parse(require_param(params_, "law", kind_))};
        if (std::all_of(m.law.atoms.begin(), m.law.atoms.end(), [](auto& a) { return a.first == 0; })) {
            throw std::invalid_argument("configuration model law puts all mass at degree 0");
        }
        return ModelSpec{m};
    }
    if (kind_ == "geo") {
        GeometricTorus m{n, NExpression::parse(require_param(params_, "r", kind_)).eval(n)};
        if (!(m.r.value > 0) || m.r.value > 0.5) {
            throw std::invalid_argument("geometric torus needs r in (0, 1/2]");
        }
        return ModelSpec{m};
    }
    if (kind_ == "cl") {
        ChungLu m;
        m.weights = load_weights(require_param(params_, "w", kind_));
        m.n = static_cast<std::int64_t>(m.weights.size());
        if (m.n != n) {
            throw std::invalid_argument("weights file has " + std::to_string(m.n) +
                                        " entries but n = " + std::to_string(n));
        }
        return ModelSpec{m};
    }
    return ModelSpec::star_like(n);
}

ModelSpec parse_model(std::string_view text)
{
    const auto t = ModelTemplate::parse(text);
    if (t.kind() == "cl") {
        // n is implied by the weights file when absent
        try {
            return t.fixed();
        } catch (const std::invalid_argument&) {
            auto it = text.find("w=");
            const std::string path(text.substr(it + 2, text.find(',', it) - it - 2));
            return t.at(static_cast<std::int64_t>(load_weights(path).size()));
        }
    }
    return t.fixed();
}

namespace {

Graph sample_gnp(std::int64_t n, double p, Rng& rng)
{
    std::vector<Edge> edges;
    if (p <= 0.0) return Graph(static_cast<std::size_t>(n), {});
    if (p >= 1.0) {
        for (std::int64_t u = 0; u < n; ++u)
            for (std::int64_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph(static_cast<std::size_t>(n), std::move(edges));
    }
    // Geometric skipping over the pairs (w, v), w < v, in row order.
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
        const double r = rng.uniform();
        w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
        while (w >= v && v < n) {
            w -= v;
            ++v;
        }
        if (v < n) edges.emplace_back(static_cast<Vertex>(w), static_cast<Vertex>(v));
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph sample_torus(std::int64_t n, double r, Rng& rng)
{
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> y(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.uniform();
        y[i] = rng.uniform();
    }
    const double r2 = r * r;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            double dx = std::abs(x[i] - x[j]);
            double dy = std::abs(y[i] - y[j]);
            dx = std::min(dx, 1.0 - dx);
            dy = std::min(dy, 1.0 - dy);
            if (dx * dx + dy * dy <= r2) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph(x.size(), std::move(edges));
}

Graph sample_chung_lu(const ChungLu& m, Rng& rng)
{
    std::vector<double> w;
    w.reserve(m.weights.size());
    double total = 0;
    for (const auto& q : m.weights) {
        w.push_back(q.get_d());
        total += w.back();
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            const double p = std::min(1.0, w[i] * w[j] / total);
            if (rng.uniform() < p) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return Graph(w.size(), std::move(edges));
}

RandomGraphSample sample_config(const Config& m, Rng& rng)
{
    std::vector<double> cumulative;
    double acc = 0;
    for (const auto& [v, p] : m.law.atoms) {
        acc += p.get_d();
        cumulative.push_back(acc);
    }
    const auto n = static_cast<std::size_t>(m.n);
    std::vector<std::int64_t> degree(n);
    std::int64_t sum = 0;
    for (auto& d : degree) {
        const double u = rng.uniform();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto idx = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                               m.law.atoms.size() - 1);
        d = m.law.atoms[idx].first;
        sum += d;
    }
    if (sum % 2 == 1) {
        ++degree[rng.below(n)];
        ++sum;
    }

    std::vector<Vertex> stubs;
    stubs.reserve(static_cast<std::size_t>(sum));
    Integer sigma2 = 0;
    for (std::size_t v = 0; v < n; ++v) {
        stubs.insert(stubs.end(), static_cast<std::size_t>(degree[v]), static_cast<Vertex>(v));
        sigma2 += to_integer(degree[v] * degree[v]);
    }
    rng.shuffle(stubs.begin(), stubs.end());

    std::vector<Edge> edges;
    edges.reserve(stubs.size() / 2);
    for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
        Vertex a = stubs[k], b = stubs[k + 1];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    RandomGraphSample out{Graph(n, std::move(edges)), sum / 2, sigma2};
    return out;
}

} // namespace

RandomGraphSample generate(const ModelSpec& spec, Rng& rng)
{
    struct Visitor {
        Rng& rng;
        RandomGraphSample operator()(const Gnp& m) const { return {sample_gnp(m.n, m.p.value, rng), {}, {}}; }
        RandomGraphSample operator()(const Config& m) const { return sample_config(m, rng); }
        RandomGraphSample operator()(const GeometricTorus& m) const
        {
            return {sample_torus(m.n, m.r.value, rng), {}, {}};
        }
        RandomGraphSample operator()(const ChungLu& m) const { return {sample_chung_lu(m, rng), {}, {}}; }
    };
    return std::visit(Visitor{rng}, spec.model);
}

std::string to_string(RatioMode mode)
{
    return mode == RatioMode::ClosedForm ? "closed_form" : "monte_carlo";
}

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Concentrates:
        return "concentrates";
    case Verdict::AntiConcentrates:
        return "anti_concentrates";
    default:
        return "inconclusive";
    }
}

namespace {

template <class Scalar>
struct RatioParts {
    Scalar numerator;
    Scalar denominator;
};

/// E[Sigma_2] = n E[d^2] with d ~ Bin(n-1, p); E m = C(n, 2) p.
template <class Scalar>
RatioParts<Scalar> binomial_parts(std::int64_t n, const Scalar& p)
{
    const Scalar n1 = scalar_from<Scalar>(n - 1);
    const Scalar ns = scalar_from<Scalar>(n);
    const Scalar mean_deg = n1 * p;
    const Scalar second = n1 * p * (1 - p) + mean_deg * mean_deg;
    const Scalar mean_m = ns * n1 / 2 * p;
    return {ns * second, mean_m * mean_m};
}

template <class Scalar>
RatioParts<Scalar> chung_lu_parts(const std::vector<Scalar>& w)
{
    Scalar total = scalar_from<Scalar>(std::int64_t{0});
    for (const auto& x : w) total += x;
    Scalar mean_m = scalar_from<Scalar>(std::int64_t{0});
    Scalar sigma2 = mean_m;
    const Scalar one = scalar_from<Scalar>(std::int64_t{1});
    for (std::size_t i = 0; i < w.size(); ++i) {
        Scalar deg_mean = scalar_from<Scalar>(std::int64_t{0});
        Scalar deg_var = deg_mean;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (i == j) continue;
            Scalar p = w[i] * w[j] / total;
            if (p > one) p = one;
            deg_mean += p;
            deg_var += p * (one - p);
            if (j > i) mean_m += p;
        }
        sigma2 += deg_var + deg_mean * deg_mean;
    }
    return {sigma2, mean_m * mean_m};
}

RatioCriterion from_parts(std::int64_t n, double num, double den, std::optional<Rational> exact)
{
    RatioCriterion out;
    out.n = n;
    out.numerator = num;
    out.denominator = den;
    out.mode = RatioMode::ClosedForm;
    out.exact_ratio = std::move(exact);
    out.ratio = out.exact_ratio ? to_double(*out.exact_ratio) : num / den;
    return out;
}

template <class Scalar>
RatioCriterion criterion_of(std::int64_t n, const RatioParts<Scalar>& parts)
{
    if (parts.denominator == 0) {
        throw std::domain_error("expected size is zero; the ratio is undefined");
    }
    if constexpr (std::is_same_v<Scalar, Rational>) {
        return from_parts(n, parts.numerator.get_d(), parts.denominator.get_d(),
                          Rational(parts.numerator / parts.denominator));
    } else {
        return from_parts(n, parts.numerator, parts.denominator, std::nullopt);
    }
}

} // namespace

RatioCriterion ratio_closed_form(const ModelSpec& spec)
{
    struct Visitor {
        RatioCriterion operator()(const Gnp& m) const
        {
            if (m.p.exact) return criterion_of(m.n, binomial_parts<Rational>(m.n, *m.p.exact));
            return criterion_of(m.n, binomial_parts<double>(m.n, m.p.value));
        }
        RatioCriterion operator()(const Config& m) const
        {
            const Rational mu1 = m.law.mean();
            const Rational mu2 = m.law.second_moment();
            const Rational n(to_integer(m.n));
            const Rational mean_m = n * mu1 / 2;
            return criterion_of(m.n, RatioParts<Rational>{n * mu2, mean_m * mean_m});
        }
        RatioCriterion operator()(const GeometricTorus& m) const
        {
            const double p = std::numbers::pi * m.r.value * m.r.value;
            return criterion_of(m.n, binomial_parts<double>(m.n, p));
        }
        RatioCriterion operator()(const ChungLu& m) const
        {
            return criterion_of(m.n, chung_lu_parts<Rational>(m.weights));
        }
    };
    return std::visit(Visitor{}, spec.model);
}

namespace {

struct TrialSizes {
    double sigma2 = 0;
    double m = 0;
    double pre_sigma2 = 0;
    double pre_m = 0;
};

struct MeanSe {
    double mean = 0;
    double se = 0;
    double var = 0;
};

MeanSe summarize(const std::vector<double>& xs)
{
    MeanSe out;
    if (xs.empty()) return out;
    long double sum = 0;
    for (double x : xs) sum += x;
    const long double mean = sum / static_cast<long double>(xs.size());
    long double ss = 0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    out.mean = static_cast<double>(mean);
    if (xs.size() > 1) {
        out.var = static_cast<double>(ss / static_cast<long double>(xs.size() - 1));
        out.se = std::sqrt(out.var / static_cast<double>(xs.size()));
    }
    return out;
}

std::vector<TrialSizes> sample_sizes(const ModelSpec& spec, std::size_t trials, std::uint64_t seed,
                                     unsigned threads)
{
    const auto n = static_cast<std::uint64_t>(spec.order());
    return run_indexed<TrialSizes>(trials, threads, [&](std::size_t t) {
        Rng rng(derive_seed(seed, {n, static_cast<std::uint64_t>(t)}));
        const auto sample = generate(spec, rng);
        const auto st = stats(sample.graph);
        TrialSizes out;
        out.sigma2 = st.sigma2.get_d();
        out.m = static_cast<double>(st.m);
        out.pre_sigma2 = sample.pre_erasure_sigma2 ? sample.pre_erasure_sigma2->get_d() : out.sigma2;
        out.pre_m = sample.pre_erasure_m ? static_cast<double>(*sample.pre_erasure_m) : out.m;
        return out;
    });
}

} // namespace

RatioCriterion ratio_monte_carlo(const ModelSpec& spec, std::size_t trials, std::uint64_t seed,
                                 unsigned threads)
{
    if (trials < 2) throw std::invalid_argument("ratio_monte_carlo needs at least 2 trials");
    const auto sizes = sample_sizes(spec, trials, seed, threads);
    std::vector<double> s2, m, pre_s2, pre_m;
    for (const auto& t : sizes) {
        s2.push_back(t.sigma2);
        m.push_back(t.m);
        pre_s2.push_back(t.pre_sigma2);
        pre_m.push_back(t.pre_m);
    }
    const auto S = summarize(s2);
    const auto M = summarize(m);

    RatioCriterion out;
    out.n = spec.order();
    out.mode = RatioMode::MonteCarlo;
    out.numerator = S.mean;
    out.denominator = M.mean * M.mean;
    out.numerator_se = S.se;
    out.mean_m_se = M.se;
    if (M.mean == 0) {
        out.verdict = Verdict::Inconclusive;
        out.ratio = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.ratio = S.mean / out.denominator;
    const double rel_s = S.mean > 0 ? S.se / S.mean : 0.0;
    const double rel_m = M.se / M.mean;
    out.ratio_se = out.ratio * std::sqrt(rel_s * rel_s + 4 * rel_m * rel_m);
    if (std::holds_alternative<Config>(spec.model)) {
        const double pm = summarize(pre_m).mean;
        out.pre_erasure_ratio = summarize(pre_s2).mean / (pm * pm);
    }
    return out;
}

Verdict classify_ratio_trend(std::span<const std::int64_t> grid, std::span<const double> ratios,
                             const VerdictThresholds& th)
{
    if (ratios.empty() || std::any_of(ratios.begin(), ratios.end(), [](double r) { return !std::isfinite(r); })) {
        return Verdict::Inconclusive;
    }
    const auto exponent = power_law_exponent(grid, ratios);
    if (!exponent) return Verdict::Inconclusive;
    if (*exponent <= th.decreasing_exponent && ratios.back() < th.final_value) {
        return Verdict::Concentrates;
    }
    const double lowest = *std::min_element(ratios.begin(), ratios.end());
    if (lowest > th.floor_value && std::abs(*exponent) < th.flat_exponent) {
        return Verdict::AntiConcentrates;
    }
    return Verdict::Inconclusive;
}

namespace {

RatioSweep finish_sweep(std::vector<RatioCriterion> points, std::span<const std::int64_t> grid,
                        const VerdictThresholds& th)
{
    RatioSweep sweep;
    std::vector<double> ratios;
    for (const auto& p : points) ratios.push_back(p.ratio);
    sweep.exponent = power_law_exponent(grid, ratios);
    sweep.verdict = classify_ratio_trend(grid, ratios, th);
    for (auto& p : points) p.verdict = sweep.verdict;
    sweep.points = std::move(points);
    return sweep;
}

} // namespace

RatioSweep sweep_closed_form(const ModelTemplate& model, std::span<const std::int64_t> grid,
                             const VerdictThresholds& th)
{
    std::vector<RatioCriterion> points;
    for (auto n : grid) points.push_back(ratio_closed_form(model.at(n)));
    return finish_sweep(std::move(points), grid, th);
}

RatioSweep sweep_monte_carlo(const ModelTemplate& model, std::span<const std::int64_t> grid,
                             std::size_t trials, std::uint64_t seed, unsigned threads,
                             const VerdictThresholds& th)
{
    std::vector<RatioCriterion> points;
    for (auto n : grid) points.push_back(ratio_monte_carlo(model.at(n), trials, seed, threads));
    return finish_sweep(std::move(points), grid, th);
}

AssumptionCheck assumption_star_check(const ModelTemplate& model, std::span<const std::int64_t> grid,
                                      std::size_t trials, std::uint64_t seed, unsigned threads)
{
    if (trials < 2) throw std::invalid_argument("assumption_star_check needs at least 2 trials");
    AssumptionCheck out;
    std::vector<double> ratios;
    for (auto n : grid) {
        const auto sizes = sample_sizes(model.at(n), trials, seed, threads);
        std::vector<double> m;
        for (const auto& t : sizes) m.push_back(t.m);
        const auto M = summarize(m);
        SizeDispersion point;
        point.n = n;
        point.mean_m = M.mean;
        point.var_m = M.var;
        point.var_m_over_mean_sq = M.mean > 0 ? M.var / (M.mean * M.mean) : std::numeric_limits<double>::infinity();
        out.points.push_back(point);
        ratios.push_back(point.var_m_over_mean_sq);
    }
    out.exponent = power_law_exponent(grid, ratios);
    const bool all_zero = std::all_of(ratios.begin(), ratios.end(), [](double r) { return r == 0.0; });
    out.holds = all_zero || (out.exponent && *out.exponent <= VerdictThresholds{}.decreasing_exponent);
    return out;
}

} // namespace randcolor::randgraph
