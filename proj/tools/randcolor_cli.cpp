// randcolor: exact moments, oracle checks, simulations and regime sweeps
// for monochromatic edge counts under uniform colorings with fixed class
// sizes.
//
// Exit codes: 0 success, 1 validation failure, 2 input error.

#include "randcolor/experiments.hpp"
#include "randcolor/oracle.hpp"
#include "randcolor/parallel.hpp"
#include "randcolor/serialize.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace rc = randcolor;
namespace ex = randcolor::experiments;
namespace rg = randcolor::randgraph;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_input = 2;

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        rc::io::write_text_file(path, text);
    }
}

bool wants_csv(const std::string& path, const std::string& format)
{
    if (format == "csv") return true;
    if (format == "json") return false;
    return path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
}

struct MomentsArgs {
    std::string graph;
    std::string classes;
    std::string json_out;
    std::string csv_out;
    std::uint64_t seed = 0;
};

int run_moments(const MomentsArgs& a)
{
    const rc::Graph g = ex::resolve_graph(a.graph, a.seed);
    const auto n = static_cast<std::int64_t>(g.order());
    const rc::Composition c = rc::parse_composition(a.classes, n);
    const auto st = rc::stats(g);
    const auto report = rc::full_report<rc::Rational>(st, c);
    const std::string json = rc::io::dump(rc::io::moments_to_json(st, c, report));
    if (!a.json_out.empty()) rc::io::write_text_file(a.json_out, json);
    if (!a.csv_out.empty()) rc::io::write_text_file(a.csv_out, rc::io::moments_to_csv(st, c, report));
    if (a.json_out.empty() && a.csv_out.empty()) std::cout << json;
    return exit_ok;
}

struct VerifyArgs {
    std::int64_t max_n = 8;
    std::uint64_t budget = rc::oracle::default_budget;
};

int run_verify(const VerifyArgs& a)
{
    const auto summary = ex::verify_against_oracle(a.max_n, a.budget);
    std::cout << rc::io::dump(rc::io::verification_to_json(summary));
    return summary.ok() ? exit_ok : exit_validation;
}

struct SimulateArgs {
    std::string graph;
    std::string classes;
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out;
};

int run_simulate(const SimulateArgs& a)
{
    const rc::Graph g = ex::resolve_graph(a.graph, a.seed);
    const rc::Composition c = rc::parse_composition(a.classes, static_cast<std::int64_t>(g.order()));
    const auto rec = ex::run_comparison(g, c, a.trials, a.seed, a.threads);
    emit(rc::io::dump(rc::io::comparison_to_json(rec)), a.out);
    return exit_ok;
}

struct RegimeArgs {
    std::string family;
    std::string grid;
    std::string classes;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string out;
    std::string format = "auto";
    ex::RegimeThresholds thresholds;
};

int run_regime(const RegimeArgs& a)
{
    ex::FamilySpec family{ex::GraphFamily::parse(a.family), ex::ColoringRule::parse(a.classes),
                          ex::parse_grid(a.grid)};
    const auto result = ex::run_regime(family, a.trials, a.seed, a.threads, a.thresholds);
    const std::string body = wants_csv(a.out, a.format)
                                 ? rc::io::regime_rows_to_csv(result.rows)
                                 : rc::io::dump(rc::io::regime_rows_to_json(result.rows));
    emit(body, a.out);
    // with rows on stdout, the metadata would corrupt them
    if (!a.out.empty() && a.out != "-") {
        std::cout << rc::io::dump(rc::io::regime_metadata(family, result, a.trials, a.seed));
    }
    return exit_ok;
}

struct RdcheckArgs {
    std::string model;
    std::string grid;
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string mode = "both";
    bool assumption = false;
    std::string out;
};

int run_rdcheck(const RdcheckArgs& a)
{
    const auto model = rg::ModelTemplate::parse(a.model);
    const auto grid = ex::parse_grid(a.grid);
    rc::io::Json out{{"model", model.text()}, {"grid", grid}, {"trials", a.trials}, {"seed", a.seed}};
    if (a.mode == "closed" || a.mode == "both") out["closed_form"] = rc::io::sweep_to_json(rg::sweep_closed_form(model, grid));
    if (a.mode == "mc" || a.mode == "both") {
        out["monte_carlo"] = rc::io::sweep_to_json(rg::sweep_monte_carlo(model, grid, a.trials, a.seed, a.threads));
    }
    if (a.assumption) {
        out["assumption"] = rc::io::assumption_to_json(rg::assumption_star_check(model, grid, a.trials, a.seed, a.threads));
    }
    emit(rc::io::dump(out), a.out);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact moments and concentration regimes of monochromatic edge counts"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = rc::default_thread_count();
    app.add_option("--threads", threads, "Worker threads (default: $RANDCOLOR_THREADS or all cores)")
        ->check(CLI::PositiveNumber);

    MomentsArgs moments;
    auto* cmd_moments = app.add_subcommand("moments", "Exact moment report for one graph and composition");
    cmd_moments->add_option("--graph", moments.graph, "Edge-list file or family with n, e.g. star:n=8")->required();
    cmd_moments->add_option("--classes", moments.classes, "c1,c2,... or balanced:s")->required();
    cmd_moments->add_option("--json", moments.json_out, "Write the JSON report here");
    cmd_moments->add_option("--csv", moments.csv_out, "Write a one-row CSV here");
    cmd_moments->add_option("--seed", moments.seed, "Seed for random graph families");

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("oracle-verify", "Check every formula against enumeration");
    cmd_verify->add_option("--max-n", verify.max_n, "Largest graph order in the corpus")->check(CLI::Range(4, 8));
    cmd_verify->add_option("--budget", verify.budget, "Maximum colorings enumerated per cell");

    SimulateArgs simulate;
    auto* cmd_simulate = app.add_subcommand("simulate", "Monte Carlo moments of M against the exact values");
    cmd_simulate->add_option("--graph", simulate.graph, "Edge-list file or family with n")->required();
    cmd_simulate->add_option("--classes", simulate.classes, "c1,c2,... or balanced:s")->required();
    cmd_simulate->add_option("--trials", simulate.trials, "Number of sampled colorings (>= 100)");
    cmd_simulate->add_option("--seed", simulate.seed, "Master seed")->required();
    cmd_simulate->add_option("--out", simulate.out, "Output file (default stdout)");

    RegimeArgs regime;
    auto* cmd_regime = app.add_subcommand("regime", "Regime classification along an n-grid");
    cmd_regime->add_option("--family", regime.family, "star, cycle, path, complete, circulant:d=K or a model template")
        ->required();
    cmd_regime->add_option("--grid", regime.grid, "n1,n2,... or lo:hi:xK or lo:hi:+K")->required();
    cmd_regime->add_option("--classes", regime.classes, "balanced:s, ratios:g1,g2,... or fixed sizes")->required();
    cmd_regime->add_option("--trials", regime.trials, "Sampled colorings per grid point (0 = exact only)");
    cmd_regime->add_option("--seed", regime.seed, "Master seed")->required();
    cmd_regime->add_option("--out", regime.out, "Rows file (.csv or .json); metadata goes to stdout");
    cmd_regime->add_option("--format", regime.format, "json, csv or auto (from the extension)")
        ->check(CLI::IsMember({"auto", "json", "csv"}));
    cmd_regime->add_option("--zeta-min", regime.thresholds.zeta_sq_min, "zeta^2 threshold at the largest n");
    cmd_regime->add_option("--imbalance-min", regime.thresholds.imbalance_min, "Persistent imbalance threshold");
    cmd_regime->add_option("--zeta-exponent-min", regime.thresholds.zeta_exponent_min,
                           "zeta^2 counts as flat when its fitted exponent is above this");

    RdcheckArgs rdcheck;
    auto* cmd_rdcheck = app.add_subcommand("rdcheck", "Ratio E[Sigma_2]/(E m)^2 for a random graph model");
    cmd_rdcheck->add_option("--model", rdcheck.model, "e.g. gnp:p=4/n, config:law=3:1, starlike")->required();
    cmd_rdcheck->add_option("--grid", rdcheck.grid, "n1,n2,... or lo:hi:xK or lo:hi:+K")->required();
    cmd_rdcheck->add_option("--trials", rdcheck.trials, "Graphs sampled per grid point");
    cmd_rdcheck->add_option("--seed", rdcheck.seed, "Master seed")->required();
    cmd_rdcheck->add_option("--mode", rdcheck.mode, "closed, mc or both")->check(CLI::IsMember({"closed", "mc", "both"}));
    cmd_rdcheck->add_flag("--assumption", rdcheck.assumption, "Also estimate Var(m)/(E m)^2 along the grid");
    cmd_rdcheck->add_option("--out", rdcheck.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*cmd_moments) return run_moments(moments);
        if (*cmd_verify) return run_verify(verify);
        simulate.threads = regime.threads = rdcheck.threads = threads;
        if (*cmd_simulate) return run_simulate(simulate);
        if (*cmd_regime) return run_regime(regime);
        if (*cmd_rdcheck) return run_rdcheck(rdcheck);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
