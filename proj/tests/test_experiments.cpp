#include "randcolor/experiments.hpp"

#include <doctest.h>

#include <cmath>

using namespace randcolor;
using namespace randcolor::experiments;

TEST_CASE("graph families")
{
    CHECK(GraphFamily::parse("star").at(10).size() == 9);
    CHECK(GraphFamily::parse("circulant:d=4").at(12).size() == 24);
    CHECK(GraphFamily::parse("threshold:IDID").at(4).size() == 4);
    CHECK_THROWS(GraphFamily::parse("threshold:IDID").at(5));
    CHECK_THROWS(GraphFamily::parse("circulant"));
    CHECK_THROWS(GraphFamily::parse("star:d=3"));
    const auto gnp = GraphFamily::parse("gnp:p=1/2");
    CHECK(gnp.is_random());
    CHECK(gnp.at(30, 1) == gnp.at(30, 1));
    CHECK_FALSE(gnp.at(30, 1) == gnp.at(30, 2));
    CHECK(resolve_graph("cycle:n=9").size() == 9);
    CHECK(resolve_graph("gnp:n=20,p=1").size() == 190);
    CHECK_THROWS(resolve_graph("cycle"));
}

TEST_CASE("coloring rules")
{
    CHECK(ColoringRule::parse("balanced:3").at(10) == Composition({4, 3, 3}));
    CHECK(ColoringRule::parse("ratios:3/4,1/4").at(40) == Composition({30, 10}));
    CHECK(ColoringRule::parse("ratios:3,1").at(40) == Composition({30, 10}));
    CHECK(ColoringRule::parse("5,3").at(8) == Composition({5, 3}));
    CHECK_THROWS(ColoringRule::parse("5,3").at(9));
    CHECK_THROWS(ColoringRule::parse("ratios:1,0"));
    CHECK_THROWS(ColoringRule::parse("balanced:1"));
}

TEST_CASE("grids")
{
    CHECK(parse_grid("50,100") == std::vector<std::int64_t>{50, 100});
    CHECK(parse_grid("50:400:x2") == std::vector<std::int64_t>{50, 100, 200, 400});
    CHECK(parse_grid("10:30:+10") == std::vector<std::int64_t>{10, 20, 30});
    CHECK_THROWS(parse_grid("100,50"));
    CHECK_THROWS(parse_grid("1:2:x1"));
    CHECK_THROWS(parse_grid("a,b"));
}

TEST_CASE("star with ratios 3/4, 1/4 anti-concentrates")
{
    FamilySpec f{GraphFamily::parse("star"), ColoringRule::parse("ratios:3/4,1/4"), {40, 80, 160, 320}};
    const auto result = run_regime(f, 2000, 17);
    CHECK(result.regime == Regime::AntiConcentration);
    for (const auto& row : result.rows) {
        CHECK(row.predicted_regime == Regime::AntiConcentration);
        CHECK(row.pz_bound.get_d() >= 0.01);
        REQUIRE(row.deviation_prob);
        CHECK(*row.deviation_prob > 0.1);
        REQUIRE(row.empirical_var);
        const double exact = row.normalized_var.get_d() * static_cast<double>(row.m * row.m);
        CHECK(std::abs(*row.empirical_var - exact) <= 4 * *row.empirical_var_se);
    }
}

TEST_CASE("balanced star is degenerate; cycles concentrate")
{
    FamilySpec star{GraphFamily::parse("star"), ColoringRule::parse("balanced:2"), {40, 80, 160}};
    const auto s = run_regime(star, 0, 1);
    CHECK(s.regime == Regime::Concentration);
    for (const auto& row : s.rows) {
        CHECK(row.normalized_var == 0);
        CHECK(row.imbalance_sq == 0);
        CHECK_FALSE(row.empirical_mean);
    }

    FamilySpec cycle{GraphFamily::parse("cycle"), ColoringRule::parse("ratios:3/4,1/4"), {50, 100, 200, 400}};
    const auto c = run_regime(cycle, 0, 1);
    CHECK(c.regime == Regime::Concentration);
    REQUIRE(c.normalized_var_exponent);
    CHECK(*c.normalized_var_exponent == doctest::Approx(-1.0).epsilon(0.05));
    for (std::size_t i = 1; i < c.rows.size(); ++i) CHECK(c.rows[i].normalized_var < c.rows[i - 1].normalized_var);
}

TEST_CASE("thresholds move the verdict")
{
    FamilySpec f{GraphFamily::parse("star"), ColoringRule::parse("ratios:3/4,1/4"), {40, 80}};
    RegimeThresholds strict;
    strict.zeta_sq_min = 2.0;
    CHECK(run_regime(f, 0, 1, 1, strict).regime == Regime::Concentration);
    CHECK_THROWS_AS(run_regime({GraphFamily::parse("gnp:p=0"), ColoringRule::parse("balanced:2"), {10}}, 0, 1),
                    std::domain_error);
    CHECK_THROWS(run_regime({GraphFamily::parse("star"), ColoringRule::parse("balanced:2"), {3}}, 0, 1));
}

TEST_CASE("random family regime with sampling")
{
    FamilySpec f{GraphFamily::parse("gnp:p=4/n"), ColoringRule::parse("balanced:2"), {100, 200, 400}};
    const auto r = run_regime(f, 500, 3);
    CHECK(r.regime == Regime::Concentration);
    std::vector<double> ratio;
    for (const auto& row : r.rows) ratio.push_back(*row.empirical_var / (*row.empirical_mean * *row.empirical_mean));
    CHECK(ratio.back() < ratio.front());
}

TEST_CASE("summaries")
{
    const std::vector<std::int64_t> xs{1, 2, 3, 4};
    const auto s = summarize(xs);
    CHECK(s.mean == doctest::Approx(2.5));
    CHECK(s.var == doctest::Approx(5.0 / 3));
    CHECK(s.mean_se == doctest::Approx(std::sqrt(5.0 / 12)));
    CHECK(s.min == 1);
    CHECK(s.max == 4);
    const std::vector<std::int64_t> constant(10, 7);
    const auto c = summarize(constant);
    CHECK(c.var == 0);
    CHECK(c.var_se == 0);
}

TEST_CASE("comparison examples")
{
    const auto p4 = run_comparison(generators::path(4), Composition({2, 2}), 100000, 1);
    CHECK(p4.mean_pass);
    CHECK(p4.var_pass);
    CHECK(p4.empirical.mean == doctest::Approx(1.0).epsilon(0.02));
    CHECK(p4.empirical.var == doctest::Approx(2.0 / 3).epsilon(0.02));

    const auto k6 = run_comparison(generators::complete(6), Composition({3, 3}), 1000, 1);
    CHECK(k6.empirical.var == 0);
    CHECK(k6.mean_pass);
    CHECK(k6.var_pass);

    const auto star = run_comparison(generators::star(8), Composition({4, 4}), 10000, 1);
    CHECK(star.l_constant);
    CHECK(7 - star.empirical.min == 4);

    CHECK_THROWS(run_comparison(generators::path(4), Composition({2, 2}), 99, 1));
}

TEST_CASE("simulation ignores the thread count")
{
    const Graph g = generators::cycle(30);
    const Composition c({20, 10});
    CHECK(simulate_monochromatic(g, c, 1000, 9, 1) == simulate_monochromatic(g, c, 1000, 9, 3));
}

TEST_CASE("compositions and corpus")
{
    CHECK(all_compositions(8, 2).size() == 7);
    CHECK(all_compositions(8, 3).size() == 21);
    CHECK(all_compositions(2, 3).empty());
    for (const auto& c : all_compositions(6, 3)) CHECK(c.total() == 6);
    const auto corpus = verification_corpus();
    CHECK(corpus.size() == 39);
    for (const auto& [name, g] : corpus) {
        CHECK(g.order() >= 4);
        CHECK(g.order() <= 8);
        CHECK(g.size() >= 1);
    }
}

TEST_CASE("oracle verification on small graphs")
{
    const auto s = verify_against_oracle(6);
    CHECK(s.ok());
    CHECK(s.cells > 0);
    CHECK(s.event_checks > 0);
}
