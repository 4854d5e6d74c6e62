#include "randcolor/moments.hpp"

#include <doctest.h>

#include "test_util.hpp"

#include <algorithm>

using namespace randcolor;
namespace gen = randcolor::generators;

namespace {

struct Brute {
    std::vector<Rational> mean, var;
    Rational mean_M, var_M, mean_L;
};

// Exhaustive moments by next_permutation, written independently of the
// oracle module.
Brute brute(const Graph& g, const Composition& c)
{
    std::vector<std::uint32_t> colors;
    for (std::size_t i = 0; i < c.parts(); ++i) colors.insert(colors.end(), static_cast<std::size_t>(c[i]), static_cast<std::uint32_t>(i));
    const std::size_t s = c.parts();
    std::vector<Integer> sum(s), sq(s);
    Integer sum_M = 0, sq_M = 0;
    std::uint64_t total = 0;
    do {
        ++total;
        std::vector<long> per(s, 0);
        for (auto [u, v] : g.edges())
            if (colors[u] == colors[v]) ++per[colors[u]];
        long mono = 0;
        for (std::size_t i = 0; i < s; ++i) {
            sum[i] += per[i];
            sq[i] += per[i] * per[i];
            mono += per[i];
        }
        sum_M += mono;
        sq_M += mono * mono;
    } while (std::next_permutation(colors.begin(), colors.end()));
    Brute b;
    const Rational t(static_cast<unsigned long>(total));
    for (std::size_t i = 0; i < s; ++i) {
        const Rational mu = sum[i] / t;
        b.mean.push_back(mu);
        b.var.push_back(Rational(sq[i]) / t - mu * mu);
    }
    b.mean_M = sum_M / t;
    b.var_M = Rational(sq_M) / t - b.mean_M * b.mean_M;
    b.mean_L = Rational(static_cast<long>(g.size())) - b.mean_M;
    return b;
}

} // namespace

TEST_CASE("P4 with c = (2, 2)")
{
    const Graph g = gen::path(4);
    const Composition c({2, 2});
    const auto st = stats(g);
    CHECK(mean_Mi(3, 4, 2) == Q(1, 2));
    CHECK(var_Mi(st, c, 0) == Q(1, 4));
    const auto ab = coefficients_ab(c);
    CHECK(ab.a == Q(1, 3));
    CHECK(ab.b == Q(2, 3));
    const auto means = mean_M_L(3, c);
    CHECK(means.mean_M == 1);
    CHECK(means.mean_L == 2);
    const Rational v = var_common(st, c);
    CHECK(v == Q(2, 3));
    CHECK(pz_lower_bound(Rational(0), v, 3) == Q(2, 27));
    CHECK(pz_lower_bound(Q(1, 2), v, 3) == Q(1, 54));
    CHECK_THROWS(pz_lower_bound(Rational(1), v, 3));
    CHECK_THROWS(pz_lower_bound(Q(-1, 2), v, 3));
}

TEST_CASE("rho")
{
    CHECK(rho(Composition({3, 1})) == Q(3, 64));
    CHECK(rho(Composition({5, 5})) == 0);
    CHECK(rho(Composition({4, 4, 4})) == 0);
    CHECK(rho(Composition({5, 2, 1})) > 0);
}

TEST_CASE("formulas match exhaustive enumeration")
{
    const std::vector<Graph> graphs = {gen::path(5), gen::cycle(6), gen::star(7), gen::complete(5), gen::threshold("IDDI"),
                                       Graph(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {5, 6}, {0, 6}})};
    const std::vector<std::vector<std::int64_t>> comps = {{3, 2}, {2, 2, 1}, {1, 1, 3}, {4, 2, 1}, {2, 2, 2}, {3, 3, 1}};
    for (const auto& g : graphs) {
        const auto st = stats(g);
        for (const auto& cl : comps) {
            const Composition c(cl);
            if (c.total() != st.n) continue;
            const auto b = brute(g, c);
            for (std::size_t i = 0; i < c.parts(); ++i) {
                CHECK(mean_Mi(st.m, st.n, c[i]) == b.mean[i]);
                CHECK(var_Mi(st, c, i) == b.var[i]);
            }
            const auto means = mean_M_L(st.m, c);
            CHECK(means.mean_M == b.mean_M);
            CHECK(means.mean_L == b.mean_L);
            CHECK(var_common(st, c) == b.var_M);
        }
    }
}

TEST_CASE("degenerate variances")
{
    for (std::size_t n = 4; n <= 9; ++n) {
        const auto st = stats(gen::complete(n));
        for (std::size_t s = 2; s <= n / 2; ++s) {
            const auto c = Composition::balanced(static_cast<std::int64_t>(n), s);
            CHECK(var_common(st, c) == 0);
            for (std::size_t i = 0; i < s; ++i) CHECK(var_Mi(st, c, i) == 0);
        }
    }
    for (std::int64_t n : {4, 10, 100, 1000}) {
        const auto st = stats(gen::star(static_cast<std::size_t>(n)));
        CHECK(var_common(st, Composition::balanced(n, 2)) == 0);
    }
}

TEST_CASE("star with ratios 3/4, 1/4")
{
    const std::vector<Rational> g{Q(3, 4), Q(1, 4)};
    for (long n : {8L, 40L, 400L, 4000L}) {
        const auto c = Composition::from_ratios(n, g);
        const auto r = full_report<Rational>(stats(gen::star(static_cast<std::size_t>(n))), c);
        CHECK(r.normalized_var == Q(3 * n * n, 64 * (n - 1) * (n - 1)));
        CHECK(r.rho * r.zeta_sq == Q(3 * n, 64 * (n - 1)));
    }
}

TEST_CASE("double mirror agrees with the exact report")
{
    const std::vector<std::pair<Graph, Composition>> cases = {
        {gen::path(4), Composition({2, 2})},
        {gen::cycle(300), Composition({200, 70, 30})},
        {gen::star(1000), Composition({750, 250})},
        {gen::complete(60), Composition({30, 30})},
        {gen::regular_circulant(500, 7 - 1), Composition({100, 150, 250})},
    };
    for (const auto& [g, c] : cases) {
        const auto st = stats(g);
        const auto exact = full_report<Rational>(st, c);
        const auto approx = full_report<double>(st, c);
        CHECK(mirrors_agree(exact, approx, st.m));
    }
}

TEST_CASE("report preconditions")
{
    CHECK_THROWS_AS(full_report<Rational>(stats(gen::path(3)), Composition({2, 1})), std::domain_error);
    CHECK_THROWS(full_report<Rational>(stats(Graph(4, {})), Composition({2, 2})));
    CHECK_THROWS(full_report<Rational>(stats(gen::path(5)), Composition({2, 2})));
}
