#include "randcolor/graph.hpp"
#include "randcolor/rng.hpp"

#include <doctest.h>

#include "test_util.hpp"

#include <filesystem>

using namespace randcolor;
namespace gen = randcolor::generators;

TEST_CASE("generator sizes")
{
    CHECK(gen::complete(5).size() == 10);
    CHECK(gen::star(6).size() == 5);
    CHECK(gen::star(6).degrees()[0] == 5);
    CHECK(gen::path(4).size() == 3);
    CHECK(gen::cycle(7).size() == 7);
    const Graph c = gen::regular_circulant(10, 3);
    CHECK(c.size() == 15);
    for (auto d : c.degrees()) CHECK(d == 3);
    CHECK_THROWS(gen::regular_circulant(9, 3));
    CHECK_THROWS(gen::regular_circulant(5, 5));
    CHECK_THROWS(gen::cycle(2));
}

TEST_CASE("threshold IDID is the paw")
{
    const Graph g = gen::threshold("IDID");
    const auto s = stats(g);
    CHECK(s.n == 4);
    CHECK(s.m == 4);
    CHECK(s.sigma2 == 18);
    CHECK(s.max_degree == 3);
    CHECK_THROWS(gen::threshold("IXD"));
}

TEST_CASE("P4 invariants")
{
    const auto s = stats(gen::path(4));
    CHECK(s.m == 3);
    CHECK(s.sigma2 == 10);
    CHECK(s.wedges == 2);
    CHECK(zeta_squared(s) == Q(10, 9));
}

TEST_CASE("sigma2 by counting in two ways, wedges from degrees")
{
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng.below(15);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.uniform() < 0.4) edges.emplace_back(u, v);
        const Graph g(n, edges);
        const auto s = stats(g);
        CHECK(edge_degree_sum(g) == s.sigma2);
        Integer wedges = 0;
        for (auto d : g.degrees()) wedges += Integer(d) * (d - 1) / 2;
        CHECK(s.wedges == wedges);
        std::uint64_t handshake = 0;
        for (auto d : g.degrees()) handshake += d;
        CHECK(handshake == 2 * g.size());
    }
}

TEST_CASE("regular graphs have zeta^2 = 4/n")
{
    for (std::size_t n : {6u, 10u, 40u}) {
        for (std::size_t d : {2u, 3u, 4u}) {
            const Graph g = gen::regular_circulant(n, d);
            CHECK(zeta_squared(g) == Q(4, static_cast<long>(n)));
        }
    }
    CHECK(zeta_squared(gen::cycle(9)) == Q(4, 9));
}

TEST_CASE("star zeta^2 = n/(n-1)")
{
    for (long n : {4L, 10L, 100L}) CHECK(zeta_squared(gen::star(n)) == Q(n, n - 1));
}

TEST_CASE("empty graph has no zeta")
{
    CHECK_THROWS_AS(zeta_squared(Graph(4, {})), std::domain_error);
}

TEST_CASE("constructor canonicalizes and validates")
{
    const Graph g(3, {{2, 1}, {0, 2}});
    CHECK(g.edges()[0] == Edge{0, 2});
    CHECK(g.edges()[1] == Edge{1, 2});
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("disjoint union")
{
    const std::vector<Graph> parts{gen::path(3), gen::cycle(3)};
    const Graph u = gen::disjoint_union(parts);
    CHECK(u.order() == 6);
    CHECK(u.size() == 5);
}

TEST_CASE("edge list round trip and errors")
{
    const Graph g = gen::threshold("IDID");
    const std::string text = format_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(parse_edge_list("3 1\r\n0 2\r\n") == Graph(3, {{0, 2}}));

    const auto kind_of = [](const std::string& s) {
        try {
            parse_edge_list(s);
        } catch (const EdgeListError& e) {
            return e.kind();
        }
        FAIL("expected an EdgeListError");
        return EdgeListError::Kind::Io;
    };
    CHECK(kind_of("3 1\n0 x\n") == EdgeListError::Kind::Malformed);
    CHECK(kind_of("3 1\n0 5\n") == EdgeListError::Kind::EndpointOutOfRange);
    CHECK(kind_of("3 2\n0 1\n1 0\n") == EdgeListError::Kind::DuplicateEdge);
    CHECK(kind_of("3 1\n1 1\n") == EdgeListError::Kind::SelfLoop);
    CHECK(kind_of("3 2\n0 1\n") == EdgeListError::Kind::CountMismatch);

    const auto path = std::filesystem::temp_directory_path() / "randcolor_graph_test.txt";
    save_edge_list(g, path);
    CHECK(load_edge_list(path) == g);
    std::filesystem::remove(path);
    try {
        load_edge_list("/nonexistent/dir/graph.txt");
        FAIL("expected an I/O error");
    } catch (const EdgeListError& e) {
        CHECK(e.kind() == EdgeListError::Kind::Io);
    }
}
