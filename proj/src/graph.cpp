#include "randcolor/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace randcolor {

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), degrees_(n, 0)
{
    for (auto& [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u >= n_ || v >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an endpoint >= n = " + std::to_string(n_));
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw std::invalid_argument("duplicate edge (" + std::to_string(dup->first) + ", " +
                                    std::to_string(dup->second) + ")");
    }
    for (const auto& [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
    }
}

GraphStats stats(const Graph& g)
{
    GraphStats s;
    s.n = static_cast<std::int64_t>(g.order());
    s.m = static_cast<std::int64_t>(g.size());
    s.sigma2 = 0;
    s.wedges = 0;
    for (std::uint32_t d : g.degrees()) {
        Integer dz(static_cast<unsigned long>(d));
        s.sigma2 += dz * dz;
        s.wedges += dz * (dz - 1) / 2;
        s.max_degree = std::max<std::int64_t>(s.max_degree, d);
    }
    return s;
}

Integer edge_degree_sum(const Graph& g)
{
    Integer total = 0;
    auto deg = g.degrees();
    for (const auto& [u, v] : g.edges()) total += static_cast<unsigned long>(deg[u]) + deg[v];
    return total;
}

Rational zeta_squared(const GraphStats& s)
{
    if (s.m == 0) throw std::domain_error("zeta is undefined for an edgeless graph");
    const Integer m = to_integer(s.m);
    return make_rational(s.sigma2, m * m);
}

Rational zeta_squared(const Graph& g) { return zeta_squared(stats(g)); }

double zeta(const Graph& g) { return std::sqrt(zeta_squared(g).get_d()); }

namespace generators {

Graph complete(std::size_t n)
{
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n > 0)) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("star needs n >= 2");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph path(std::size_t n)
{
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    return Graph(n, std::move(edges));
}

Graph cycle(std::size_t n)
{
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
    edges.emplace_back(0, static_cast<Vertex>(n - 1));
    return Graph(n, std::move(edges));
}

Graph regular_circulant(std::size_t n, std::size_t d)
{
    if (d >= n) throw std::invalid_argument("circulant needs d < n");
    if (d % 2 == 1 && n % 2 == 1) {
        throw std::invalid_argument("circulant with odd d needs even n (n*d must be even)");
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t j = 1; j <= d / 2; ++j) {
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>((u + j) % n));
        }
        if (d % 2 == 1 && u < n / 2) {
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(u + n / 2));
        }
    }
    return Graph(n, std::move(edges));
}

Graph threshold(std::string_view creation_sequence)
{
    std::vector<Edge> edges;
    Vertex v = 0;
    for (char step : creation_sequence) {
        if (step == 'D' || step == 'd') {
            for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
        } else if (step != 'I' && step != 'i') {
            throw std::invalid_argument(std::string("threshold creation sequence may only contain "
                                                    "'I' (isolated) or 'D' (dominating), got '") +
                                        step + "'");
        }
        ++v;
    }
    return Graph(v, std::move(edges));
}

Graph disjoint_union(std::span<const Graph> parts)
{
    std::vector<Edge> edges;
    Vertex offset = 0;
    for (const Graph& g : parts) {
        for (const auto& [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
        offset += static_cast<Vertex>(g.order());
    }
    return Graph(offset, std::move(edges));
}

} // namespace generators

namespace {

bool parse_two(std::string_view line, std::uint64_t& a, std::uint64_t& b)
{
    const char* first = line.data();
    const char* last = line.data() + line.size();
    auto r1 = std::from_chars(first, last, a);
    if (r1.ec != std::errc{} || r1.ptr == last || *r1.ptr != ' ') return false;
    auto r2 = std::from_chars(r1.ptr + 1, last, b);
    return r2.ec == std::errc{} && r2.ptr == last;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    using Kind = EdgeListError::Kind;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    auto next_line = [&](std::string_view& out) {
        if (pos >= text.size()) return false;
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        out = text.substr(pos, nl - pos);
        if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
        pos = nl + 1;
        ++line_no;
        return true;
    };

    std::string_view line;
    if (!next_line(line)) throw EdgeListError(Kind::Malformed, 1, "line 1: missing header 'n m'");
    std::uint64_t n = 0, m = 0;
    if (!parse_two(line, n, m)) {
        throw EdgeListError(Kind::Malformed, line_no, "line 1: expected header 'n m'");
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    std::vector<std::size_t> origin;
    origin.reserve(m);
    while (next_line(line)) {
        if (line.empty() && pos >= text.size()) break;
        std::uint64_t u = 0, v = 0;
        if (!parse_two(line, u, v)) {
            throw EdgeListError(Kind::Malformed, line_no,
                                "line " + std::to_string(line_no) + ": expected 'u v'");
        }
        if (u == v) {
            throw EdgeListError(Kind::SelfLoop, line_no,
                                "line " + std::to_string(line_no) + ": self-loop at " +
                                    std::to_string(u));
        }
        if (u >= n || v >= n) {
            throw EdgeListError(Kind::EndpointOutOfRange, line_no,
                                "line " + std::to_string(line_no) + ": endpoint >= n = " +
                                    std::to_string(n));
        }
        if (u > v) std::swap(u, v);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        origin.push_back(line_no);
    }

    if (edges.size() != m) {
        throw EdgeListError(Kind::CountMismatch, line_no,
                            "header declares " + std::to_string(m) + " edges but " +
                                std::to_string(edges.size()) + " were read");
    }

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (edges[order[i]] == edges[order[i - 1]]) {
            const std::size_t at = origin[order[i]];
            throw EdgeListError(Kind::DuplicateEdge, at,
                                "line " + std::to_string(at) + ": duplicate edge " +
                                    std::to_string(edges[order[i]].first) + " " +
                                    std::to_string(edges[order[i]].second));
        }
    }
    return Graph(n, std::move(edges));
}

std::string format_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph load_edge_list(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw EdgeListError(EdgeListError::Kind::Io, 0, "cannot open '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void save_edge_list(const Graph& g, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << format_edge_list(g);
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

} // namespace randcolor
