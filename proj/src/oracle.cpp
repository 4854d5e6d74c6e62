#include "randcolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace randcolor::oracle {

Integer coloring_count(const Composition& c)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(c.total()));
    for (auto ci : c.classes()) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(ci));
        out /= f;
    }
    return out;
}

namespace {

std::vector<std::uint32_t> first_coloring(const Composition& c, const Integer& total,
                                          std::uint64_t budget)
{
    if (total > Integer(static_cast<unsigned long>(budget))) {
        throw BudgetExceeded("enumeration needs " + total.get_str() +
                             " colorings, above the budget of " + std::to_string(budget));
    }
    std::vector<std::uint32_t> colors;
    for (std::size_t i = 0; i < c.parts(); ++i) {
        colors.insert(colors.end(), static_cast<std::size_t>(c[i]), static_cast<std::uint32_t>(i));
    }
    return colors;
}

void check_visits(std::uint64_t visited, const Integer& total)
{
    if (Integer(static_cast<unsigned long>(visited)) != total) {
        throw std::logic_error("enumeration visited " + std::to_string(visited) +
                               " colorings, expected " + total.get_str());
    }
}

bool event_holds(std::span<const std::uint32_t> colors, const EventSpec& event,
                 const std::vector<std::vector<std::uint32_t>>& sets)
{
    std::vector<std::uint32_t> seen;
    for (std::size_t j = 0; j < sets.size(); ++j) {
        const std::uint32_t first = colors[sets[j].front()];
        for (auto v : sets[j]) {
            if (colors[v] != first) return false;
        }
        if (event.iota) {
            if (first != (*event.iota)[j]) return false;
        } else {
            if (std::find(seen.begin(), seen.end(), first) != seen.end()) return false;
            seen.push_back(first);
        }
    }
    return true;
}

std::vector<std::vector<std::uint32_t>> default_sets(const EventSpec& event, std::int64_t n)
{
    std::vector<std::vector<std::uint32_t>> sets;
    std::uint32_t next = 0;
    for (auto size : event.sizes) {
        if (size < 1) throw std::invalid_argument("event vertex sets must be non-empty");
        std::vector<std::uint32_t> set;
        for (std::int64_t j = 0; j < size; ++j) set.push_back(next++);
        sets.push_back(std::move(set));
    }
    if (static_cast<std::int64_t>(next) > n) {
        throw std::invalid_argument("event covers more than n vertices");
    }
    return sets;
}

} // namespace

std::map<std::vector<std::int64_t>, Rational> ExactDistribution::support() const
{
    std::map<std::vector<std::int64_t>, Rational> out;
    for (const auto& [key, cnt] : counts) out.emplace(key, make_rational(cnt, total_colorings));
    return out;
}

Rational ExactDistribution::probability(const std::vector<std::int64_t>& per_color) const
{
    auto it = counts.find(per_color);
    return it == counts.end() ? Rational(0) : make_rational(it->second, total_colorings);
}

ExactDistribution enumerate(const Graph& g, const Composition& c, std::uint64_t budget)
{
    if (g.order() != static_cast<std::size_t>(c.total())) {
        throw std::invalid_argument("composition sums to " + std::to_string(c.total()) +
                                    " but the graph has " + std::to_string(g.order()) +
                                    " vertices");
    }
    ExactDistribution d;
    d.total_colorings = coloring_count(c);
    d.edges = static_cast<std::int64_t>(g.size());
    auto colors = first_coloring(c, d.total_colorings, budget);

    std::map<std::vector<std::int64_t>, std::uint64_t> tally;
    std::vector<std::int64_t> key(c.parts());
    std::uint64_t visited = 0;
    do {
        std::fill(key.begin(), key.end(), 0);
        for (const auto& [u, v] : g.edges()) {
            if (colors[u] == colors[v]) ++key[colors[u]];
        }
        ++tally[key];
        ++visited;
    } while (std::next_permutation(colors.begin(), colors.end()));
    check_visits(visited, d.total_colorings);

    for (const auto& [k, cnt] : tally) d.counts.emplace(k, Integer(static_cast<unsigned long>(cnt)));
    return d;
}

ExactMoments exact_moments(const ExactDistribution& d)
{
    const std::size_t s = d.counts.empty() ? 0 : d.counts.begin()->first.size();
    ExactMoments out;
    out.mean.assign(s, Rational(0));
    std::vector<std::vector<Rational>> second(s, std::vector<Rational>(s, Rational(0)));
    Rational m_first = 0;
    Rational m_second = 0;

    for (const auto& [key, cnt] : d.counts) {
        const Rational p = make_rational(cnt, d.total_colorings);
        std::int64_t mono = 0;
        for (std::size_t i = 0; i < s; ++i) {
            mono += key[i];
            out.mean[i] += p * to_integer(key[i]);
            for (std::size_t j = 0; j < s; ++j) second[i][j] += p * to_integer(key[i] * key[j]);
        }
        m_first += p * to_integer(mono);
        m_second += p * to_integer(mono * mono);
    }

    out.covariance.assign(s, std::vector<Rational>(s));
    out.var.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < s; ++j) out.covariance[i][j] = second[i][j] - out.mean[i] * out.mean[j];
        out.var[i] = out.covariance[i][i];
    }
    out.mean_M = m_first;
    out.var_M = m_second - m_first * m_first;

    // L = m - M, computed from its own law rather than by symmetry.
    Rational l_first = 0;
    Rational l_second = 0;
    for (const auto& [key, cnt] : d.counts) {
        const Rational p = make_rational(cnt, d.total_colorings);
        const std::int64_t bi = d.edges - std::accumulate(key.begin(), key.end(), std::int64_t{0});
        l_first += p * to_integer(bi);
        l_second += p * to_integer(bi * bi);
    }
    out.mean_L = l_first;
    out.var_L = l_second - l_first * l_first;
    return out;
}

Rational event_frequency(const Composition& c, const EventSpec& event, std::uint64_t budget,
                         const std::optional<std::vector<std::vector<std::uint32_t>>>& vertex_sets)
{
    const auto sets = vertex_sets ? *vertex_sets : default_sets(event, c.total());
    if (sets.size() != event.sizes.size()) {
        throw std::invalid_argument("one vertex set per event size is required");
    }
    std::vector<bool> used(static_cast<std::size_t>(c.total()), false);
    for (std::size_t j = 0; j < sets.size(); ++j) {
        if (static_cast<std::int64_t>(sets[j].size()) != event.sizes[j] || sets[j].empty()) {
            throw std::invalid_argument("vertex set sizes do not match the event");
        }
        for (auto v : sets[j]) {
            if (v >= used.size() || used[v]) {
                throw std::invalid_argument("vertex sets must be disjoint subsets of [n]");
            }
            used[v] = true;
        }
    }
    if (event.iota && event.iota->size() != sets.size()) {
        throw std::invalid_argument("iota must assign one color per vertex set");
    }

    const Integer total = coloring_count(c);
    auto colors = first_coloring(c, total, budget);
    std::uint64_t hits = 0;
    std::uint64_t visited = 0;
    do {
        hits += event_holds(colors, event, sets);
        ++visited;
    } while (std::next_permutation(colors.begin(), colors.end()));
    check_visits(visited, total);
    return make_rational(Integer(static_cast<unsigned long>(hits)), total);
}

std::vector<Rational> event_frequencies(const Composition& c, const std::vector<EventSpec>& events,
                                        std::uint64_t budget)
{
    std::vector<std::vector<std::vector<std::uint32_t>>> sets;
    sets.reserve(events.size());
    for (const auto& e : events) sets.push_back(default_sets(e, c.total()));

    const Integer total = coloring_count(c);
    auto colors = first_coloring(c, total, budget);
    std::vector<std::uint64_t> hits(events.size(), 0);
    std::uint64_t visited = 0;
    do {
        for (std::size_t k = 0; k < events.size(); ++k) hits[k] += event_holds(colors, events[k], sets[k]);
        ++visited;
    } while (std::next_permutation(colors.begin(), colors.end()));
    check_visits(visited, total);

    std::vector<Rational> out;
    out.reserve(events.size());
    for (auto h : hits) out.push_back(make_rational(Integer(static_cast<unsigned long>(h)), total));
    return out;
}

} // namespace randcolor::oracle
