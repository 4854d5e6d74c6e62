#include "randcolor/coloring.hpp"

#include "randcolor/symfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace randcolor {

Composition::Composition(std::vector<std::int64_t> classes) : classes_(std::move(classes))
{
    if (classes_.size() < 2) {
        throw std::invalid_argument("a composition needs at least 2 classes (got " +
                                    std::to_string(classes_.size()) + ")");
    }
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (classes_[i] < 1) {
            throw std::invalid_argument("class " + std::to_string(i + 1) +
                                        " must have at least one vertex");
        }
        n_ += classes_[i];
    }
}

Composition Composition::balanced(std::int64_t n, std::size_t s)
{
    if (s < 2 || n < static_cast<std::int64_t>(s)) {
        throw std::invalid_argument("balanced split needs 2 <= s <= n (s = " + std::to_string(s) +
                                    ", n = " + std::to_string(n) + ")");
    }
    const auto parts = static_cast<std::int64_t>(s);
    std::vector<std::int64_t> classes(s, n / parts);
    for (std::int64_t i = 0; i < n % parts; ++i) ++classes[static_cast<std::size_t>(i)];
    return Composition(std::move(classes));
}

Composition Composition::from_ratios(std::int64_t n, std::span<const Rational> ratios)
{
    Rational total = 0;
    for (const Rational& r : ratios) {
        if (r <= 0) throw std::invalid_argument("color ratios must be positive");
        total += r;
    }
    std::vector<std::int64_t> classes(ratios.size());
    std::vector<Rational> remainder(ratios.size());
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        const Rational quota = ratios[i] / total * Rational(to_integer(n));
        Integer whole;
        mpz_fdiv_q(whole.get_mpz_t(), quota.get_num_mpz_t(), quota.get_den_mpz_t());
        classes[i] = whole.get_si();
        remainder[i] = quota - Rational(whole);
        assigned += classes[i];
    }
    std::vector<std::size_t> order(ratios.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::int64_t k = 0; k < n - assigned; ++k) ++classes[order[static_cast<std::size_t>(k)]];

    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] < 1) {
            throw std::invalid_argument("ratio " + ratios[i].get_str() + " leaves class " +
                                        std::to_string(i + 1) + " empty at n = " +
                                        std::to_string(n));
        }
    }
    return Composition(std::move(classes));
}

std::vector<Integer> Composition::as_integers() const
{
    std::vector<Integer> out;
    out.reserve(classes_.size());
    for (auto c : classes_) out.push_back(to_integer(c));
    return out;
}

std::vector<Rational> Composition::distribution() const
{
    std::vector<Rational> out;
    out.reserve(classes_.size());
    const Integer n = to_integer(n_);
    for (auto c : classes_) out.push_back(make_rational(to_integer(c), n));
    return out;
}

Composition parse_composition(std::string_view text, std::int64_t n)
{
    constexpr std::string_view balanced_prefix = "balanced:";
    if (text.starts_with(balanced_prefix)) {
        const std::string rest(text.substr(balanced_prefix.size()));
        std::size_t used = 0;
        long s = 0;
        try {
            s = std::stol(rest, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != rest.size() || s < 2) {
            throw std::invalid_argument("expected 'balanced:s' with s >= 2, got '" +
                                        std::string(text) + "'");
        }
        return Composition::balanced(n, static_cast<std::size_t>(s));
    }

    std::vector<std::int64_t> classes;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        const std::string item(text.substr(start, comma - start));
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (item.empty() || used != item.size()) {
            throw std::invalid_argument("bad class size '" + item + "' in '" + std::string(text) +
                                        "'");
        }
        classes.push_back(v);
        start = comma + 1;
    }
    Composition c(std::move(classes));
    if (n >= 0 && c.total() != n) {
        throw std::invalid_argument("class sizes sum to " + std::to_string(c.total()) +
                                    " but the graph has " + std::to_string(n) + " vertices");
    }
    return c;
}

void sample_into(const Composition& c, Rng& rng, std::vector<std::uint32_t>& colors)
{
    colors.clear();
    colors.reserve(static_cast<std::size_t>(c.total()));
    for (std::size_t i = 0; i < c.parts(); ++i) colors.insert(colors.end(), static_cast<std::size_t>(c[i]), static_cast<std::uint32_t>(i));
    rng.shuffle(colors.begin(), colors.end());
}

ColorAssignment sample(const Composition& c, Rng& rng)
{
    ColorAssignment f;
    sample_into(c, rng, f.colors);
    return f;
}

EdgeCounts count(const Graph& g, const ColorAssignment& f, std::size_t colors)
{
    if (f.colors.size() != g.order()) {
        throw std::invalid_argument("coloring has " + std::to_string(f.colors.size()) +
                                    " entries but the graph has " + std::to_string(g.order()) +
                                    " vertices");
    }
    EdgeCounts out;
    out.per_color.assign(colors, 0);
    for (const auto& [u, v] : g.edges()) {
        const auto cu = f.colors[u];
        if (cu == f.colors[v]) {
            if (cu >= colors) throw std::invalid_argument("color index out of range");
            ++out.per_color[cu];
        }
    }
    out.mono = std::accumulate(out.per_color.begin(), out.per_color.end(), std::int64_t{0});
    out.bi = static_cast<std::int64_t>(g.size()) - out.mono;
    return out;
}

EdgeCounts count(const Graph& g, const ColorAssignment& f, const Composition& c)
{
    return count(g, f, c.parts());
}

std::int64_t count_monochromatic(const Graph& g, std::span<const std::uint32_t> colors)
{
    std::int64_t mono = 0;
    for (const auto& [u, v] : g.edges()) mono += colors[u] == colors[v];
    return mono;
}

namespace {

std::int64_t checked_total(const Composition& c, std::span<const std::int64_t> sizes)
{
    if (sizes.empty()) throw std::invalid_argument("event needs at least one vertex set");
    std::int64_t a = 0;
    for (auto s : sizes) {
        if (s < 1) throw std::invalid_argument("event vertex sets must be non-empty");
        a += s;
    }
    if (a > c.total()) {
        throw std::invalid_argument("event covers " + std::to_string(a) + " vertices but n = " +
                                    std::to_string(c.total()));
    }
    return a;
}

Integer kn(std::int64_t a, std::int64_t b)
{
    return falling_factorial(to_integer(a), static_cast<unsigned>(b));
}

Integer factorial(std::size_t k)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

bool is_one_pair_shape(std::span<const std::int64_t> sizes)
{
    return std::count(sizes.begin(), sizes.end(), 2) == 1 &&
           std::count(sizes.begin(), sizes.end(), 1) == static_cast<std::ptrdiff_t>(sizes.size()) - 1;
}

void sum_injections(const Composition& c, std::span<const std::int64_t> sizes, std::size_t j,
                    std::vector<bool>& used, const Integer& partial, Integer& total)
{
    if (j == sizes.size()) {
        total += partial;
        return;
    }
    for (std::size_t color = 0; color < c.parts(); ++color) {
        if (used[color]) continue;
        Integer factor = kn(c[color], sizes[j]);
        if (factor == 0) continue;
        used[color] = true;
        sum_injections(c, sizes, j + 1, used, partial * factor, total);
        used[color] = false;
    }
}

} // namespace

Rational prob_fixed_colors(const Composition& c, std::span<const std::int64_t> sizes,
                           std::span<const std::size_t> iota)
{
    const std::int64_t a = checked_total(c, sizes);
    if (sizes.size() > c.parts()) {
        throw std::invalid_argument("k = " + std::to_string(sizes.size()) +
                                    " sets cannot take distinct colors among s = " +
                                    std::to_string(c.parts()));
    }
    if (iota.size() != sizes.size()) {
        throw std::invalid_argument("iota must assign exactly one color per vertex set");
    }
    std::vector<bool> used(c.parts(), false);
    Integer num = 1;
    for (std::size_t j = 0; j < sizes.size(); ++j) {
        if (iota[j] >= c.parts()) throw std::invalid_argument("iota maps outside [s]");
        if (used[iota[j]]) throw std::invalid_argument("iota is not injective");
        used[iota[j]] = true;
        num *= kn(c[iota[j]], sizes[j]);
    }
    return make_rational(num, kn(c.total(), a));
}

Rational prob_distinct_by_injections(const Composition& c, std::span<const std::int64_t> sizes)
{
    const std::int64_t a = checked_total(c, sizes);
    if (sizes.size() > c.parts()) return 0;
    if (c.parts() > 12) {
        throw std::invalid_argument("injection enumeration is limited to s <= 12; use equal-size "
                                    "or (2,1,...,1) events for more colors");
    }
    std::vector<bool> used(c.parts(), false);
    Integer total = 0;
    sum_injections(c, sizes, 0, used, Integer(1), total);
    return make_rational(total, kn(c.total(), a));
}

Rational prob_distinct_equal_sizes(const Composition& c, std::size_t k, std::int64_t b)
{
    if (k == 0 || b < 1) throw std::invalid_argument("need k >= 1 sets of b >= 1 vertices");
    const std::int64_t a = static_cast<std::int64_t>(k) * b;
    if (a > c.total()) throw std::invalid_argument("event covers more than n vertices");
    if (k > c.parts()) return 0;
    std::vector<Integer> falling;
    falling.reserve(c.parts());
    for (auto ci : c.classes()) falling.push_back(kn(ci, b));
    const Integer ek = elementary_symmetric(falling, static_cast<int>(k));
    return make_rational(factorial(k) * ek, kn(c.total(), a));
}

Rational prob_distinct_one_pair(const Composition& c, std::size_t k)
{
    if (k == 0) throw std::invalid_argument("need k >= 1");
    const auto n = c.total();
    if (static_cast<std::int64_t>(k) + 1 > n) throw std::invalid_argument("event covers more than n vertices");
    if (k > c.parts()) return 0;
    const auto e = elementary_symmetric_all(c.as_integers(), static_cast<int>(k) + 1);
    const Integer bracket = to_integer(n - static_cast<std::int64_t>(k)) * e[k] -
                            Integer(static_cast<unsigned long>(k + 1)) * e[k + 1];
    return make_rational(factorial(k - 1) * bracket, kn(n, static_cast<std::int64_t>(k) + 1));
}

Rational prob_two_pairs(const Composition& c)
{
    const auto n = c.total();
    if (n < 4) throw std::invalid_argument("two disjoint pairs need n >= 4");
    const auto e = elementary_symmetric_all(c.as_integers(), 4);
    const Integer num = 2 * (e[2] * (e[2] - e[1] + 1) - e[3] * (2 * e[1] - 3) + 2 * e[4]);
    return make_rational(num, kn(n, 4));
}

Rational prob_distinct_colors(const Composition& c, std::span<const std::int64_t> sizes)
{
    checked_total(c, sizes);
    const std::size_t k = sizes.size();
    if (k > c.parts()) return 0;
    if (std::all_of(sizes.begin(), sizes.end(), [&](auto b) { return b == sizes[0]; })) {
        return prob_distinct_equal_sizes(c, k, sizes[0]);
    }
    if (is_one_pair_shape(sizes)) return prob_distinct_one_pair(c, k);
    return prob_distinct_by_injections(c, sizes);
}

Rational imbalance(const Composition& c)
{
    const Rational center(1, static_cast<unsigned long>(c.parts()));
    Rational total = 0;
    for (const Rational& g : c.distribution()) {
        const Rational d = g - center;
        total += d * d;
    }
    return total;
}

} // namespace randcolor
