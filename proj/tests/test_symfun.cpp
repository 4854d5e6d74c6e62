#include "randcolor/rng.hpp"
#include "randcolor/symfun.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace randcolor;

namespace {

IntVector vec(std::initializer_list<std::int64_t> xs)
{
    std::vector<std::int64_t> v(xs);
    return make_int_vector(v);
}

// Sum over k-subsets by bitmask.
Integer brute_elementary(const IntVector& v, int k)
{
    Integer total = 0;
    const std::size_t s = v.size();
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Integer prod = 1;
        for (std::size_t i = 0; i < s; ++i)
            if (mask >> i & 1u) prod *= v[i];
        total += prod;
    }
    return total;
}

IntVector random_vector(Rng& rng, std::size_t min_len = 1)
{
    const std::size_t s = min_len + rng.below(9 - min_len);
    IntVector v;
    for (std::size_t i = 0; i < s; ++i) v.push_back(Integer(static_cast<unsigned long>(rng.below(51))));
    return v;
}

} // namespace

TEST_CASE("falling factorial examples")
{
    CHECK(falling_factorial(7, 0) == 1);
    CHECK(falling_factorial(3, 5) == 0);
    CHECK(falling_factorial(5, 2) == 20);
    CHECK(falling_factorial(0, 0) == 1);
    CHECK(falling_factorial_as<double>(5, 2) == 20.0);
    CHECK(falling_factorial_as<Rational>(3, 4) == 0);
}

TEST_CASE("falling factorial equals a!/(a-b)!")
{
    for (unsigned a = 0; a <= 20; ++a) {
        Integer fa;
        mpz_fac_ui(fa.get_mpz_t(), a);
        for (unsigned b = 0; b <= a; ++b) {
            Integer fb;
            mpz_fac_ui(fb.get_mpz_t(), a - b);
            CHECK(falling_factorial(a, b) == fa / fb);
        }
    }
}

TEST_CASE("elementary symmetric examples")
{
    CHECK(elementary_symmetric(vec({4, 9, 2}), 0) == 1);
    CHECK(elementary_symmetric(vec({4, 9}), 3) == 0);
    CHECK(elementary_symmetric(vec({1, 2, 3}), 2) == 11);
    CHECK(elementary_symmetric(vec({1, 2, 3}), -1) == 0);
    const auto all = elementary_symmetric_all(vec({1, 2, 3}), 5);
    REQUIRE(all.size() == 6);
    CHECK(all[3] == 6);
    CHECK(all[5] == 0);
}

TEST_CASE("power sum examples")
{
    CHECK(power_sum(vec({4, 9, 2}), 0) == 3);
    CHECK(power_sum(vec({1, 2, 3}), 1) == 6);
    CHECK(power_sum(vec({1, 2, 3}), 2) == 14);
}

TEST_CASE("newton route examples")
{
    auto t = e_from_newton(vec({1, 1, 1}));
    CHECK(t.e1 == 3);
    CHECK(t.e2 == 3);
    CHECK(t.e3 == 1);
    t = e_from_newton(vec({2, 2, 0}));
    CHECK(t.e3 == 0);
    t = e_from_newton(vec({1, 2, 3}));
    CHECK(t.e1 == 6);
    CHECK(t.e2 == 11);
    CHECK(t.e3 == 6);
    CHECK_THROWS_AS(e_from_newton(vec({1, 2})), std::invalid_argument);
}

TEST_CASE("negative entries are rejected")
{
    std::vector<std::int64_t> bad{1, -2};
    CHECK_THROWS_AS(make_int_vector(bad), std::invalid_argument);
}

TEST_CASE("DP matches subset enumeration on random vectors")
{
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto v = random_vector(rng);
        for (int k = 0; k <= static_cast<int>(v.size()) + 1; ++k) {
            CHECK(elementary_symmetric(v, k) == brute_elementary(v, k));
        }
    }
}

TEST_CASE("subset-sum identity")
{
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = random_vector(rng);
        const std::size_t s = v.size();
        const Integer e1 = elementary_symmetric(v, 1);
        for (int k = 1; k <= static_cast<int>(s); ++k) {
            Integer lhs = 0;
            for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
                if (__builtin_popcount(mask) != k) continue;
                Integer sum = 0, prod = 1;
                for (std::size_t i = 0; i < s; ++i) {
                    if (mask >> i & 1u) {
                        sum += v[i];
                        prod *= v[i];
                    }
                }
                lhs += (sum - k) * prod;
            }
            const Integer rhs = (e1 - k) * elementary_symmetric(v, k) - (k + 1) * elementary_symmetric(v, k + 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("E2 of squares identity and Newton agreement")
{
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto v = random_vector(rng, 3);
        IntVector squares;
        for (const auto& x : v) squares.push_back(x * x);
        const Integer e1 = elementary_symmetric(v, 1), e2 = elementary_symmetric(v, 2);
        const Integer e3 = elementary_symmetric(v, 3), e4 = elementary_symmetric(v, 4);
        CHECK(elementary_symmetric(squares, 2) == e2 * e2 - 2 * e1 * e3 + 2 * e4);
        const auto t = e_from_newton(v);
        CHECK(t.e1 == e1);
        CHECK(t.e2 == e2);
        CHECK(t.e3 == e3);
    }
}

TEST_CASE("parse_rational forms")
{
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2/7") == Q(-2, 7));
    CHECK(parse_rational("0.125") == Q(1, 8));
    CHECK(parse_rational("1e-3") == Q(1, 1000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}
