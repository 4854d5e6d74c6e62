#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace randcolor {

__extension__ typedef unsigned __int128 uint128;

/// SplitMix64 finalizer; used to decorrelate derived seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of an independent stream identified by (master, keys...).
/// stream(master, {n, trial}) is a pure function, so results never depend
/// on which thread ran which trial.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> keys)
{
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t k : keys) h = splitmix64(h ^ splitmix64(k + 0x632be59bd9b4e019ULL));
    return h;
}

/// Deterministic generator. Bounded integers and unit doubles are derived
/// here rather than through <random> distributions, whose algorithms are
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound), unbiased (Lemire's multiply-and-reject).
    std::uint64_t below(std::uint64_t bound)
    {
        uint128 prod = static_cast<uint128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(prod);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                prod = static_cast<uint128>(next()) * bound;
                low = static_cast<std::uint64_t>(prod);
            }
        }
        return static_cast<std::uint64_t>(prod >> 64);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class It>
    void shuffle(It first, It last)
    {
        const auto count = static_cast<std::uint64_t>(last - first);
        for (std::uint64_t i = count; i > 1; --i) {
            const auto j = below(i);
            std::iter_swap(first + (i - 1), first + j);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace randcolor
