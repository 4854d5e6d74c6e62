#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

namespace randcolor {

/// Least-squares slope of log(y) against log(n): the exponent of a power
/// law y ~ C n^k. Empty when fewer than two points or any y <= 0.
inline std::optional<double> power_law_exponent(std::span<const std::int64_t> n,
                                                std::span<const double> y)
{
    if (n.size() != y.size()) throw std::invalid_argument("power_law_exponent: size mismatch");
    if (n.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (!(y[i] > 0) || n[i] <= 0) return std::nullopt;
        const double lx = std::log(static_cast<double>(n[i]));
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double k = static_cast<double>(n.size());
    const double denom = k * sxx - sx * sx;
    if (denom == 0) return std::nullopt;
    return (k * sxy - sx * sy) / denom;
}

} // namespace randcolor
