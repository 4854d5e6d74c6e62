#pragma once

#include "randcolor/exact.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace randcolor {

/// A model parameter: always a double, and exact when it can be.
struct Param {
    double value = 0.0;
    std::optional<Rational> exact;

    static Param of(const Rational& q) { return {q.get_d(), q}; }
    static Param of(double x) { return {x, std::nullopt}; }
};

/// Arithmetic expression in the vertex count n, e.g. "4/n", "n^-0.5",
/// "2*n^(1/3)", "0.1". Supports + - * / ^ and parentheses. Stays exact
/// under + - * / and integer powers of exact values.
class NExpression {
public:
    static NExpression parse(std::string_view text);

    Param eval(std::int64_t n) const;
    bool uses_n() const;
    const std::string& text() const { return text_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

} // namespace randcolor
