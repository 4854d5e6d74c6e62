#pragma once

#include "randcolor/exact.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace randcolor {

/// Non-negative exact integers; indeterminates or evaluation points of the
/// symmetric functions below.
using IntVector = std::vector<Integer>;

IntVector make_int_vector(std::span<const std::int64_t> values);

/// Knuth falling factorial a(a-1)...(a-b+1). One for b = 0, zero for b > a.
Integer falling_factorial(const Integer& a, unsigned b);

/// Same product over any scalar; used by the floating-point mirror of the
/// moment formulas. Returns zero once a factor hits zero.
template <class Scalar>
Scalar falling_factorial_as(std::int64_t a, unsigned b)
{
    Scalar out = scalar_from<Scalar>(std::int64_t{1});
    for (unsigned j = 0; j < b; ++j) {
        const std::int64_t factor = a - static_cast<std::int64_t>(j);
        if (factor <= 0) return scalar_from<Scalar>(std::int64_t{0});
        out *= scalar_from<Scalar>(factor);
    }
    return out;
}

/// E_k(v). Total: 1 for k = 0, 0 for k > v.size() or k < 0.
/// One-row DP in O(s*k), independent of the power-sum route.
Integer elementary_symmetric(std::span<const Integer> v, int k);

/// E_0..E_kmax(v) in one pass; entries beyond v.size() are zero.
std::vector<Integer> elementary_symmetric_all(std::span<const Integer> v, int kmax);

/// P_k(v) = sum of v_i^k; P_0 = s.
Integer power_sum(std::span<const Integer> v, unsigned k);

struct NewtonTriple {
    Integer e1;
    Integer e2;
    Integer e3;
};

/// E_1, E_2, E_3 recovered from P_1, P_2, P_3 only. Requires v.size() >= 3.
NewtonTriple e_from_newton(std::span<const Integer> v);

} // namespace randcolor
