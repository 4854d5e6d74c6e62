#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace randcolor {

/// Arbitrary-precision integer and rational used by every exact formula.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer to_integer(std::int64_t v)
{
    Integer out;
    mpz_set_si(out.get_mpz_t(), static_cast<long>(v));
    return out;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Correctly rounded when numerator and denominator are exact doubles;
/// mpq's get_d truncates.
inline double to_double(const Rational& q)
{
    if (mpz_sizeinbase(q.get_num_mpz_t(), 2) <= 53 && mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 53) {
        return q.get_num().get_d() / q.get_den().get_d();
    }
    return q.get_d();
}
inline double to_double(const Integer& z) { return z.get_d(); }
inline double to_double(double x) { return x; }

/// Parses "3", "-2/7", "0.125" or "1e-3" into an exact rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Conversions used by formula templates that run on either an exact
/// rational or a double.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational from(const Integer& z) { return Rational(z); }
    static Rational from(std::int64_t v) { return Rational(to_integer(v)); }
    static Rational from(const Rational& q) { return q; }
};

template <>
struct ScalarTraits<double> {
    static double from(const Integer& z) { return z.get_d(); }
    static double from(std::int64_t v) { return static_cast<double>(v); }
    static double from(const Rational& q) { return q.get_d(); }
};

template <class Scalar>
Scalar scalar_from(const auto& v)
{
    return ScalarTraits<Scalar>::from(v);
}

} // namespace randcolor
