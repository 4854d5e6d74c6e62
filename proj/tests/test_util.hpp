#pragma once

#include "randcolor/exact.hpp"

// mpq_class(a, b) is not canonicalized; comparisons need the reduced form.
inline randcolor::Rational Q(long num, long den)
{
    return randcolor::make_rational(randcolor::to_integer(num), randcolor::to_integer(den));
}
