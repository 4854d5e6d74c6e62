#include "randcolor/symfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace randcolor {

IntVector make_int_vector(std::span<const std::int64_t> values)
{
    IntVector out;
    out.reserve(values.size());
    for (auto v : values) {
        if (v < 0) throw std::invalid_argument("IntVector entries must be non-negative");
        out.push_back(to_integer(v));
    }
    return out;
}

Integer falling_factorial(const Integer& a, unsigned b)
{
    if (b == 0) return 1;
    if (a < b) return 0;
    Integer out = 1;
    Integer factor = a;
    for (unsigned j = 0; j < b; ++j) {
        out *= factor;
        --factor;
    }
    return out;
}

std::vector<Integer> elementary_symmetric_all(std::span<const Integer> v, int kmax)
{
    if (kmax < 0) return {};
    std::vector<Integer> e(static_cast<std::size_t>(kmax) + 1, Integer(0));
    e[0] = 1;
    int filled = 0;
    for (const Integer& x : v) {
        filled = std::min(filled + 1, kmax);
        // high-to-low so each value enters every product at most once
        for (int k = filled; k >= 1; --k) e[k] += x * e[k - 1];
    }
    return e;
}

Integer elementary_symmetric(std::span<const Integer> v, int k)
{
    if (k < 0 || static_cast<std::size_t>(k) > v.size()) return 0;
    return elementary_symmetric_all(v, k)[static_cast<std::size_t>(k)];
}

Integer power_sum(std::span<const Integer> v, unsigned k)
{
    if (k == 0) return Integer(static_cast<unsigned long>(v.size()));
    Integer sum = 0;
    Integer term;
    for (const Integer& x : v) {
        mpz_pow_ui(term.get_mpz_t(), x.get_mpz_t(), k);
        sum += term;
    }
    return sum;
}

NewtonTriple e_from_newton(std::span<const Integer> v)
{
    if (v.size() < 3) {
        throw std::invalid_argument("e_from_newton needs at least 3 entries (got " +
                                    std::to_string(v.size()) +
                                    "); use elementary_symmetric for shorter vectors");
    }
    const Integer p1 = power_sum(v, 1);
    const Integer p2 = power_sum(v, 2);
    const Integer p3 = power_sum(v, 3);

    NewtonTriple out;
    out.e1 = p1;
    Integer two_e2 = p1 * p1 - p2;
    Integer six_e3 = p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3;
    mpz_divexact_ui(out.e2.get_mpz_t(), two_e2.get_mpz_t(), 2);
    mpz_divexact_ui(out.e3.get_mpz_t(), six_e3.get_mpz_t(), 6);
    return out;
}

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    auto fail = [&] { throw std::invalid_argument("not a rational number: '" + s + "'"); };
    if (s.empty()) fail();

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(std::string_view(s).substr(0, slash));
        Rational den = parse_rational(std::string_view(s).substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
        Rational q = num / den;
        return q;
    }

    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        try {
            std::size_t used = 0;
            exp10 = std::stol(s.substr(e + 1), &used);
            if (used != s.size() - e - 1) fail();
        } catch (const std::logic_error&) {
            fail();
        }
        s.resize(e);
    }

    bool negative = false;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) negative = s[pos++] == '-';

    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        char ch = s[pos];
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (ch >= '0' && ch <= '9') {
            digits.push_back(ch);
            if (seen_point) ++frac_digits;
        } else {
            fail();
        }
    }
    if (digits.empty()) fail();

    Integer num(digits, 10);
    if (negative) num = -num;
    const long shift = exp10 - frac_digits;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q = shift < 0 ? make_rational(num, scale) : Rational(num * scale);
    return q;
}

} // namespace randcolor
