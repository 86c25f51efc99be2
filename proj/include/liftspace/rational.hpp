#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "liftspace/errors.hpp"

namespace liftspace {

// Exact arbitrary-precision scalars, GMP-backed. mpq keeps values in
// canonical form: denominator positive, numerator/denominator coprime, zero
// as 0/1. Construct from Int pairs (not built-in ints) whenever the
// denominator can be negative.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Int numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denominator_of(r) == 1; }

// Bit length of the larger of |numerator| and denominator; 0 for zero.
// Used by lifting budgets and the scale probe.
inline std::size_t entry_bits(const Rational& r) {
    using boost::multiprecision::msb;
    Int n = boost::multiprecision::abs(numerator_of(r));
    if (n == 0) return 0;
    const Int d = denominator_of(r);
    if (n < d) n = d;
    return static_cast<std::size_t>(msb(n)) + 1;
}

// Decimal digit count of the integer part magnitude (digits of |num| for
// integers; max of num/den digits otherwise).
inline std::size_t entry_digits(const Rational& r) {
    Int n = boost::multiprecision::abs(numerator_of(r));
    Int d = denominator_of(r);
    if (n < d) n = d;
    return n.str().size();
}

// "p/q" with the denominator always spelled out, e.g. "1/1", "-3/4".
inline std::string format_ratio(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

// Plain rendering: integers without a denominator ("-3442"), else "p/q".
inline std::string format_rational(const Rational& r) {
    if (is_integer(r)) return numerator_of(r).str();
    return format_ratio(r);
}

// Accepts "123", "-7", "3/4", "-3/4". Throws ParseError on anything else.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw ParseError("invalid rational literal '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Int(std::string(text)));
        }
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) fail();
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        fail();
    }
    return Rational();  // unreachable
}

}  // namespace liftspace
