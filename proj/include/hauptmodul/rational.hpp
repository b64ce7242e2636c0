#ifndef HAUPTMODUL_RATIONAL_HPP
#define HAUPTMODUL_RATIONAL_HPP

#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hauptmodul
{

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; constructors from num/den go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

// p-adic valuation; std::nullopt stands for +infinity (the zero element).
using Valuation = std::optional<long>;

Rational make_rational(const Integer &num, const Integer &den);
Rational make_rational(long num, long den = 1);

// "num/den", always with an explicit denominator ("3/1", "-5/12").
std::string to_string(const Rational &x);

// Accepts "num/den" or a bare integer; the result is reduced.
Rational parse_rational(std::string_view text);

Valuation valuation(const Integer &x, unsigned long p);
Valuation valuation(const Rational &x, unsigned long p);

bool is_prime(unsigned long n);

unsigned long gcd(unsigned long a, unsigned long b);

} // namespace hauptmodul

#endif
