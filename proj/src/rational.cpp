#include "hauptmodul/rational.hpp"

#include <cctype>

#include "hauptmodul/error.hpp"

namespace hauptmodul
{

const char *error_code_name(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::invalid_argument:
            return "InvalidArgument";
        case ErrorCode::invalid_triangle:
            return "InvalidTriangle";
        case ErrorCode::parse_error:
            return "ParseError";
        case ErrorCode::zero_constant_term:
            return "ZeroConstantTerm";
        case ErrorCode::nonzero_constant_term:
            return "NonzeroConstantTerm";
        case ErrorCode::constant_term_not_one:
            return "ConstantTermNotOne";
        case ErrorCode::not_invertible:
            return "NotInvertible";
        case ErrorCode::singular_system:
            return "SingularSystem";
        case ErrorCode::inconsistent_order_one:
            return "InconsistentOrderOne";
        case ErrorCode::degenerate_denominator:
            return "DegenerateDenominator";
        case ErrorCode::prime_divides_denominator:
            return "PrimeDividesDenominator";
        case ErrorCode::shared_factor:
            return "SharedFactor";
        case ErrorCode::route_mismatch:
            return "RouteMismatch";
        case ErrorCode::formula_mismatch:
            return "FormulaMismatch";
        case ErrorCode::verification_failure:
            return "VerificationFailure";
    }
    return "Unknown";
}

Rational make_rational(const Integer &num, const Integer &den)
{
    if (den == 0) {
        raise(ErrorCode::invalid_argument, "rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(long num, long den)
{
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational &x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace
{

Integer parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        i = 1;
    }
    if (i == text.size()) {
        raise(ErrorCode::parse_error, "malformed rational: '" + std::string(whole) + "'");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            raise(ErrorCode::parse_error, "malformed rational: '" + std::string(whole) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const Integer num = parse_integer(text.substr(0, slash), text);
    const Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        raise(ErrorCode::parse_error, "zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

Valuation valuation(const Integer &x, unsigned long p)
{
    if (p < 2) {
        raise(ErrorCode::invalid_argument, "valuation needs a prime p >= 2");
    }
    if (x == 0) {
        return std::nullopt;
    }
    Integer rest;
    const Integer prime(p);
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

Valuation valuation(const Rational &x, unsigned long p)
{
    if (x == 0) {
        return std::nullopt;
    }
    return *valuation(x.get_num(), p) - *valuation(x.get_den(), p);
}

bool is_prime(unsigned long n)
{
    if (n < 2) {
        return false;
    }
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

unsigned long gcd(unsigned long a, unsigned long b)
{
    while (b != 0) {
        const unsigned long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace hauptmodul
