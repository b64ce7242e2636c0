#ifndef HAUPTMODUL_SERIES_HPP
#define HAUPTMODUL_SERIES_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hauptmodul/rational.hpp"

namespace hauptmodul
{

// c_0 + c_1 q + ... + c_N q^N + O(q^{N+1}). The truncation order N is part of
// the value: two series with equal coefficients but different N compare unequal.
class TruncatedSeries
{
public:
    // The zero series to order 0.
    TruncatedSeries();
    // The zero series to the given order.
    explicit TruncatedSeries(std::size_t order);
    // Missing coefficients are zero; extra ones are dropped.
    TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

    static TruncatedSeries constant(const Rational &c, std::size_t order);
    // c q^k, or the zero series when k > order.
    static TruncatedSeries monomial(std::size_t k, const Rational &c, std::size_t order);

    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1;
    }
    const Rational &operator[](std::size_t n) const
    {
        return coeffs_.at(n);
    }
    std::span<const Rational> coefficients() const noexcept
    {
        return coeffs_;
    }

    bool is_zero() const;
    // Index of the first nonzero coefficient, nullopt for the zero series.
    std::optional<std::size_t> valuation() const;
    // Drops coefficients above the new order, or pads with zeros below it.
    // Padding claims precision the caller must actually have.
    TruncatedSeries with_order(std::size_t order) const;

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
    std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries &lhs, const TruncatedSeries &rhs);
TruncatedSeries operator-(const TruncatedSeries &lhs, const TruncatedSeries &rhs);
TruncatedSeries operator-(const TruncatedSeries &s);
// Cauchy product truncated at min(N1, N2).
TruncatedSeries operator*(const TruncatedSeries &lhs, const TruncatedSeries &rhs);
TruncatedSeries operator*(const Rational &c, const TruncatedSeries &s);
TruncatedSeries operator+(const TruncatedSeries &s, const Rational &c);
TruncatedSeries operator-(const TruncatedSeries &s, const Rational &c);

// num / den; throws ZeroConstantTerm when den(0) == 0.
TruncatedSeries div(const TruncatedSeries &num, const TruncatedSeries &den);
TruncatedSeries operator/(const TruncatedSeries &num, const TruncatedSeries &den);

TruncatedSeries pow(const TruncatedSeries &s, unsigned k);

TruncatedSeries exp_series(const TruncatedSeries &u);
TruncatedSeries log_series(const TruncatedSeries &s);

// theta = q d/dq: c_n -> n c_n, order preserved.
TruncatedSeries theta(const TruncatedSeries &s);
// Ordinary d/dq; the result has order N - 1.
TruncatedSeries derivative(const TruncatedSeries &s);

// q -> q^p, keeping the input order.
TruncatedSeries substitute_power(const TruncatedSeries &s, std::size_t p);
// q -> kappa q.
TruncatedSeries scale_argument(const TruncatedSeries &s, const Rational &kappa);

// Compositional inverse g with s(g(q)) = q + O(q^{N+1}). Requires s(0) = 0 and
// s'(0) != 0, otherwise NotInvertible.
TruncatedSeries reversion(const TruncatedSeries &s);

// sum_k c_k q^k with finitely many negative exponents, known up to q^order.
// The coefficient at lowest_exponent() is nonzero unless the series vanishes to
// its order, in which case lowest_exponent() == order() + 1 and there are no
// stored coefficients.
class LaurentSeries
{
public:
    LaurentSeries();
    LaurentSeries(long lowest, std::vector<Rational> coeffs, long order);

    static LaurentSeries from_power_series(const TruncatedSeries &s);

    long lowest_exponent() const noexcept
    {
        return lowest_;
    }
    long order() const noexcept
    {
        return order_;
    }
    // Coefficients for exponents lowest_exponent() .. order().
    std::span<const Rational> coefficients() const noexcept
    {
        return coeffs_;
    }
    // Zero below lowest_exponent(); throws InvalidArgument above order().
    Rational coefficient(long exponent) const;

    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    long pole_order() const noexcept
    {
        return lowest_ < 0 ? -lowest_ : 0;
    }

    // Requires lowest_exponent() >= 0 and order() >= 0.
    TruncatedSeries to_power_series() const;
    LaurentSeries with_order(long order) const;

    friend bool operator==(const LaurentSeries &, const LaurentSeries &) = default;

private:
    long lowest_;
    std::vector<Rational> coeffs_;
    long order_;
};

LaurentSeries operator+(const LaurentSeries &lhs, const LaurentSeries &rhs);
LaurentSeries operator-(const LaurentSeries &lhs, const LaurentSeries &rhs);
LaurentSeries operator*(const LaurentSeries &lhs, const LaurentSeries &rhs);
LaurentSeries operator/(const LaurentSeries &num, const LaurentSeries &den);
LaurentSeries operator-(const LaurentSeries &s, const Rational &c);
LaurentSeries operator*(const Rational &c, const LaurentSeries &s);
LaurentSeries pow(const LaurentSeries &s, unsigned k);
LaurentSeries theta(const LaurentSeries &s);

// 1/s for a series that does not vanish to its order (else ZeroConstantTerm).
LaurentSeries reciprocal(const LaurentSeries &s);
LaurentSeries reciprocal(const TruncatedSeries &s);

struct ValuationProfile {
    unsigned long prime = 0;
    // Exponent of entries[0]: 0 for power series, the lowest exponent for
    // Laurent series.
    long first_exponent = 0;
    std::vector<Valuation> entries;
    // Minimum over finite entries; nullopt when every entry is infinite.
    Valuation min_valuation;

    // Exponent of the first negative entry.
    std::optional<long> first_negative() const;
};

ValuationProfile valuation_profile(const TruncatedSeries &s, unsigned long p);
ValuationProfile valuation_profile(const LaurentSeries &s, unsigned long p);

} // namespace hauptmodul

#endif
