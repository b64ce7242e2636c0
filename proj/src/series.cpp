#include "hauptmodul/series.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hauptmodul/error.hpp"

namespace hauptmodul
{

TruncatedSeries::TruncatedSeries() : coeffs_(1) {}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs))
{
    coeffs_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::constant(const Rational &c, std::size_t order)
{
    return monomial(0, c, order);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, const Rational &c, std::size_t order)
{
    std::vector<Rational> coeffs(order + 1);
    if (k <= order) {
        coeffs[k] = c;
    }
    return TruncatedSeries(std::move(coeffs), order);
}

bool TruncatedSeries::is_zero() const
{
    return !valuation().has_value();
}

std::optional<std::size_t> TruncatedSeries::valuation() const
{
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (sgn(coeffs_[n]) != 0) {
            return n;
        }
    }
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::with_order(std::size_t order) const
{
    return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(order + 1, coeffs_.size())),
                           order);
}

TruncatedSeries operator+(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    const std::size_t order = std::min(lhs.order(), rhs.order());
    std::vector<Rational> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        out[n] = lhs[n] + rhs[n];
    }
    return TruncatedSeries(std::move(out), order);
}

TruncatedSeries operator-(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    const std::size_t order = std::min(lhs.order(), rhs.order());
    std::vector<Rational> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        out[n] = lhs[n] - rhs[n];
    }
    return TruncatedSeries(std::move(out), order);
}

TruncatedSeries operator-(const TruncatedSeries &s)
{
    std::vector<Rational> out(s.coefficients().begin(), s.coefficients().end());
    for (auto &c : out) {
        c = -c;
    }
    return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries operator*(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    const std::size_t order = std::min(lhs.order(), rhs.order());
    std::vector<Rational> out(order + 1);
    Rational term;
    for (std::size_t i = 0; i <= order; ++i) {
        if (sgn(lhs[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (sgn(rhs[j]) == 0) {
                continue;
            }
            term = lhs[i] * rhs[j];
            out[i + j] += term;
        }
    }
    return TruncatedSeries(std::move(out), order);
}

TruncatedSeries operator*(const Rational &c, const TruncatedSeries &s)
{
    std::vector<Rational> out(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out[n] = c * s[n];
    }
    return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries operator+(const TruncatedSeries &s, const Rational &c)
{
    std::vector<Rational> out(s.coefficients().begin(), s.coefficients().end());
    out[0] += c;
    return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries operator-(const TruncatedSeries &s, const Rational &c)
{
    return s + Rational(-c);
}

TruncatedSeries div(const TruncatedSeries &num, const TruncatedSeries &den)
{
    if (sgn(den[0]) == 0) {
        raise(ErrorCode::zero_constant_term, "series division by a denominator with zero constant term");
    }
    const std::size_t order = std::min(num.order(), den.order());
    const Rational inv0 = 1 / den[0];
    std::vector<Rational> out(order + 1);
    Rational acc;
    for (std::size_t n = 0; n <= order; ++n) {
        acc = num[n];
        for (std::size_t i = 1; i <= n; ++i) {
            if (sgn(den[i]) != 0) {
                acc -= den[i] * out[n - i];
            }
        }
        out[n] = acc * inv0;
    }
    return TruncatedSeries(std::move(out), order);
}

TruncatedSeries operator/(const TruncatedSeries &num, const TruncatedSeries &den)
{
    return div(num, den);
}

TruncatedSeries pow(const TruncatedSeries &s, unsigned k)
{
    TruncatedSeries result = TruncatedSeries::constant(1, s.order());
    TruncatedSeries base = s;
    while (k != 0) {
        if (k & 1u) {
            result = result * base;
        }
        k >>= 1;
        if (k != 0) {
            base = base * base;
        }
    }
    return result;
}

TruncatedSeries exp_series(const TruncatedSeries &u)
{
    if (sgn(u[0]) != 0) {
        raise(ErrorCode::nonzero_constant_term, "exp of a series with nonzero constant term");
    }
    // E' = u' E, i.e. n E_n = sum_{k=1}^{n} k u_k E_{n-k}.
    const std::size_t order = u.order();
    std::vector<Rational> out(order + 1);
    out[0] = 1;
    Rational acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            if (sgn(u[k]) != 0) {
                acc += static_cast<unsigned long>(k) * u[k] * out[n - k];
            }
        }
        out[n] = acc / static_cast<unsigned long>(n);
    }
    return TruncatedSeries(std::move(out), order);
}

TruncatedSeries log_series(const TruncatedSeries &s)
{
    if (s[0] != 1) {
        raise(ErrorCode::constant_term_not_one, "log of a series whose constant term is not 1");
    }
    // theta(s) = s * theta(L): n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}.
    const std::size_t order = s.order();
    std::vector<Rational> out(order + 1);
    Rational acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = static_cast<unsigned long>(n) * s[n];
        for (std::size_t k = 1; k < n; ++k) {
            if (sgn(s[n - k]) != 0) {
                acc -= static_cast<unsigned long>(k) * out[k] * s[n - k];
            }
        }
        out[n] = acc / static_cast<unsigned long>(n);
    }
    return TruncatedSeries(std::move(out), order);
}

TruncatedSeries theta(const TruncatedSeries &s)
{
    std::vector<Rational> out(s.order() + 1);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        out[n] = static_cast<unsigned long>(n) * s[n];
    }
    return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries derivative(const TruncatedSeries &s)
{
    if (s.order() == 0) {
        raise(ErrorCode::invalid_argument, "derivative of a series known only to order 0");
    }
    std::vector<Rational> out(s.order());
    for (std::size_t n = 0; n + 1 <= s.order(); ++n) {
        out[n] = static_cast<unsigned long>(n + 1) * s[n + 1];
    }
    return TruncatedSeries(std::move(out), s.order() - 1);
}

TruncatedSeries substitute_power(const TruncatedSeries &s, std::size_t p)
{
    if (p == 0) {
        raise(ErrorCode::invalid_argument, "substitute_power needs p >= 1");
    }
    std::vector<Rational> out(s.order() + 1);
    for (std::size_t n = 0; n * p <= s.order(); ++n) {
        out[n * p] = s[n];
    }
    return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries scale_argument(const TruncatedSeries &s, const Rational &kappa)
{
    std::vector<Rational> out(s.order() + 1);
    Rational power = 1;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        out[n] = power * s[n];
        power *= kappa;
    }
    return TruncatedSeries(std::move(out), s.order());
}

namespace
{

// f(g) by Horner's rule for g(0) = 0, truncated at min(order f, order g).
TruncatedSeries compose(const TruncatedSeries &f, const TruncatedSeries &g)
{
    const std::size_t order = std::min(f.order(), g.order());
    TruncatedSeries result = TruncatedSeries::constant(f[order], order);
    for (std::size_t n = order; n-- > 0;) {
        result = result * g + f[n];
    }
    return result;
}

} // namespace

TruncatedSeries reversion(const TruncatedSeries &s)
{
    if (sgn(s[0]) != 0) {
        raise(ErrorCode::not_invertible, "reversion needs a series without constant term");
    }
    if (s.order() == 0) {
        return s;
    }
    if (sgn(s[1]) == 0) {
        raise(ErrorCode::not_invertible, "reversion needs a nonzero linear coefficient");
    }
    const std::size_t order = s.order();
    const TruncatedSeries ds = derivative(s);

    // Newton iteration g <- g - (s(g) - q) / s'(g); precision doubles per step.
    TruncatedSeries g = TruncatedSeries::monomial(1, 1 / s[1], 1);
    std::size_t prec = 1;
    while (prec < order) {
        prec = std::min(2 * prec, order);
        const TruncatedSeries guess = g.with_order(prec);
        const TruncatedSeries residual = compose(s.with_order(prec), guess) - TruncatedSeries::monomial(1, 1, prec);
        // The residual vanishes to order > prec/2, so padding s' by one unknown
        // coefficient at q^prec cannot reach the result.
        const TruncatedSeries slope = compose(ds.with_order(prec), guess);
        g = guess - residual / slope;
    }
    return g;
}

LaurentSeries::LaurentSeries() : lowest_(1), order_(0) {}

LaurentSeries::LaurentSeries(long lowest, std::vector<Rational> coeffs, long order)
    : lowest_(lowest), coeffs_(std::move(coeffs)), order_(order)
{
    const long width = order_ - lowest_ + 1;
    coeffs_.resize(static_cast<std::size_t>(std::max(width, 0L)));
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) {
        ++lead;
    }
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        lowest_ = order_ + 1;
    } else if (lead != 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        lowest_ += static_cast<long>(lead);
    }
}

LaurentSeries LaurentSeries::from_power_series(const TruncatedSeries &s)
{
    return LaurentSeries(0, std::vector<Rational>(s.coefficients().begin(), s.coefficients().end()),
                         static_cast<long>(s.order()));
}

Rational LaurentSeries::coefficient(long exponent) const
{
    if (exponent > order_) {
        raise(ErrorCode::invalid_argument,
              "coefficient q^" + std::to_string(exponent) + " beyond truncation order " + std::to_string(order_));
    }
    if (exponent < lowest_) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

TruncatedSeries LaurentSeries::to_power_series() const
{
    if (order_ < 0 || (!is_zero() && lowest_ < 0)) {
        raise(ErrorCode::invalid_argument, "Laurent series has a pole or no nonnegative coefficients");
    }
    std::vector<Rational> out(static_cast<std::size_t>(order_) + 1);
    for (long e = lowest_; e <= order_; ++e) {
        out[static_cast<std::size_t>(e)] = coeffs_[static_cast<std::size_t>(e - lowest_)];
    }
    return TruncatedSeries(std::move(out), static_cast<std::size_t>(order_));
}

LaurentSeries LaurentSeries::with_order(long order) const
{
    if (order > order_) {
        raise(ErrorCode::invalid_argument, "cannot extend a Laurent series beyond its truncation order");
    }
    return LaurentSeries(lowest_, coeffs_, order);
}

namespace
{

template <typename Op>
LaurentSeries combine(const LaurentSeries &lhs, const LaurentSeries &rhs, Op op)
{
    const long order = std::min(lhs.order(), rhs.order());
    const long lowest = std::min(lhs.lowest_exponent(), rhs.lowest_exponent());
    std::vector<Rational> out;
    for (long e = lowest; e <= order; ++e) {
        out.push_back(op(lhs.coefficient(e), rhs.coefficient(e)));
    }
    return LaurentSeries(lowest, std::move(out), order);
}

} // namespace

LaurentSeries operator+(const LaurentSeries &lhs, const LaurentSeries &rhs)
{
    return combine(lhs, rhs, [](const Rational &x, const Rational &y) { return Rational(x + y); });
}

LaurentSeries operator-(const LaurentSeries &lhs, const LaurentSeries &rhs)
{
    return combine(lhs, rhs, [](const Rational &x, const Rational &y) { return Rational(x - y); });
}

LaurentSeries operator*(const LaurentSeries &lhs, const LaurentSeries &rhs)
{
    // A zero series carries lowest = order + 1, which makes this bound exact too.
    const long order = std::min(lhs.order() + rhs.lowest_exponent(), rhs.order() + lhs.lowest_exponent());
    const long lowest = lhs.lowest_exponent() + rhs.lowest_exponent();
    if (lhs.is_zero() || rhs.is_zero() || order < lowest) {
        return LaurentSeries(lowest, {}, order);
    }
    const auto a = lhs.coefficients();
    const auto b = rhs.coefficients();
    const auto width = static_cast<std::size_t>(order - lowest + 1);
    std::vector<Rational> out(width);
    for (std::size_t i = 0; i < width && i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < width && j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return LaurentSeries(lowest, std::move(out), order);
}

LaurentSeries reciprocal(const LaurentSeries &s)
{
    if (s.is_zero()) {
        raise(ErrorCode::zero_constant_term, "reciprocal of a series that vanishes to its truncation order");
    }
    const auto coeffs = s.coefficients();
    const TruncatedSeries unit(std::vector<Rational>(coeffs.begin(), coeffs.end()), coeffs.size() - 1);
    const TruncatedSeries inverse = div(TruncatedSeries::constant(1, unit.order()), unit);
    // q^{-v} / w with w known to order N - v: exponents -v .. N - 2v.
    return LaurentSeries(-s.lowest_exponent(),
                         std::vector<Rational>(inverse.coefficients().begin(), inverse.coefficients().end()),
                         s.order() - 2 * s.lowest_exponent());
}

LaurentSeries reciprocal(const TruncatedSeries &s)
{
    return reciprocal(LaurentSeries::from_power_series(s));
}

LaurentSeries operator/(const LaurentSeries &num, const LaurentSeries &den)
{
    return num * reciprocal(den);
}

LaurentSeries operator-(const LaurentSeries &s, const Rational &c)
{
    if (s.order() < 0) {
        return s;
    }
    return s - LaurentSeries(0, {c}, s.order());
}

LaurentSeries operator*(const Rational &c, const LaurentSeries &s)
{
    std::vector<Rational> coeffs(s.coefficients().begin(), s.coefficients().end());
    for (auto &x : coeffs) {
        x *= c;
    }
    return LaurentSeries(s.lowest_exponent(), std::move(coeffs), s.order());
}

LaurentSeries pow(const LaurentSeries &s, unsigned k)
{
    LaurentSeries result(0, {Rational(1)}, std::max(s.order(), 0L));
    for (unsigned i = 0; i < k; ++i) {
        result = i == 0 ? s : result * s;
    }
    return result;
}

LaurentSeries theta(const LaurentSeries &s)
{
    std::vector<Rational> out(s.coefficients().begin(), s.coefficients().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] *= s.lowest_exponent() + static_cast<long>(i);
    }
    return LaurentSeries(s.lowest_exponent(), std::move(out), s.order());
}

std::optional<long> ValuationProfile::first_negative() const
{
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] && *entries[i] < 0) {
            return first_exponent + static_cast<long>(i);
        }
    }
    return std::nullopt;
}

namespace
{

ValuationProfile profile_of(std::span<const Rational> coeffs, long first_exponent, unsigned long p)
{
    if (!is_prime(p)) {
        raise(ErrorCode::invalid_argument, "valuation profile needs a prime, got " + std::to_string(p));
    }
    ValuationProfile profile;
    profile.prime = p;
    profile.first_exponent = first_exponent;
    profile.entries.reserve(coeffs.size());
    for (const auto &c : coeffs) {
        const Valuation v = valuation(c, p);
        if (v && (!profile.min_valuation || *v < *profile.min_valuation)) {
            profile.min_valuation = v;
        }
        profile.entries.push_back(v);
    }
    return profile;
}

} // namespace

ValuationProfile valuation_profile(const TruncatedSeries &s, unsigned long p)
{
    return profile_of(s.coefficients(), 0, p);
}

ValuationProfile valuation_profile(const LaurentSeries &s, unsigned long p)
{
    return profile_of(s.coefficients(), s.lowest_exponent(), p);
}

} // namespace hauptmodul
