#ifndef HAUPTMODUL_HYPERGEOMETRIC_HPP
#define HAUPTMODUL_HYPERGEOMETRIC_HPP

#include <cstddef>
#include <optional>

#include "hauptmodul/rational.hpp"
#include "hauptmodul/series.hpp"
#include "hauptmodul/triangle.hpp"

namespace hauptmodul
{

// a = (1 - 1/m1 + 1/m2)/2, b = (1 - 1/m1 - 1/m2)/2.
struct HGParams {
    Rational a;
    Rational b;
    TriangleType triangle;
};

HGParams hg_params(const TriangleType &tri);

// F(a,b|z) = sum (a)_n (b)_n / n!^2 z^n.
TruncatedSeries series_f(const Rational &a, const Rational &b, std::size_t order);
// G(a,b|z) = sum A_n (sum_{i<n} 1/(a+i) + 1/(b+i) - 2/(1+i)) z^n, so that
// F log z + G is the logarithmic Frobenius solution.
TruncatedSeries series_g(const Rational &a, const Rational &b, std::size_t order);
// Schwarz map D = G / F.
TruncatedSeries schwarz_d(const Rational &a, const Rational &b, std::size_t order);
// Mirror map q(a,b|z) = z exp(D(a,b|z)).
TruncatedSeries mirror_q(const Rational &a, const Rational &b, std::size_t order);

inline TruncatedSeries series_f(const HGParams &p, std::size_t order)
{
    return series_f(p.a, p.b, order);
}
inline TruncatedSeries series_g(const HGParams &p, std::size_t order)
{
    return series_g(p.a, p.b, order);
}
inline TruncatedSeries schwarz_d(const HGParams &p, std::size_t order)
{
    return schwarz_d(p.a, p.b, order);
}
inline TruncatedSeries mirror_q(const HGParams &p, std::size_t order)
{
    return mirror_q(p.a, p.b, order);
}

// theta^2 s - z (theta + a)(theta + b) s.
TruncatedSeries hypergeometric_operator(const Rational &a, const Rational &b, const TruncatedSeries &s);

// (1 - z)^alpha by c_{n+1} = -c_n (alpha - n)/(n + 1).
TruncatedSeries binomial_series(const Rational &alpha, std::size_t order);

struct MirrorData {
    TruncatedSeries F;
    TruncatedSeries G;
    TruncatedSeries D;
    TruncatedSeries q_of_z;
    TruncatedSeries z_of_q;
    // Scaling that makes 1/z(kappa q) agree with the Halphen J; chosen from
    // +/- 2 m1^2 m2^2 (+/- 2 m1^2 for m2 = inf).
    Rational kappa;
    // -2 m1^2 m2^2 as printed in the literature; absent for m2 = inf.
    std::optional<Rational> kappa_literature;
    // 1 / z(kappa q), known to order N - 2.
    LaurentSeries J;
};

// Throws RouteMismatch if neither kappa candidate reproduces the Halphen
// linear coefficient t3_1 - t1_1.
MirrorData mirror_map(const HGParams &params, std::size_t order);

enum class EulerPart { none, frobenius_f, mirror_q };

struct EulerCheck {
    bool holds = true;
    EulerPart failing_part = EulerPart::none;
    std::optional<std::size_t> first_failure;
};

// F(a,b|z) = (1-z)^{1-a-b} F(1-a,1-b|z) and q(a,b|z) = q(1-a,1-b|z).
EulerCheck euler_identity_check(const HGParams &params, std::size_t order);

} // namespace hauptmodul

#endif
