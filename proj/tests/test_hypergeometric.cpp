#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hauptmodul/hypergeometric.hpp"

using namespace hauptmodul;

namespace
{

Rational pochhammer(const Rational &x, unsigned n)
{
    Rational out(1);
    for (unsigned i = 0; i < n; ++i) {
        out *= x + i;
    }
    return out;
}

Rational factorial(unsigned n)
{
    Rational out(1);
    for (unsigned i = 2; i <= n; ++i) {
        out *= i;
    }
    return out;
}

// A_n and B_n straight from the defining sums.
Rational coeff_a(const Rational &a, const Rational &b, unsigned n)
{
    return pochhammer(a, n) * pochhammer(b, n) / (factorial(n) * factorial(n));
}

Rational coeff_b(const Rational &a, const Rational &b, unsigned n)
{
    Rational h(0);
    for (unsigned i = 0; i < n; ++i) {
        h += 1 / (a + i) + 1 / (b + i) - make_rational(2, i + 1);
    }
    return coeff_a(a, b, n) * h;
}

// Generalized binomial coefficients of (1 - z)^alpha from C(alpha, n) (-1)^n.
Rational binom_oracle(const Rational &alpha, unsigned n)
{
    Rational c(1);
    for (unsigned i = 0; i < n; ++i) {
        c *= alpha - i;
    }
    return (n % 2 ? -1 : 1) * c / factorial(n);
}

TruncatedSeries compose(const TruncatedSeries &s, const TruncatedSeries &g)
{
    const std::size_t n = std::min(s.order(), g.order());
    TruncatedSeries acc(n);
    TruncatedSeries power = TruncatedSeries::constant(1, n);
    for (std::size_t k = 0; k <= n; ++k) {
        acc = acc + s[k] * power;
        power = power * g;
    }
    return acc;
}

const TriangleType t23(2, 3);

std::vector<TriangleType> sample_types()
{
    return {t23,
            TriangleType(2, 5),
            TriangleType(3, 3),
            TriangleType(3, 4),
            TriangleType(3, 7),
            TriangleType(2, std::nullopt),
            TriangleType(4, std::nullopt)};
}

} // namespace

TEST_CASE("parameters agree with the Halphen ones")
{
    const auto p = hg_params(t23);
    CHECK(p.a == make_rational(5, 12));
    CHECK(p.b == make_rational(1, 12));
    for (const auto &tri : sample_types()) {
        const auto q = hg_params(tri);
        CHECK(q.b > 0);
        CHECK(q.a < 1);
        CHECK((tri.m2_infinite() ? q.a == q.b : q.b < q.a));
    }
}

TEST_CASE("Frobenius basis coefficients")
{
    const auto p = hg_params(t23);
    const auto F = series_f(p, 12);
    const auto G = series_g(p, 12);
    CHECK(F[0] == 1);
    CHECK(F[1] == make_rational(5, 144));
    CHECK(F[2] == make_rational(5, 12) * make_rational(17, 12) * make_rational(1, 12) * make_rational(13, 12) / 4);
    CHECK(G[0] == 0);
    CHECK(G[1] == make_rational(31, 72));
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(F[n] == coeff_a(p.a, p.b, n));
        CHECK(G[n] == coeff_b(p.a, p.b, n));
    }
}

TEST_CASE("differential equation")
{
    for (const auto &tri : sample_types()) {
        CAPTURE(tri.label());
        const auto p = hg_params(tri);
        const std::size_t N = 25;
        const auto F = series_f(p, N);
        const auto G = series_g(p, N);
        // Coefficientwise: n^2 c_n - (n-1+a)(n-1+b) c_{n-1}.
        const auto apply = [&](const TruncatedSeries &s, std::size_t n) -> Rational {
            return Rational(n * n) * s[n] - (n - 1 + p.a) * (n - 1 + p.b) * s[n - 1];
        };
        for (std::size_t n = 1; n <= N; ++n) {
            CHECK(apply(F, n) == 0);
            // L(F log z + G) = 0 means L(G) = -2 theta F + z (2 theta + a + b) F.
            CHECK(apply(G, n) == -2 * Rational(n) * F[n] + (2 * Rational(n - 1) + p.a + p.b) * F[n - 1]);
        }
        CHECK(hypergeometric_operator(p.a, p.b, F).is_zero());
    }
}

TEST_CASE("Schwarz map closed forms")
{
    for (const auto &tri : sample_types()) {
        CAPTURE(tri.label());
        const auto p = hg_params(tri);
        const Rational sigma = p.a + p.b;
        const Rational tau = p.a * p.b;
        const auto D = schwarz_d(p, 6);
        CHECK(D[0] == 0);
        CHECK(D[1] == sigma - 2 * tau);
        CHECK(4 * D[2] == sigma * sigma - 5 * sigma * tau + 5 * tau * tau + sigma - tau);
        // Direct division oracle at order 2.
        const Rational b1 = coeff_b(p.a, p.b, 1);
        const Rational b2 = coeff_b(p.a, p.b, 2);
        const Rational a1 = coeff_a(p.a, p.b, 1);
        CHECK(D[2] == b2 - a1 * b1);
    }
    CHECK(schwarz_d(hg_params(t23), 3)[1] == make_rational(31, 72));
}

TEST_CASE("mirror map and its inverse")
{
    for (const auto &tri : sample_types()) {
        CAPTURE(tri.label());
        const auto p = hg_params(tri);
        const Rational c1 = p.a + p.b - 2 * p.a * p.b;
        const auto m = mirror_map(p, 20);
        CHECK(m.q_of_z[0] == 0);
        CHECK(m.q_of_z[1] == 1);
        CHECK(m.q_of_z[2] == c1);
        CHECK(m.z_of_q[2] == -c1);
        CHECK(compose(m.q_of_z, m.z_of_q) == TruncatedSeries::monomial(1, 1, 20));
        CHECK(m.J.lowest_exponent() == -1);
        CHECK(m.q_of_z == mirror_q(p, 20));
    }
}

TEST_CASE("kappa calibration")
{
    const auto m = mirror_map(hg_params(t23), 5);
    CHECK(m.kappa == 72);
    CHECK(m.kappa_literature == -72);
    const auto inv = reciprocal(m.J);
    CHECK(inv.coefficient(1) == 72);
    CHECK(inv.coefficient(2) == -2232);
    CHECK(inv.coefficient(3) == make_rational(89163, 2));

    const auto cusp = mirror_map(hg_params(TriangleType(2, std::nullopt)), 5);
    CHECK(cusp.kappa == 8);
    CHECK_FALSE(cusp.kappa_literature.has_value());
    CHECK(mirror_map(hg_params(TriangleType(3, 3)), 5).kappa == 162);
}

TEST_CASE("binomial series")
{
    const Rational half = make_rational(1, 2);
    const auto r = binomial_series(half, 15);
    CHECK(r * r == TruncatedSeries({Rational(1), Rational(-1)}, 15));
    const Rational third = make_rational(1, 3);
    const auto c = binomial_series(third, 15);
    for (unsigned n = 0; n <= 15; ++n) {
        CHECK(c[n] == binom_oracle(third, n));
    }
}

TEST_CASE("Euler identity")
{
    for (const auto &tri : {t23, TriangleType(3, 7), TriangleType(2, std::nullopt)}) {
        CAPTURE(tri.label());
        const auto p = hg_params(tri);
        const std::size_t N = 50;
        CHECK(euler_identity_check(p, N).holds);
        // Independent right-hand side.
        std::vector<Rational> w(N + 1);
        std::vector<Rational> f(N + 1);
        for (unsigned n = 0; n <= N; ++n) {
            w[n] = binom_oracle(1 - p.a - p.b, n);
            f[n] = coeff_a(1 - p.a, 1 - p.b, n);
        }
        CHECK(series_f(p, N) == TruncatedSeries(w, N) * TruncatedSeries(f, N));
    }
}

TEST_CASE("denominators avoid large primes")
{
    const auto p = hg_params(TriangleType(2, 5));
    const std::size_t N = 30;
    const auto F = series_f(p, N);
    const auto G = series_g(p, N);
    for (unsigned long prime : {31ul, 37ul, 41ul, 97ul}) {
        for (std::size_t n = 0; n <= N; ++n) {
            CHECK(valuation(F[n], prime).value_or(0) >= 0);
            CHECK(valuation(G[n], prime).value_or(0) >= 0);
        }
    }
}
