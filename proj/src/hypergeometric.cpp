#include "hauptmodul/hypergeometric.hpp"

#include <utility>
#include <vector>

#include "hauptmodul/error.hpp"
#include "hauptmodul/halphen.hpp"

namespace hauptmodul
{

HGParams hg_params(const TriangleType &tri)
{
    const Rational half(1, 2);
    return HGParams{half * (1 - tri.inverse_m1() + tri.inverse_m2()), half * (1 - tri.inverse_m1() - tri.inverse_m2()),
                    tri};
}

namespace
{

void check_nonpole(const Rational &x, std::size_t order)
{
    // a + i = 0 for some i < order would put a pole in G.
    if (x <= 0 && x.get_den() == 1 && -x < static_cast<unsigned long>(order)) {
        raise(ErrorCode::invalid_argument, "hypergeometric parameter " + to_string(x) + " is a nonpositive integer");
    }
}

std::vector<Rational> pochhammer_ratio_terms(const Rational &a, const Rational &b, std::size_t order)
{
    std::vector<Rational> A(order + 1);
    A[0] = 1;
    for (std::size_t n = 0; n < order; ++n) {
        const unsigned long np1 = n + 1;
        A[n + 1] = A[n] * (a + n) * (b + n) / (np1 * np1);
    }
    return A;
}

} // namespace

TruncatedSeries series_f(const Rational &a, const Rational &b, std::size_t order)
{
    return TruncatedSeries(pochhammer_ratio_terms(a, b, order), order);
}

TruncatedSeries series_g(const Rational &a, const Rational &b, std::size_t order)
{
    check_nonpole(a, order);
    check_nonpole(b, order);
    const auto A = pochhammer_ratio_terms(a, b, order);
    std::vector<Rational> B(order + 1);
    Rational harmonic = 0;
    for (std::size_t n = 1; n <= order; ++n) {
        const std::size_t i = n - 1;
        harmonic += 1 / Rational(a + i) + 1 / Rational(b + i) - make_rational(2, static_cast<long>(i + 1));
        B[n] = A[n] * harmonic;
    }
    return TruncatedSeries(std::move(B), order);
}

TruncatedSeries schwarz_d(const Rational &a, const Rational &b, std::size_t order)
{
    return series_g(a, b, order) / series_f(a, b, order);
}

TruncatedSeries mirror_q(const Rational &a, const Rational &b, std::size_t order)
{
    if (order == 0) {
        return TruncatedSeries(0);
    }
    const TruncatedSeries e = exp_series(schwarz_d(a, b, order - 1));
    std::vector<Rational> coeffs(order + 1);
    for (std::size_t n = 0; n < order; ++n) {
        coeffs[n + 1] = e[n];
    }
    return TruncatedSeries(std::move(coeffs), order);
}

TruncatedSeries hypergeometric_operator(const Rational &a, const Rational &b, const TruncatedSeries &s)
{
    // [z^n]: n^2 s_n - (n - 1 + a)(n - 1 + b) s_{n-1}
    std::vector<Rational> out(s.order() + 1);
    for (std::size_t n = 1; n <= s.order(); ++n) {
        const unsigned long nn = n;
        out[n] = nn * nn * s[n] - (a + (n - 1)) * (b + (n - 1)) * s[n - 1];
    }
    out[0] = 0;
    return TruncatedSeries(std::move(out), s.order());
}

TruncatedSeries binomial_series(const Rational &alpha, std::size_t order)
{
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (std::size_t n = 0; n < order; ++n) {
        c[n + 1] = -c[n] * (alpha - n) / static_cast<unsigned long>(n + 1);
    }
    return TruncatedSeries(std::move(c), order);
}

MirrorData mirror_map(const HGParams &params, std::size_t order)
{
    if (order < 2) {
        raise(ErrorCode::invalid_argument, "mirror_map needs order >= 2");
    }
    MirrorData data;
    data.F = series_f(params, order);
    data.G = series_g(params, order);
    data.D = data.G / data.F;
    data.q_of_z = mirror_q(params, order);
    data.z_of_q = reversion(data.q_of_z);

    const auto &tri = params.triangle;
    const Integer m1 = tri.m1();
    const Integer m2 = tri.m2().value_or(1);
    const Rational magnitude(2 * m1 * m1 * m2 * m2);
    if (tri.m2()) {
        data.kappa_literature = -magnitude;
    }

    // 1/J = kappa q + ..., so the Halphen linear coefficient t3_1 - t1_1 picks
    // the sign.
    const HalphenSolution low = solve_halphen(tri, 2);
    const Rational target = low.t3[1] - low.t1[1];
    if (target == magnitude) {
        data.kappa = magnitude;
    } else if (target == -magnitude) {
        data.kappa = -magnitude;
    } else {
        raise(ErrorCode::route_mismatch, "no kappa candidate matches the Halphen order-1 data for " + tri.label() +
                                             " (t3_1 - t1_1 = " + to_string(target) + ")");
    }
    data.J = reciprocal(scale_argument(data.z_of_q, data.kappa));
    return data;
}

namespace
{

std::optional<std::size_t> first_difference(const TruncatedSeries &x, const TruncatedSeries &y)
{
    const std::size_t order = std::min(x.order(), y.order());
    for (std::size_t n = 0; n <= order; ++n) {
        if (x[n] != y[n]) {
            return n;
        }
    }
    return std::nullopt;
}

} // namespace

EulerCheck euler_identity_check(const HGParams &params, std::size_t order)
{
    const Rational a2 = 1 - params.a;
    const Rational b2 = 1 - params.b;
    EulerCheck check;

    const TruncatedSeries lhs = series_f(params.a, params.b, order);
    const TruncatedSeries rhs = binomial_series(1 - params.a - params.b, order) * series_f(a2, b2, order);
    if (auto n = first_difference(lhs, rhs)) {
        return EulerCheck{false, EulerPart::frobenius_f, n};
    }
    if (auto n = first_difference(mirror_q(params.a, params.b, order), mirror_q(a2, b2, order))) {
        return EulerCheck{false, EulerPart::mirror_q, n};
    }
    return check;
}

} // namespace hauptmodul
