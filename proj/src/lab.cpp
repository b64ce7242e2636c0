#include "hauptmodul/lab.hpp"

#include <algorithm>

#include "hauptmodul/dwork.hpp"
#include "hauptmodul/error.hpp"
#include "hauptmodul/hypergeometric.hpp"

namespace hauptmodul
{

namespace
{

void require_coprime(const TriangleType &tri, unsigned long p)
{
    if (!is_prime(p)) {
        raise(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
    }
    if (gcd(p, tri.modulus()) != 1) {
        raise(ErrorCode::shared_factor,
              std::to_string(p) + " shares a factor with " + std::to_string(tri.modulus()) + " for " + tri.label());
    }
}

std::vector<CongruenceFailure> valuation_failures(const TruncatedSeries &s, unsigned long p, long required)
{
    std::vector<CongruenceFailure> failures;
    for (std::size_t n = 0; n <= s.order(); ++n) {
        const Valuation v = valuation(s[n], p);
        if (v && *v < required) {
            failures.push_back({n, v, required});
        }
    }
    return failures;
}

} // namespace

const char *evidence_name(Evidence e) noexcept
{
    return e == Evidence::integral_evidence ? "integralEvidence" : "nonIntegralEvidence";
}

EmpiricalVerdict classify_series(const TriangleType &tri, unsigned long p, const TruncatedSeries &s,
                                 std::string subject)
{
    const auto lead = s.valuation();
    const TruncatedSeries normalized = lead ? Rational(1 / s[*lead]) * s : s;
    EmpiricalVerdict out{tri,
                         p,
                         s.order(),
                         std::move(subject),
                         valuation_profile(normalized, p),
                         valuation_profile(s, p).min_valuation,
                         Evidence::integral_evidence,
                         std::nullopt};
    out.first_negative_index = out.profile.first_negative();
    if (out.first_negative_index) {
        out.classification = Evidence::non_integral_evidence;
    }
    return out;
}

EmpiricalVerdict empirical_integrality(const TriangleType &tri, unsigned long p, std::size_t order)
{
    require_coprime(tri, p);
    return classify_series(tri, p, mirror_q(hg_params(tri), order), "qmap");
}

CongruenceReport dwork_congruence_check(const TriangleType &tri, unsigned long p, std::size_t order)
{
    require_coprime(tri, p);
    const HGParams params = hg_params(tri);
    const Rational da = dwork_map(params.a, p).image;
    const Rational db = dwork_map(params.b, p).image;
    const TruncatedSeries lhs = substitute_power(schwarz_d(da, db, order), p);
    const TruncatedSeries rhs = Rational(p) * schwarz_d(params, order);
    return CongruenceReport{"D(d(a),d(b)|z^p) = p D(a,b|z) mod p", p, order, valuation_failures(lhs - rhs, p, 1)};
}

CongruenceReport schwarz_congruence_check(const TriangleType &tri, unsigned long p, std::size_t order)
{
    require_coprime(tri, p);
    const HGParams params = hg_params(tri);
    const Rational da = dwork_map(params.a, p).image;
    const Rational db = dwork_map(params.b, p).image;
    const TruncatedSeries diff = schwarz_d(da, db, order) - schwarz_d(params, order);
    return CongruenceReport{"D(d(a),d(b)|z) = D(a,b|z) mod p", p, order, valuation_failures(diff, p, 1)};
}

DieudonneReport dieudonne_check(const TruncatedSeries &u, unsigned long p, std::size_t order)
{
    if (!is_prime(p)) {
        raise(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
    }
    if (sgn(u[0]) != 0) {
        raise(ErrorCode::nonzero_constant_term, "dieudonne_check needs u(0) = 0");
    }
    if (u.order() < order) {
        raise(ErrorCode::invalid_argument, "u is known only to order " + std::to_string(u.order()));
    }
    const TruncatedSeries v = u.with_order(order);
    const TruncatedSeries lhs = exp_series(v);
    const TruncatedSeries rhs = exp_series(substitute_power(v, p) - Rational(p) * v) - Rational(1);
    return DieudonneReport{
        CongruenceReport{"exp(u) in 1 + z Z_p[[z]]", p, order, valuation_failures(lhs, p, 0)},
        CongruenceReport{"exp(u(z^p) - p u(z)) in 1 + p Z_p[[z]]", p, order, valuation_failures(rhs, p, 1)},
    };
}

CongruenceReport cross_route_consistency(const TriangleType &tri, std::size_t order)
{
    // Both J's lose two orders to the reciprocal of a series with a simple zero.
    const LaurentSeries halphen = hauptmodul_from_halphen(solve_halphen(tri, order + 2));
    const LaurentSeries mirror = mirror_map(hg_params(tri), order + 2).J;
    const long top = static_cast<long>(order);
    if (halphen.order() < top || mirror.order() < top) {
        raise(ErrorCode::route_mismatch, "J routes did not reach order " + std::to_string(order));
    }
    for (long e = std::min(halphen.lowest_exponent(), mirror.lowest_exponent()); e <= top; ++e) {
        if (halphen.coefficient(e) != mirror.coefficient(e)) {
            raise(ErrorCode::route_mismatch, "Halphen and hypergeometric J differ at q^" + std::to_string(e) +
                                                 " for " + tri.label() + ": " + to_string(halphen.coefficient(e)) +
                                                 " vs " + to_string(mirror.coefficient(e)));
        }
    }
    return CongruenceReport{"Halphen J = 1/z(kappa q) for " + tri.label(), 0, order, {}};
}

Rational derivative_sign(const HalphenSolution &sol, const LaurentSeries &J)
{
    // J has a simple pole, so theta(J)/J starts at -1 while t1 - t2 starts at
    // t1(0) - t2(0) = 1. The sign of the derivative is fixed by that constant.
    const Rational lead = (theta(J) / J).coefficient(0);
    const Rational target = sol.t1[0] - sol.t2[0];
    if (lead == target) {
        return Rational(1);
    }
    if (lead == -target) {
        return Rational(-1);
    }
    raise(ErrorCode::formula_mismatch, "theta(J)/J has constant term " + to_string(lead) + " for " +
                                           sol.triangle.label());
}

void check_generator_formulas(const HalphenSolution &sol, const std::vector<GeneratorLabel> &labels)
{
    const LaurentSeries J = hauptmodul_from_halphen(sol);
    const LaurentSeries Jdot = derivative_sign(sol, J) * theta(J);
    const LaurentSeries Jm1 = J - Rational(1);
    const LaurentSeries t12 = LaurentSeries::from_power_series(sol.t1 - sol.t2);
    const LaurentSeries t32 = LaurentSeries::from_power_series(sol.t3 - sol.t2);
    if (t12.with_order((Jdot / J).order()) != Jdot / J || t32.with_order((Jdot / Jm1).order()) != Jdot / Jm1) {
        raise(ErrorCode::formula_mismatch, "t1 - t2, t3 - t2 are not logarithmic derivatives of J for " +
                                               sol.triangle.label());
    }
    for (const auto &label : labels) {
        const LaurentSeries formula = label.family == 1 ? (Jm1 / J) * pow(Jdot / Jm1, label.k)
                                                        : pow(Jdot / J, label.k) * (J / Jm1);
        const LaurentSeries product =
            LaurentSeries::from_power_series(generator_series(label, sol)).with_order(formula.order());
        if (formula != product) {
            raise(ErrorCode::formula_mismatch,
                  label.name() + ": t-product and J-derivative formula differ for " + sol.triangle.label());
        }
    }
}

void check_e4_e6_identity(const HalphenSolution &sol)
{
    const auto e4 = LaurentSeries::from_power_series(eisenstein_two(2, sol));
    const auto e6 = LaurentSeries::from_power_series(eisenstein_two(3, sol));
    const LaurentSeries e4cubed = pow(e4, 3);
    const LaurentSeries ratio = e4cubed / (e4cubed - e6 * e6);
    const LaurentSeries J = hauptmodul_from_halphen(sol);
    const long top = std::min(ratio.order(), J.order());
    if (ratio.with_order(top) != J.with_order(top)) {
        raise(ErrorCode::formula_mismatch, "E4^3/(E4^3 - E6^2) differs from J for " + sol.triangle.label());
    }
}

std::vector<GeneratorReport> generator_integrality(const TriangleType &tri, unsigned long p, std::size_t order)
{
    require_coprime(tri, p);
    const HalphenSolution sol = solve_halphen(tri, order + 1);
    const auto labels = algebra_generators(tri);
    check_generator_formulas(sol, labels);
    check_e4_e6_identity(sol);

    std::vector<GeneratorReport> out;
    for (const auto &label : labels) {
        out.push_back({label, true, classify_series(tri, p, generator_series(label, sol).with_order(order), label.name())});
    }
    return out;
}

} // namespace hauptmodul
