#include "hauptmodul/dwork.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hauptmodul/error.hpp"

namespace hauptmodul
{

namespace
{

void require_prime(unsigned long p)
{
    if (!is_prime(p)) {
        raise(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
    }
}

long mod(long x, long m)
{
    const long r = x % m;
    return r < 0 ? r + m : r;
}

} // namespace

DworkImage dwork_map(const Rational &x, unsigned long p)
{
    require_prime(p);
    if (sgn(x) < 0) {
        raise(ErrorCode::invalid_argument, "dwork_map expects x >= 0, got " + to_string(x));
    }
    const Integer &x1 = x.get_num();
    const Integer &x2 = x.get_den();
    if (x2 % p == 0) {
        raise(ErrorCode::prime_divides_denominator,
              std::to_string(p) + " divides the denominator of " + to_string(x));
    }
    Integer y = 0;
    if (x2 != 1) {
        Integer inv;
        const Integer prime(p);
        mpz_invert(inv.get_mpz_t(), prime.get_mpz_t(), x2.get_mpz_t());
        y = (inv * x1) % x2;
    }
    Integer k = (Integer(p) * y - x1) / x2;
    while (k < 0) {
        y += x2;
        k += p;
    }
    if (k >= p || (Integer(p) * y - x1) != k * x2) {
        throw std::logic_error("dwork_map digit identity violated for " + to_string(x));
    }
    return DworkImage{x, p, make_rational(y, x2), k.get_ui()};
}

const char *alternative_name(DworkAlternative alt) noexcept
{
    switch (alt) {
        case DworkAlternative::same:
            return "same";
        case DworkAlternative::complementary:
            return "complementary";
        case DworkAlternative::none:
            break;
    }
    return "none";
}

DworkSetCondition dwork_set_condition(const HGParams &params, unsigned long p)
{
    const Rational da = dwork_map(params.a, p).image;
    const Rational db = dwork_map(params.b, p).image;
    auto same_set = [](const Rational &x1, const Rational &y1, const Rational &x2, const Rational &y2) {
        return (x1 == x2 && y1 == y2) || (x1 == y2 && y1 == x2);
    };
    if (same_set(da, db, params.a, params.b)) {
        return {true, DworkAlternative::same, da, db};
    }
    if (same_set(da, db, 1 - params.a, 1 - params.b)) {
        return {true, DworkAlternative::complementary, da, db};
    }
    return {false, DworkAlternative::none, da, db};
}

const char *verdict_name(Verdict v) noexcept
{
    switch (v) {
        case Verdict::integral:
            return "integral";
        case Verdict::non_integral:
            return "nonIntegral";
        case Verdict::below_theorem_range:
            return "belowTheoremRange";
    }
    return "unknown";
}

const char *branch_name(WitnessBranch b) noexcept
{
    return b == WitnessBranch::plain ? "plain" : "shifted";
}

std::optional<CongruenceWitness> congruence_witness(const TriangleType &tri, unsigned long residue)
{
    const long m1 = tri.m1();
    const long r = static_cast<long>(residue % tri.modulus());
    if (!tri.m2()) {
        for (int eps : {1, -1}) {
            if (mod(r, 2 * m1) == mod(eps, 2 * m1)) {
                return CongruenceWitness{eps, std::nullopt, WitnessBranch::plain};
            }
        }
        return std::nullopt;
    }
    const long m2 = *tri.m2();
    for (WitnessBranch branch : {WitnessBranch::plain, WitnessBranch::shifted}) {
        const long shift1 = branch == WitnessBranch::plain ? 0 : m1;
        const long shift2 = branch == WitnessBranch::plain ? 0 : m2;
        for (int eps : {1, -1}) {
            for (int eps2 : {1, -1}) {
                if (mod(r, 2 * m1) == mod(shift1 + eps, 2 * m1) &&
                    mod(r, 2 * m2) == mod(shift2 + eps2 * eps, 2 * m2)) {
                    return CongruenceWitness{eps, eps2, branch};
                }
            }
        }
    }
    return std::nullopt;
}

IntegralityVerdict theorem_classifier(const TriangleType &tri, unsigned long p)
{
    require_prime(p);
    if (gcd(p, tri.modulus()) != 1) {
        raise(ErrorCode::shared_factor,
              std::to_string(p) + " shares a factor with " + std::to_string(tri.modulus()) + " for " + tri.label());
    }
    IntegralityVerdict out{tri, p, Verdict::non_integral, false, std::nullopt, std::nullopt};
    const auto witness = congruence_witness(tri, p);
    out.congruence_holds = witness.has_value();
    if (p <= tri.modulus()) {
        out.verdict = Verdict::below_theorem_range;
        out.conjectural_witness = witness;
    } else if (witness) {
        out.verdict = Verdict::integral;
        out.witness = witness;
    }
    return out;
}

bool hecke_classifier(unsigned n, unsigned long p)
{
    if (n < 3) {
        raise(ErrorCode::invalid_argument, "Hecke group needs n >= 3");
    }
    require_prime(p);
    if (p <= 3 || gcd(p, 2ul * n) != 1) {
        raise(ErrorCode::shared_factor, "Hecke classifier needs p > 3 coprime to 2n");
    }
    const unsigned long r = p % n;
    const bool integral = r == 1 || r == n - 1;
    if (p > 4ul * n) {
        const auto verdict = theorem_classifier(TriangleType(2, n), p);
        if ((verdict.verdict == Verdict::integral) != integral) {
            throw std::logic_error("Hecke criterion disagrees with the general classifier at n = " + std::to_string(n) +
                                   ", p = " + std::to_string(p));
        }
    }
    return integral;
}

bool almost_integral(const TriangleType &tri)
{
    const unsigned long modulus = tri.modulus();
    for (unsigned long r = 1; r < modulus; ++r) {
        if (gcd(r, modulus) == 1 && !congruence_witness(tri, r)) {
            return false;
        }
    }
    return true;
}

TakeuchiScan takeuchi_scan(unsigned bound)
{
    if (bound < 6) {
        raise(ErrorCode::invalid_argument, "takeuchi_scan needs bound >= 6");
    }
    TakeuchiScan scan{bound, {}, {}};
    for (unsigned m1 = 2; m1 <= bound; ++m1) {
        for (unsigned m2 = m1; m2 <= bound; ++m2) {
            if (m1 + m2 >= m1 * m2) {
                continue;
            }
            const TriangleType tri(m1, m2);
            if (almost_integral(tri)) {
                scan.types.push_back(tri);
            }
        }
        const TriangleType cusp(m1, std::nullopt);
        if (almost_integral(cusp)) {
            scan.types.push_back(cusp);
        }
    }
    std::sort(scan.types.begin(), scan.types.end());

    for (unsigned m = 2; m <= bound; ++m) {
        const long mm = m;
        for (unsigned long r = 1; r < 2ul * m; ++r) {
            const long rr = static_cast<long>(r);
            if (gcd(r, 2ul * m) != 1) {
                continue;
            }
            const bool allowed = rr == mod(1, 2 * mm) || rr == mod(-1, 2 * mm) || rr == mod(mm + 1, 2 * mm) ||
                                 rr == mod(mm - 1, 2 * mm);
            if (!allowed) {
                scan.excluded_orders.push_back({m, r});
                break;
            }
        }
    }
    return scan;
}

LemmaTwoResult lemma_two_check(unsigned long p, std::span<const unsigned long> sample)
{
    require_prime(p);
    if (p == 2) {
        raise(ErrorCode::invalid_argument, "lemma_two_check needs an odd prime");
    }
    const auto P = static_cast<long>(p);
    auto c1 = [P](long s, long t) { return mod(s - 2 * t, P); };
    auto four_c2 = [P](long s, long t) { return mod(mod(s * s, P) - 5 * mod(s * t, P) + 5 * mod(t * t, P) + s - t, P); };

    LemmaTwoResult result{p, 0, {}};
    std::vector<long> xs;
    for (unsigned long v : sample) {
        xs.push_back(static_cast<long>(v % p));
    }
    for (long a1 : xs) {
        for (long b1 : xs) {
            const long s1 = mod(a1 + b1, P);
            const long t1 = mod(a1 * b1, P);
            const long ca1 = mod(1 - a1, P);
            const long cb1 = mod(1 - b1, P);
            for (long a2 : xs) {
                for (long b2 : xs) {
                    const long s2 = mod(a2 + b2, P);
                    const long t2 = mod(a2 * b2, P);
                    const bool coefficients_equal = c1(s1, t1) == c1(s2, t2) && four_c2(s1, t1) == four_c2(s2, t2);
                    const bool sets_equal = (a2 == a1 && b2 == b1) || (a2 == b1 && b2 == a1) ||
                                            (a2 == ca1 && b2 == cb1) || (a2 == cb1 && b2 == ca1);
                    ++result.tuples_checked;
                    if (coefficients_equal != sets_equal) {
                        result.counterexamples.push_back({static_cast<unsigned long>(a1), static_cast<unsigned long>(b1),
                                                          static_cast<unsigned long>(a2),
                                                          static_cast<unsigned long>(b2)});
                    }
                }
            }
        }
    }
    return result;
}

LemmaTwoResult lemma_two_check(unsigned long p)
{
    std::vector<unsigned long> all(p);
    std::iota(all.begin(), all.end(), 0ul);
    return lemma_two_check(p, all);
}

} // namespace hauptmodul
