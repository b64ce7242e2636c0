#ifndef HAUPTMODUL_LAB_HPP
#define HAUPTMODUL_LAB_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hauptmodul/halphen.hpp"
#include "hauptmodul/series.hpp"
#include "hauptmodul/triangle.hpp"

namespace hauptmodul
{

struct CongruenceFailure {
    std::size_t index;
    Valuation found;
    long required;
};

struct CongruenceReport {
    std::string description;
    unsigned long prime = 0;
    std::size_t order = 0;
    std::vector<CongruenceFailure> failures;

    bool holds() const noexcept
    {
        return failures.empty();
    }
};

enum class Evidence { integral_evidence, non_integral_evidence };

const char *evidence_name(Evidence e) noexcept;

// A truncated computation can only certify non-integrality; integral_evidence
// means "no negative valuation up to order N".
struct EmpiricalVerdict {
    TriangleType triangle;
    unsigned long prime;
    std::size_t order;
    std::string subject;
    // Profile of the series divided by its leading coefficient.
    ValuationProfile profile;
    // Minimum valuation before normalization.
    Valuation raw_min_valuation;
    Evidence classification;
    std::optional<long> first_negative_index;
};

// Normalizes by the leading nonzero coefficient and classifies.
EmpiricalVerdict classify_series(const TriangleType &tri, unsigned long p, const TruncatedSeries &s,
                                 std::string subject);

// p-integrality evidence for the mirror map q(a,b|z) to order N (equivalent to
// that of J for p coprime to 2 m1 m2). Throws SharedFactor.
EmpiricalVerdict empirical_integrality(const TriangleType &tri, unsigned long p, std::size_t order);

// D(d(a), d(b)|z^p) - p D(a,b|z) has every coefficient of valuation >= 1.
CongruenceReport dwork_congruence_check(const TriangleType &tri, unsigned long p, std::size_t order);

// D(d(a), d(b)|z) - D(a,b|z) has every coefficient of valuation >= 1.
CongruenceReport schwarz_congruence_check(const TriangleType &tri, unsigned long p, std::size_t order);

struct DieudonneReport {
    // exp(u) in 1 + z Z_p[[z]].
    CongruenceReport exp_integrality;
    // exp(u(z^p) - p u(z)) in 1 + p Z_p[[z]].
    CongruenceReport congruence;

    bool agree() const noexcept
    {
        return exp_integrality.holds() == congruence.holds();
    }
};

// Both sides of the additive Dieudonne-Dwork criterion for u, to order N.
DieudonneReport dieudonne_check(const TruncatedSeries &u, unsigned long p, std::size_t order);

// Halphen J versus 1/z(kappa q) coefficient by coefficient to order N.
// Throws RouteMismatch with the first differing exponent.
CongruenceReport cross_route_consistency(const TriangleType &tri, std::size_t order);

struct GeneratorReport {
    GeneratorLabel label;
    bool listed;
    EmpiricalVerdict verdict;
};

// Every listed generator as a t-product and through the J-derivative formulas
//   E^{(1)}_{2k} = ((J-1)/J) (J'/(J-1))^k,  E^{(2)}_{2k} = (J'/J)^k J/(J-1),
// which must agree exactly to order N. Also checks E4^3/(E4^3 - E6^2) = J.
// Throws SharedFactor and FormulaMismatch.
std::vector<GeneratorReport> generator_integrality(const TriangleType &tri, unsigned long p, std::size_t order);

// Sign s with t1 - t2 = s theta(J)/J. With t(0) = (0, -1, 0) it is -1: the
// derivative in the formulas above is J' = -theta(J).
Rational derivative_sign(const HalphenSolution &sol, const LaurentSeries &J);

// The two formula checks without the valuation part; they also confirm
// t1 - t2 = J'/J and t3 - t2 = J'/(J-1). Throws FormulaMismatch.
void check_generator_formulas(const HalphenSolution &sol, const std::vector<GeneratorLabel> &labels);
void check_e4_e6_identity(const HalphenSolution &sol);

} // namespace hauptmodul

#endif
