#ifndef HAUPTMODUL_DWORK_HPP
#define HAUPTMODUL_DWORK_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hauptmodul/hypergeometric.hpp"
#include "hauptmodul/rational.hpp"
#include "hauptmodul/triangle.hpp"

namespace hauptmodul
{

struct DworkImage {
    Rational input;
    unsigned long prime;
    Rational image;
    // p * image - input, always in [0, p - 1].
    unsigned long digit;
};

// delta_p(x1/x2) = (p^{-1} x1 mod x2) / x2 for x >= 0. The representative is
// taken in [0, x2) and shifted by x2 only when that is needed for the digit
// identity (integral x >= 1). Throws PrimeDividesDenominator if p | x2.
DworkImage dwork_map(const Rational &x, unsigned long p);

enum class DworkAlternative { none, same, complementary };

const char *alternative_name(DworkAlternative alt) noexcept;

struct DworkSetCondition {
    bool holds;
    // same: {d(a), d(b)} = {a, b}; complementary: = {1-a, 1-b}.
    DworkAlternative alternative;
    Rational delta_a;
    Rational delta_b;
};

DworkSetCondition dwork_set_condition(const HGParams &params, unsigned long p);

enum class Verdict { integral, non_integral, below_theorem_range };
enum class WitnessBranch { plain, shifted };

const char *verdict_name(Verdict v) noexcept;
const char *branch_name(WitnessBranch b) noexcept;

// plain:   p = eps (mod 2 m1),      p = eps' eps (mod 2 m2)
// shifted: p = m1 + eps (mod 2 m1), p = m2 + eps' eps (mod 2 m2)
// For m2 = inf only p = eps (mod 2 m1) applies and epsilon_prime is empty.
struct CongruenceWitness {
    int epsilon;
    std::optional<int> epsilon_prime;
    WitnessBranch branch;

    friend bool operator==(const CongruenceWitness &, const CongruenceWitness &) = default;
};

// The congruence conditions evaluated on a residue class r mod modulus().
std::optional<CongruenceWitness> congruence_witness(const TriangleType &tri, unsigned long residue);

struct IntegralityVerdict {
    TriangleType triangle;
    unsigned long prime;
    Verdict verdict;
    // What the congruences say, also for primes below the proven range.
    bool congruence_holds;
    // Present iff verdict == integral.
    std::optional<CongruenceWitness> witness;
    // Below the proven range: the witness the congruences would give.
    std::optional<CongruenceWitness> conjectural_witness;
};

// Classifies p-integrality of J. Primes p <= 2 m1 m2 (2 m1 for m2 = inf) get
// below_theorem_range. Throws SharedFactor if gcd(p, 2 m1 m2) > 1 and
// InvalidArgument if p is not prime.
IntegralityVerdict theorem_classifier(const TriangleType &tri, unsigned long p);

// J of the Hecke group (2, n, inf) is p-integral iff p = +/-1 (mod n). For
// p > 4n the answer is cross-checked against theorem_classifier.
bool hecke_classifier(unsigned n, unsigned long p);

// True iff every residue class coprime to the modulus satisfies the
// congruences (Dirichlet puts infinitely many primes in each class).
bool almost_integral(const TriangleType &tri);

struct ExcludedOrder {
    unsigned m;
    // A residue r coprime to 2m with r != +/-1, m +/- 1 (mod 2m).
    unsigned long residue;
};

struct TakeuchiScan {
    unsigned bound;
    std::vector<TriangleType> types;
    // Orders m in [2, bound] outside {2, 3, 4, 6}, each with a failing residue.
    std::vector<ExcludedOrder> excluded_orders;
};

// All almost-integral types with 2 <= m1 <= m2 <= bound, plus (m1, inf) for
// m1 <= bound. Requires bound >= 6.
TakeuchiScan takeuchi_scan(unsigned bound);

struct LemmaTwoResult {
    unsigned long prime;
    std::size_t tuples_checked;
    // (a1, b1, a2, b2) where coefficient equality and the set condition disagree.
    std::vector<std::array<unsigned long, 4>> counterexamples;

    bool holds() const noexcept
    {
        return counterexamples.empty();
    }
};

// Brute force over sample^4 in F_p: the z and z^2 coefficients of D agree iff
// {a2, b2} = {a1, b1} or {1 - a1, 1 - b1}. Uses C1 = s - 2t and
// 4 C2 = s^2 - 5 s t + 5 t^2 + s - t with s = a + b, t = a b.
LemmaTwoResult lemma_two_check(unsigned long p, std::span<const unsigned long> sample);
// Full field F_p.
LemmaTwoResult lemma_two_check(unsigned long p);

} // namespace hauptmodul

#endif
