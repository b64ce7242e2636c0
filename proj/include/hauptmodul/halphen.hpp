#ifndef HAUPTMODUL_HALPHEN_HPP
#define HAUPTMODUL_HALPHEN_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hauptmodul/rational.hpp"
#include "hauptmodul/series.hpp"
#include "hauptmodul/triangle.hpp"

namespace hauptmodul
{

// Parameters of the Halphen system for the type (m1, m2, inf):
//   1 - a - b = 1/m1,  1 - b - c = 1/m2,  1 - a - c = 0.
struct HalphenParams {
    Rational a;
    Rational b;
    Rational c;
};

// Solves the three linear relations exactly and cross-checks the result
// against a = (1 - 1/m1 + 1/m2)/2, b = (1 - 1/m1 - 1/m2)/2, c = 1 - a.
HalphenParams derive_params(const TriangleType &tri);

enum class Normalization {
    // The prescribed linear coefficient of t2 fixes the order-1 solution.
    prescribed_t2,
    // m1 == m2: t2's prescribed coefficient is 0 and t3_1 - t1_1 = 2 m1^2 m2^2
    // is imposed instead.
    symmetric_normalized,
};

const char *normalization_name(Normalization n) noexcept;

struct HalphenSolution {
    TriangleType triangle;
    HalphenParams params;
    TruncatedSeries t1;
    TruncatedSeries t2;
    TruncatedSeries t3;
    Normalization normalization;
};

// Linear coefficient of t2: -(m1 + 1) for m2 = inf, else
// m1^2 m2 + m1^2 - m1 m2^2 - m2^2.
Rational prescribed_t2_linear(const TriangleType &tri);

// Formal solution in q of
//   t1' = (a-1)(t1 t2 + t1 t3 - t2 t3) + (b+c-1) t1^2
//   t2' = (b-1)(t2 t1 + t2 t3 - t1 t3) + (a+c-1) t2^2
//   t3' = (c-1)(t3 t1 + t3 t2 - t1 t2) + (a+b-1) t3^2      (' = q d/dq)
// with t1(0) = t3(0) = 0, t2(0) = -1. Orders n >= 2 come from exact 3x3
// solves; order 1 is rank deficient and uses prescribed_t2_linear.
//
// Throws SingularSystem / InconsistentOrderOne (neither occurs for valid types).
HalphenSolution solve_halphen(const TriangleType &tri, std::size_t order);

// Left minus right side of each equation; identically zero for a solution.
std::array<TruncatedSeries, 3> halphen_residual(const HalphenSolution &sol);

// J = (t3 - t2) / (t3 - t1), with a simple pole at q = 0; known to order N - 2.
// Throws DegenerateDenominator if t3 - t1 has no linear term.
LaurentSeries hauptmodul_from_halphen(const HalphenSolution &sol);

// E^{(1)}_{2k} = (t1 - t2)(t3 - t2)^{k-1}.
TruncatedSeries eisenstein_one(unsigned k, const HalphenSolution &sol);
// E^{(2)}_{2k} = (t1 - t2)^{k-1}(t3 - t2).
TruncatedSeries eisenstein_two(unsigned k, const HalphenSolution &sol);

struct GeneratorLabel {
    unsigned family; // 1 or 2
    unsigned k;      // weight 2k

    std::string name() const; // "E1_6", "E2_4", ...
    friend bool operator==(const GeneratorLabel &, const GeneratorLabel &) = default;
};

// Generators of the algebra of automorphic forms:
//   m2 < inf: E^{(1)}_{2k}, 3 <= k <= m1 and E^{(2)}_{2k}, 2 <= k <= m2;
//   m2 = inf: E^{(1)}_{2k}, 1 <= k <= m1.
std::vector<GeneratorLabel> algebra_generators(const TriangleType &tri);

bool is_listed_generator(const TriangleType &tri, const GeneratorLabel &label);

TruncatedSeries generator_series(const GeneratorLabel &label, const HalphenSolution &sol);

} // namespace hauptmodul

#endif
