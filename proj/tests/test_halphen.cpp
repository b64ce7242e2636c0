#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hauptmodul/error.hpp"
#include "hauptmodul/halphen.hpp"
#include "hauptmodul/lab.hpp"

using namespace hauptmodul;

namespace
{

const TriangleType t23(2, 3);
const TriangleType t25(2, 5);
const TriangleType t2inf(2, std::nullopt);

ErrorCode code_of(auto &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::verification_failure;
}

// Order-1 data solved by hand: with c = 1 - a the rows for t1 and t3 collapse to
//   a t11 + (1 - a) t31 = 0,   t21 = (1 - b)(t11 + t31),
// so t11 = (a - 1) s, t31 = a s with s = t21 / ((1 - b)(2a - 1)).
Rational hand_lambda(const TriangleType &tri)
{
    const HalphenParams p = derive_params(tri);
    const Rational s = prescribed_t2_linear(tri) / ((1 - p.b) * (2 * p.a - 1));
    return p.a * s - (p.a - 1) * s;
}

bool zero_to(const TruncatedSeries &s, std::size_t order)
{
    return s.with_order(order).is_zero();
}

} // namespace

TEST_CASE("triangle types")
{
    CHECK(TriangleType(2, 3).label() == "(2,3,inf)");
    CHECK(parse_triangle("2,inf") == t2inf);
    CHECK(parse_triangle("3,7") == TriangleType(3, 7));
    CHECK(t23.modulus() == 12);
    CHECK(t2inf.modulus() == 4);
    CHECK(t23 < t25);
    CHECK(t25 < t2inf);
    CHECK(code_of([] { TriangleType(2, 2); }) == ErrorCode::invalid_triangle);
    CHECK(code_of([] { TriangleType(3, 2); }) == ErrorCode::invalid_triangle);
    CHECK(code_of([] { TriangleType(1, 9); }) == ErrorCode::invalid_triangle);
    CHECK(code_of([] { parse_triangle("inf,inf"); }) == ErrorCode::invalid_triangle);
    CHECK(code_of([] { parse_triangle("2;3"); }) == ErrorCode::parse_error);
}

TEST_CASE("parameters")
{
    const auto p = derive_params(t23);
    CHECK(p.a == make_rational(5, 12));
    CHECK(p.b == make_rational(1, 12));
    CHECK(p.c == make_rational(7, 12));
    for (unsigned m = 2; m <= 7; ++m) {
        const auto q = derive_params(TriangleType(m, std::nullopt));
        CHECK(q.a == make_rational(m - 1, 2 * m));
        CHECK(q.b == q.a);
    }
    CHECK(derive_params(t2inf).c == make_rational(3, 4));
}

TEST_CASE("prescribed linear coefficient of t2")
{
    CHECK(solve_halphen(t23, 2).t2.with_order(1) == TruncatedSeries({Rational(-1), Rational(-11)}, 1));
    CHECK(solve_halphen(t2inf, 2).t2.with_order(1) == TruncatedSeries({Rational(-1), Rational(-3)}, 1));
    const auto sol = solve_halphen(t23, 4);
    CHECK(sol.t1[0] == 0);
    CHECK(sol.t3[0] == 0);
    CHECK(sol.normalization == Normalization::prescribed_t2);
    CHECK(sol.t3[1] - sol.t1[1] == 72);
}

TEST_CASE("order-one data matches the hand solve")
{
    for (const auto &tri : {t23, t25, TriangleType(2, 7), TriangleType(3, 4), TriangleType(3, 7), TriangleType(4, 5),
                            t2inf, TriangleType(3, std::nullopt), TriangleType(5, std::nullopt)}) {
        CAPTURE(tri.label());
        const auto sol = solve_halphen(tri, 2);
        const long m1 = tri.m1();
        const long m2 = tri.m2() ? static_cast<long>(*tri.m2()) : 1;
        CHECK(sol.t3[1] - sol.t1[1] == hand_lambda(tri));
        CHECK(sol.t3[1] - sol.t1[1] == 2 * m1 * m1 * m2 * m2);
    }
}

TEST_CASE("m1 = m2 uses the symmetric normalization")
{
    for (unsigned m : {3u, 4u, 6u}) {
        const TriangleType tri(m, m);
        const auto sol = solve_halphen(tri, 6);
        CHECK(prescribed_t2_linear(tri) == 0);
        CHECK(sol.normalization == Normalization::symmetric_normalized);
        CHECK(sol.t3[1] - sol.t1[1] == 2 * m * m * m * m);
    }
}

TEST_CASE("back-substitution residual vanishes")
{
    for (const auto &tri : {t23, t25, TriangleType(3, 3), TriangleType(4, 7), t2inf}) {
        CAPTURE(tri.label());
        const std::size_t n = 25;
        const auto sol = solve_halphen(tri, n);
        for (const auto &r : halphen_residual(sol)) {
            CHECK(zero_to(r, n - 1));
        }
    }
}

TEST_CASE("Hauptmodul from the Halphen solution")
{
    const auto sol = solve_halphen(t23, 12);
    const auto J = hauptmodul_from_halphen(sol);
    CHECK(J.lowest_exponent() == -1);
    CHECK(J.coefficient(-1) == make_rational(1, 72));
    CHECK(J.coefficient(0) == make_rational(31, 72));
    const auto inv = reciprocal(J);
    CHECK(inv.coefficient(1) == 72);
    CHECK(inv.coefficient(2) == -2232);

    HalphenSolution flat = sol;
    flat.t3 = flat.t1;
    CHECK(code_of([&] { hauptmodul_from_halphen(flat); }) == ErrorCode::degenerate_denominator);
}

TEST_CASE("generators")
{
    const auto sol = solve_halphen(t25, 20);
    for (unsigned k = 1; k <= 6; ++k) {
        CHECK(eisenstein_one(k, sol)[0] == 1);
        CHECK(eisenstein_two(k, sol)[0] == 1);
        CHECK(eisenstein_one(k + 1, sol) == eisenstein_one(k, sol) * (sol.t3 - sol.t2));
        CHECK(eisenstein_two(k + 1, sol) == eisenstein_two(k, sol) * (sol.t1 - sol.t2));
    }
    CHECK(eisenstein_one(2, sol) == eisenstein_two(2, sol));

    const auto names = [](const TriangleType &tri) {
        std::vector<std::string> out;
        for (const auto &g : algebra_generators(tri)) {
            out.push_back(g.name());
        }
        return out;
    };
    CHECK(names(t25) == std::vector<std::string>{"E2_4", "E2_6", "E2_8", "E2_10"});
    CHECK(names(TriangleType(4, 5)) == std::vector<std::string>{"E1_6", "E1_8", "E2_4", "E2_6", "E2_8", "E2_10"});
    CHECK(names(TriangleType(3, std::nullopt)) == std::vector<std::string>{"E1_2", "E1_4", "E1_6"});
    CHECK(is_listed_generator(t23, {2, 3}));
    CHECK_FALSE(is_listed_generator(t23, {1, 3}));
}

TEST_CASE("J-derivative identities")
{
    const std::size_t n = 31;
    const auto sol = solve_halphen(t23, n + 2);
    const auto J = hauptmodul_from_halphen(sol);
    // The derivative that makes t1 - t2 = J'/J hold is -theta(J).
    CHECK(derivative_sign(sol, J) == -1);
    const auto Jdot = Rational(-1) * theta(J);
    const auto t12 = LaurentSeries::from_power_series(sol.t1 - sol.t2);
    const auto t32 = LaurentSeries::from_power_series(sol.t3 - sol.t2);
    CHECK(t12.with_order(n - 1) == (Jdot / J).with_order(n - 1));
    CHECK(t32.with_order(n - 1) == (Jdot / (J - Rational(1))).with_order(n - 1));

    // E_4 through the derivative, to order 30; the sign drops out for even k.
    const auto e4 = pow(theta(J) / J, 2) * (J / (J - Rational(1)));
    CHECK(e4.with_order(30) == LaurentSeries::from_power_series(eisenstein_two(2, sol)).with_order(30));

    CHECK_NOTHROW(check_generator_formulas(sol, algebra_generators(t23)));
    CHECK_NOTHROW(check_e4_e6_identity(sol));
}

TEST_CASE("order argument is validated")
{
    CHECK(code_of([] { solve_halphen(t23, 1); }) == ErrorCode::invalid_argument);
}
