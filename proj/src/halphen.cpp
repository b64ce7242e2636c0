#include "hauptmodul/halphen.hpp"

#include <algorithm>
#include <utility>

#include "hauptmodul/error.hpp"

namespace hauptmodul
{

namespace
{

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
    SolveStatus status;
    std::vector<Rational> x;
};

// Gauss-Jordan elimination on an augmented system with `cols` unknowns.
LinearSolution solve_linear(std::vector<std::vector<Rational>> rows, std::size_t cols)
{
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        auto pivot = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                                  [col](const auto &row) { return sgn(row[col]) != 0; });
        if (pivot == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + static_cast<long>(rank), pivot);
        auto &prow = rows[rank];
        const Rational inv = 1 / prow[col];
        for (auto &v : prow) {
            v *= inv;
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][col]) == 0) {
                continue;
            }
            const Rational factor = rows[r][col];
            for (std::size_t c = col; c <= cols; ++c) {
                rows[r][c] -= factor * prow[c];
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (sgn(rows[r][cols]) != 0) {
            return {SolveStatus::inconsistent, {}};
        }
    }
    if (rank < cols) {
        return {SolveStatus::underdetermined, {}};
    }
    std::vector<Rational> x(cols);
    for (std::size_t r = 0; r < rank; ++r) {
        x[pivot_cols[r]] = rows[r][cols];
    }
    return {SolveStatus::unique, std::move(x)};
}

// Right-hand side of equation i as a symmetric quadratic form:
// Q_i(t) = sum_{j,k} form[i][j][k] t_j t_k.
using QuadraticForms = std::array<std::array<std::array<Rational, 3>, 3>, 3>;

QuadraticForms halphen_forms(const HalphenParams &p)
{
    QuadraticForms f{};
    const Rational half(1, 2);
    const std::array<Rational, 3> lin = {p.a - 1, p.b - 1, p.c - 1};
    const std::array<Rational, 3> sq = {p.b + p.c - 1, p.a + p.c - 1, p.a + p.b - 1};
    for (int i = 0; i < 3; ++i) {
        // (x_i - 1)(t_i t_j + t_i t_k - t_j t_k) + (...) t_i^2
        const int j = (i + 1) % 3;
        const int k = (i + 2) % 3;
        f[i][i][i] = sq[i];
        f[i][i][j] = f[i][j][i] = half * lin[i];
        f[i][i][k] = f[i][k][i] = half * lin[i];
        f[i][j][k] = f[i][k][j] = -half * lin[i];
    }
    return f;
}

} // namespace

const char *normalization_name(Normalization n) noexcept
{
    return n == Normalization::prescribed_t2 ? "prescribed-t2" : "symmetric-normalized";
}

HalphenParams derive_params(const TriangleType &tri)
{
    // Unknowns (a, b, c):  a + b = 1 - 1/m1,  b + c = 1 - 1/m2,  a + c = 1.
    std::vector<std::vector<Rational>> rows = {
        {1, 1, 0, 1 - tri.inverse_m1()},
        {0, 1, 1, 1 - tri.inverse_m2()},
        {1, 0, 1, 1},
    };
    const auto sol = solve_linear(std::move(rows), 3);
    if (sol.status != SolveStatus::unique) {
        raise(ErrorCode::singular_system, "parameter relations are singular for " + tri.label());
    }
    HalphenParams params{sol.x[0], sol.x[1], sol.x[2]};

    const Rational half(1, 2);
    const Rational a = half * (1 - tri.inverse_m1() + tri.inverse_m2());
    const Rational b = half * (1 - tri.inverse_m1() - tri.inverse_m2());
    if (params.a != a || params.b != b || params.c != 1 - a) {
        raise(ErrorCode::formula_mismatch, "Halphen parameters disagree with the hypergeometric a, b");
    }
    return params;
}

Rational prescribed_t2_linear(const TriangleType &tri)
{
    const Integer m1 = tri.m1();
    if (!tri.m2()) {
        return Rational(-(m1 + 1));
    }
    const Integer m2 = *tri.m2();
    return Rational(m1 * m1 * m2 + m1 * m1 - m1 * m2 * m2 - m2 * m2);
}

HalphenSolution solve_halphen(const TriangleType &tri, std::size_t order)
{
    if (order < 2) {
        raise(ErrorCode::invalid_argument, "solve_halphen needs order >= 2");
    }
    const HalphenParams params = derive_params(tri);
    const QuadraticForms forms = halphen_forms(params);

    std::array<std::vector<Rational>, 3> t;
    for (auto &ti : t) {
        ti.assign(order + 1, Rational(0));
    }
    t[1][0] = -1;

    // Jacobian of the right-hand side at the initial point (0, -1, 0).
    std::array<std::array<Rational, 3>, 3> jac{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                jac[i][j] += 2 * forms[i][j][k] * t[k][0];
            }
        }
    }
    auto order_system = [&](std::size_t n, const std::array<Rational, 3> &rhs) {
        std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(4));
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                rows[i][j] = (i == j ? Rational(static_cast<unsigned long>(n)) : Rational(0)) - jac[i][j];
            }
            rows[i][3] = rhs[i];
        }
        return rows;
    };

    // Order 1: the system is homogeneous of rank 2, so append t2_1 = prescribed.
    Normalization normalization = Normalization::prescribed_t2;
    {
        auto rows = order_system(1, {});
        rows.push_back({0, 1, 0, prescribed_t2_linear(tri)});
        auto sol = solve_linear(rows, 3);
        if (sol.status == SolveStatus::underdetermined) {
            const Integer m1 = tri.m1();
            const Integer m2 = tri.m2().value_or(1);
            rows.push_back({-1, 0, 1, Rational(2 * m1 * m1 * m2 * m2)});
            sol = solve_linear(std::move(rows), 3);
            normalization = Normalization::symmetric_normalized;
        }
        if (sol.status == SolveStatus::inconsistent) {
            raise(ErrorCode::inconsistent_order_one,
                  "order-1 Halphen system is inconsistent with the prescribed t2 coefficient for " + tri.label());
        }
        if (sol.status != SolveStatus::unique) {
            raise(ErrorCode::singular_system, "order-1 Halphen system remains underdetermined for " + tri.label());
        }
        for (int i = 0; i < 3; ++i) {
            t[i][1] = sol.x[i];
        }
    }

    // Order n >= 2: (n I - jac) x = sum over products of lower-order terms.
    std::array<std::array<Rational, 3>, 3> conv{};
    for (std::size_t n = 2; n <= order; ++n) {
        for (int j = 0; j < 3; ++j) {
            for (int k = j; k < 3; ++k) {
                Rational &acc = conv[j][k];
                acc = 0;
                for (std::size_t m = 1; m < n; ++m) {
                    acc += t[j][m] * t[k][n - m];
                }
                conv[k][j] = acc;
            }
        }
        std::array<Rational, 3> rhs{};
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                for (int k = 0; k < 3; ++k) {
                    if (sgn(forms[i][j][k]) != 0) {
                        rhs[i] += forms[i][j][k] * conv[j][k];
                    }
                }
            }
        }
        const auto sol = solve_linear(order_system(n, rhs), 3);
        if (sol.status != SolveStatus::unique) {
            raise(ErrorCode::singular_system,
                  "Halphen system at order " + std::to_string(n) + " is singular for " + tri.label());
        }
        for (int i = 0; i < 3; ++i) {
            t[i][n] = sol.x[i];
        }
    }

    return HalphenSolution{tri,
                           params,
                           TruncatedSeries(std::move(t[0]), order),
                           TruncatedSeries(std::move(t[1]), order),
                           TruncatedSeries(std::move(t[2]), order),
                           normalization};
}

std::array<TruncatedSeries, 3> halphen_residual(const HalphenSolution &sol)
{
    const QuadraticForms forms = halphen_forms(sol.params);
    const std::array<const TruncatedSeries *, 3> t = {&sol.t1, &sol.t2, &sol.t3};
    const std::size_t order = sol.t1.order();
    std::array<TruncatedSeries, 3> out;
    for (int i = 0; i < 3; ++i) {
        TruncatedSeries rhs(order);
        for (int j = 0; j < 3; ++j) {
            for (int k = j; k < 3; ++k) {
                const Rational weight = j == k ? forms[i][j][k] : Rational(2 * forms[i][j][k]);
                if (sgn(weight) != 0) {
                    rhs = rhs + weight * (*t[j] * *t[k]);
                }
            }
        }
        out[i] = theta(*t[i]) - rhs;
    }
    return out;
}

LaurentSeries hauptmodul_from_halphen(const HalphenSolution &sol)
{
    const TruncatedSeries den = sol.t3 - sol.t1;
    if (sgn(den[1]) == 0) {
        raise(ErrorCode::degenerate_denominator, "t3 - t1 has zero linear coefficient");
    }
    return LaurentSeries::from_power_series(sol.t3 - sol.t2) / LaurentSeries::from_power_series(den);
}

TruncatedSeries eisenstein_one(unsigned k, const HalphenSolution &sol)
{
    if (k == 0) {
        raise(ErrorCode::invalid_argument, "weight index k must be positive");
    }
    return (sol.t1 - sol.t2) * pow(sol.t3 - sol.t2, k - 1);
}

TruncatedSeries eisenstein_two(unsigned k, const HalphenSolution &sol)
{
    if (k == 0) {
        raise(ErrorCode::invalid_argument, "weight index k must be positive");
    }
    return pow(sol.t1 - sol.t2, k - 1) * (sol.t3 - sol.t2);
}

std::string GeneratorLabel::name() const
{
    return "E" + std::to_string(family) + "_" + std::to_string(2 * k);
}

std::vector<GeneratorLabel> algebra_generators(const TriangleType &tri)
{
    std::vector<GeneratorLabel> out;
    if (!tri.m2()) {
        for (unsigned k = 1; k <= tri.m1(); ++k) {
            out.push_back({1, k});
        }
        return out;
    }
    for (unsigned k = 3; k <= tri.m1(); ++k) {
        out.push_back({1, k});
    }
    for (unsigned k = 2; k <= *tri.m2(); ++k) {
        out.push_back({2, k});
    }
    return out;
}

bool is_listed_generator(const TriangleType &tri, const GeneratorLabel &label)
{
    const auto gens = algebra_generators(tri);
    return std::find(gens.begin(), gens.end(), label) != gens.end();
}

TruncatedSeries generator_series(const GeneratorLabel &label, const HalphenSolution &sol)
{
    if (label.family == 1) {
        return eisenstein_one(label.k, sol);
    }
    if (label.family == 2) {
        return eisenstein_two(label.k, sol);
    }
    raise(ErrorCode::invalid_argument, "generator family must be 1 or 2");
}

} // namespace hauptmodul
