// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--criterion K]... [--long]
//
// Without --criterion every criterion runs. Criterion 2 (N = 183) needs --long.
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hauptmodul/dwork.hpp"
#include "hauptmodul/error.hpp"
#include "hauptmodul/halphen.hpp"
#include "hauptmodul/hypergeometric.hpp"
#include "hauptmodul/lab.hpp"

using namespace hauptmodul;

namespace
{

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome(bool long_tests)> run;
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<unsigned long> primes_between(unsigned long lo, unsigned long hi)
{
    std::vector<unsigned long> out;
    for (unsigned long p = lo + 1; p < hi; ++p) {
        if (is_prime(p)) {
            out.push_back(p);
        }
    }
    return out;
}

// Every valid type with finite m2 <= 8, plus (2,inf) and (3,inf).
std::vector<TriangleType> classifier_matrix_types()
{
    std::vector<TriangleType> out;
    for (unsigned m1 = 2; m1 <= 8; ++m1) {
        for (unsigned m2 = m1; m2 <= 8; ++m2) {
            if (m1 * m2 > m1 + m2) {
                out.emplace_back(m1, m2);
            }
        }
    }
    out.emplace_back(2, std::nullopt);
    out.emplace_back(3, std::nullopt);
    return out;
}

std::string join(const std::vector<std::string> &items, std::size_t limit = 12)
{
    std::string out;
    for (std::size_t i = 0; i < items.size() && i < limit; ++i) {
        out += (i ? "; " : "") + items[i];
    }
    if (items.size() > limit) {
        out += "; ... (" + std::to_string(items.size() - limit) + " more)";
    }
    return out;
}

Outcome takeuchi()
{
    const auto start = Clock::now();
    const auto scan = takeuchi_scan(60);
    const double elapsed = seconds_since(start);
    const std::vector<TriangleType> expected = {
        TriangleType(2, 3), TriangleType(2, 4), TriangleType(2, 6), TriangleType(2, std::nullopt),
        TriangleType(3, 3), TriangleType(3, std::nullopt), TriangleType(4, 4), TriangleType(6, 6)};
    std::vector<std::string> labels;
    for (const auto &t : scan.types) {
        labels.push_back(t.label());
    }
    std::ostringstream d;
    d << "found " << join(labels) << " in " << elapsed << " s";
    return {scan.types == expected && elapsed < 10.0, d.str()};
}

Outcome remark183(bool long_tests)
{
    if (!long_tests) {
        return {false, "needs --long (N = 183)"};
    }
    const auto start = Clock::now();
    bool ok = true;
    std::vector<std::string> parts;
    for (unsigned long p : {11ul, 19ul}) {
        const auto v = empirical_integrality(TriangleType(2, 5), p, 183);
        ok = ok && v.classification == Evidence::integral_evidence && v.profile.min_valuation >= 0;
        parts.push_back("p=" + std::to_string(p) + " " + evidence_name(v.classification));
    }
    const double elapsed = seconds_since(start);
    return {ok && elapsed < 120.0, join(parts) + " in " + std::to_string(elapsed) + " s"};
}

Outcome non_integral_witness()
{
    // Indices found by the implementation and frozen: the first negative
    // valuation of q(a,b|z) sits at z^(p+1).
    const std::vector<std::pair<unsigned long, std::size_t>> frozen = {{13, 14}, {17, 18}};
    bool ok = true;
    std::vector<std::string> parts;
    for (const auto &[p, index] : frozen) {
        const auto v = empirical_integrality(TriangleType(2, 5), p, 100);
        const auto found = v.first_negative_index;
        ok = ok && found && *found <= 100 && static_cast<std::size_t>(*found) == index;
        parts.push_back("p=" + std::to_string(p) + " first negative at z^" +
                        (found ? std::to_string(*found) : std::string("none")));
    }
    return {ok, join(parts)};
}

Outcome classifier_equivalence()
{
    const auto start = Clock::now();
    std::size_t cells = 0;
    std::vector<std::string> mismatches;
    for (const auto &tri : classifier_matrix_types()) {
        for (unsigned long p : primes_between(tri.modulus(), 500)) {
            if (gcd(p, tri.modulus()) != 1) {
                continue;
            }
            ++cells;
            const auto v = theorem_classifier(tri, p);
            const bool set = dwork_set_condition(hg_params(tri), p).holds;
            if ((v.verdict == Verdict::integral) != set || v.verdict == Verdict::below_theorem_range) {
                mismatches.push_back(tri.label() + " p=" + std::to_string(p));
            }
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream d;
    d << cells << " cells, " << mismatches.size() << " mismatches in " << elapsed << " s";
    if (!mismatches.empty()) {
        d << ": " << join(mismatches);
    }
    return {mismatches.empty() && elapsed < 10.0, d.str()};
}

Outcome dwork_congruence()
{
    std::size_t cells = 0;
    std::vector<std::string> failures;
    for (const auto &tri : {TriangleType(2, 5), TriangleType(3, 7), TriangleType(2, 7)}) {
        for (unsigned long p : {11ul, 13ul, 19ul, 23ul}) {
            ++cells;
            const auto r = dwork_congruence_check(tri, p, 60);
            if (!r.holds()) {
                failures.push_back(tri.label() + " p=" + std::to_string(p) + " index " +
                                   std::to_string(r.failures.front().index));
            }
        }
    }
    return {failures.empty(), std::to_string(cells) + " cells to order 60" +
                                  (failures.empty() ? std::string() : ", failing: " + join(failures))};
}

Outcome schwarz_biconditional()
{
    struct Cell {
        TriangleType tri;
        unsigned long p;
    };
    std::vector<Cell> cells;
    for (const auto &tri : classifier_matrix_types()) {
        for (unsigned long p : primes_between(tri.modulus(), 100)) {
            if (gcd(p, tri.modulus()) == 1) {
                cells.push_back({tri, p});
            }
        }
    }
    const std::size_t order = 60;
    std::vector<std::future<std::string>> results;
    for (const auto &cell : cells) {
        results.push_back(std::async(std::launch::async, [cell, order] {
            const auto congruence = schwarz_congruence_check(cell.tri, cell.p, order);
            const auto evidence = empirical_integrality(cell.tri, cell.p, order);
            const bool integral = evidence.classification == Evidence::integral_evidence;
            if (congruence.holds() == integral) {
                return std::string();
            }
            std::ostringstream d;
            d << cell.tri.label() << " p=" << cell.p << ": congruence "
              << (congruence.holds() ? "holds" : "fails at z^" + std::to_string(congruence.failures.front().index))
              << ", q-map " << evidence_name(evidence.classification);
            if (integral) {
                // Diagnostic only: where the truncated q-map stops looking integral.
                const std::size_t probe = 2 * cell.p + 2;
                const auto deeper = empirical_integrality(cell.tri, cell.p, probe);
                if (deeper.first_negative_index) {
                    d << ", first negative valuation at z^" << *deeper.first_negative_index << " [beyond N]";
                } else {
                    d << ", still integral to z^" << probe;
                }
            }
            return d.str();
        }));
    }
    std::vector<std::string> mismatches;
    for (auto &f : results) {
        auto s = f.get();
        if (!s.empty()) {
            mismatches.push_back(std::move(s));
        }
    }
    std::ostringstream d;
    d << cells.size() << " cells at N=" << order << ", " << mismatches.size() << " disagree";
    if (!mismatches.empty()) {
        d << ": " << join(mismatches, 100);
        const bool all_beyond = std::all_of(mismatches.begin(), mismatches.end(),
                                            [](const std::string &m) { return m.find("[beyond N]") != std::string::npos; });
        if (all_beyond) {
            d << ". In every disagreeing cell the q-map is non-integral but its first negative valuation lies past "
                 "z^N (at z^(p+1) or z^(2p+1)), while the congruence fails at a low index.";
        }
    }
    return {mismatches.empty(), d.str()};
}

Outcome cross_route()
{
    std::vector<std::string> parts;
    bool ok = true;
    for (const auto &tri : {TriangleType(2, 3), TriangleType(2, 5), TriangleType(3, 4), TriangleType(3, 3),
                            TriangleType(2, std::nullopt)}) {
        try {
            const auto r = cross_route_consistency(tri, 40);
            ok = ok && r.holds() && r.order >= 40;
            parts.push_back(tri.label() + " kappa=" + to_string(mirror_map(hg_params(tri), 2).kappa));
        } catch (const Error &e) {
            ok = false;
            parts.push_back(e.what());
        }
    }
    return {ok, "order 40: " + join(parts)};
}

Outcome hecke()
{
    std::size_t cells = 0;
    std::vector<std::string> mismatches;
    for (unsigned n : {5u, 7u, 9u}) {
        for (unsigned long p : primes_between(4 * n, 1000)) {
            if (gcd(p, 2 * n) != 1) {
                continue;
            }
            ++cells;
            const bool h = hecke_classifier(n, p);
            const bool residue = p % n == 1 || p % n == n - 1;
            const bool theorem = theorem_classifier(TriangleType(2, n), p).verdict == Verdict::integral;
            if (h != residue || residue != theorem) {
                mismatches.push_back("n=" + std::to_string(n) + " p=" + std::to_string(p));
            }
        }
    }
    return {mismatches.empty(), std::to_string(cells) + " cells" +
                                    (mismatches.empty() ? std::string() : ", mismatches: " + join(mismatches))};
}

Outcome lemma_two()
{
    bool ok = true;
    std::vector<std::string> parts;
    for (unsigned long p : {5ul, 7ul, 11ul}) {
        const auto r = lemma_two_check(p);
        ok = ok && r.holds() && r.tuples_checked == p * p * p * p;
        parts.push_back("p=" + std::to_string(p) + ": " + std::to_string(r.tuples_checked) + " tuples, " +
                        std::to_string(r.counterexamples.size()) + " counterexamples");
    }
    return {ok, join(parts)};
}

Outcome structural()
{
    std::vector<std::string> failures;

    for (const auto &tri : {TriangleType(2, 3), TriangleType(3, 7), TriangleType(2, std::nullopt)}) {
        if (!euler_identity_check(hg_params(tri), 50).holds) {
            failures.push_back("Euler identity " + tri.label());
        }
    }

    const long top = 30;
    for (const auto &tri : {TriangleType(2, 3), TriangleType(2, 5), TriangleType(3, 3), TriangleType(4, 5),
                            TriangleType(2, std::nullopt), TriangleType(3, std::nullopt)}) {
        const auto sol = solve_halphen(tri, top + 6);
        const auto J = hauptmodul_from_halphen(sol);

        const auto e4 = LaurentSeries::from_power_series(eisenstein_two(2, sol));
        const auto e6 = LaurentSeries::from_power_series(eisenstein_two(3, sol));
        const auto cube = pow(e4, 3);
        const auto ratio = cube / (cube - e6 * e6);
        if (ratio.order() < top || J.order() < top || ratio.with_order(top) != J.with_order(top)) {
            failures.push_back("E4^3/(E4^3 - E6^2) = J " + tri.label());
        }

        const Rational sign = derivative_sign(sol, J);
        const auto Jdot = sign * theta(J);
        const auto Jm1 = J - Rational(1);
        for (const auto &label : algebra_generators(tri)) {
            const auto formula = label.family == 1 ? (Jm1 / J) * pow(Jdot / Jm1, label.k)
                                                   : pow(Jdot / J, label.k) * (J / Jm1);
            const auto product = LaurentSeries::from_power_series(generator_series(label, sol));
            if (formula.order() < top || formula.with_order(top) != product.with_order(top)) {
                failures.push_back(label.name() + " formula " + tri.label());
            }
        }

        const std::size_t n = 60;
        const auto big = solve_halphen(tri, n);
        for (const auto &r : halphen_residual(big)) {
            if (!r.with_order(n - 1).is_zero()) {
                failures.push_back("Halphen residual " + tri.label());
            }
        }
    }
    return {failures.empty(), failures.empty() ? "Euler (3 types, N=50); E4/E6, generator formulas (6 types, N=30); "
                                                 "Halphen residual (6 types, N-1=59)"
                                               : join(failures)};
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"acceptance criteria"};
    std::vector<int> selected;
    bool long_tests = false;
    app.add_option("--criterion", selected, "criterion number (repeatable)")->check(CLI::Range(1, 10));
    app.add_flag("--long", long_tests, "run the N = 183 criterion");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "Takeuchi list from takeuchi_scan(60)", [](bool) { return takeuchi(); }},
        {2, "(2,5,inf) q-map integral to N=183 for p=11,19", remark183},
        {3, "(2,5,inf) non-integrality witness for p=13,17 within N=100", [](bool) { return non_integral_witness(); }},
        {4, "theorem classifier <=> Dwork set condition", [](bool) { return classifier_equivalence(); }},
        {5, "Dwork congruence to order 60", [](bool) { return dwork_congruence(); }},
        {6, "Schwarz congruence <=> empirical integrality (p<100, N=60)",
         [](bool) { return schwarz_biconditional(); }},
        {7, "Halphen J = hypergeometric J to order 40", [](bool) { return cross_route(); }},
        {8, "Hecke criterion", [](bool) { return hecke(); }},
        {9, "Lemma 2 brute force", [](bool) { return lemma_two(); }},
        {10, "structural identities", [](bool) { return structural(); }},
    };

    bool all = true;
    for (const auto &c : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) {
            continue;
        }
        Outcome o;
        try {
            o = c.run(long_tests);
        } catch (const std::exception &e) {
            o = {false, std::string("error: ") + e.what()};
        }
        all = all && o.passed;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << o.detail
                  << std::endl;
    }
    return all ? 0 : 1;
}
