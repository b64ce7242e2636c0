#include "hauptmodul/suite.hpp"

#include <algorithm>

#include "hauptmodul/error.hpp"
#include "hauptmodul/halphen.hpp"
#include "hauptmodul/hypergeometric.hpp"

namespace hauptmodul
{

namespace
{

const TriangleType &need_triangle(const SuiteConfig &c, std::string_view suite)
{
    if (!c.triangle) {
        raise(ErrorCode::invalid_argument, "suite " + std::string(suite) + " needs a triangle type");
    }
    return *c.triangle;
}

unsigned long need_prime(const SuiteConfig &c, std::string_view suite)
{
    if (!c.prime) {
        raise(ErrorCode::invalid_argument, "suite " + std::string(suite) + " needs a prime");
    }
    return *c.prime;
}

std::string cell_label(const TriangleType &tri, std::optional<unsigned long> p, std::size_t order)
{
    std::string label = tri.label();
    if (p) {
        label += " p=" + std::to_string(*p);
    }
    return label + " N=" + std::to_string(order);
}

// Mismatches between routes are verification outcomes, not usage errors.
template <typename F>
SuiteCell guarded(std::string label, F &&body)
{
    try {
        return body(label);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::route_mismatch || e.code() == ErrorCode::formula_mismatch) {
            return SuiteCell{std::move(label), false, Json{{"error", error_code_name(e.code())}, {"message", e.what()}}};
        }
        throw;
    }
}

bool is_zero_series(const TruncatedSeries &s)
{
    return s.is_zero();
}

} // namespace

bool SuiteReport::passed() const
{
    return std::all_of(cells.begin(), cells.end(), [](const SuiteCell &c) { return c.passed; });
}

Json SuiteReport::to_json() const
{
    Json cell_list = Json::array();
    for (const auto &c : cells) {
        cell_list.push_back(Json{{"label", c.label}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return Json{{"suite", suite}, {"passed", passed()}, {"cells", std::move(cell_list)}};
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {"dwork", "schwarz", "cross-route", "generators", "lemma2",
                                                   "euler", "halphen", "classifier", "dieudonne", "remark183"};
    return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig &config)
{
    SuiteReport report{std::string(name), {}};
    auto &cells = report.cells;

    if (name == "dwork") {
        const auto &tri = need_triangle(config, name);
        const auto p = need_prime(config, name);
        const auto r = dwork_congruence_check(tri, p, config.order);
        cells.push_back({cell_label(tri, p, config.order), r.holds(), hauptmodul::to_json(r)});
    } else if (name == "schwarz") {
        const auto &tri = need_triangle(config, name);
        const auto p = need_prime(config, name);
        const auto r = schwarz_congruence_check(tri, p, config.order);
        const auto e = empirical_integrality(tri, p, config.order);
        const bool agree = r.holds() == (e.classification == Evidence::integral_evidence);
        cells.push_back({cell_label(tri, p, config.order), agree,
                         Json{{"congruence", hauptmodul::to_json(r)}, {"empirical", hauptmodul::to_json(e)}}});
    } else if (name == "cross-route") {
        const auto &tri = need_triangle(config, name);
        cells.push_back(guarded(cell_label(tri, std::nullopt, config.order), [&](std::string &label) {
            const auto r = cross_route_consistency(tri, config.order);
            const auto kappa = mirror_map(hg_params(tri), 2).kappa;
            return SuiteCell{std::move(label), true,
                             Json{{"report", hauptmodul::to_json(r)}, {"kappa", to_string(kappa)}}};
        }));
    } else if (name == "generators") {
        const auto &tri = need_triangle(config, name);
        const auto p = need_prime(config, name);
        cells.push_back(guarded(cell_label(tri, p, config.order), [&](std::string &label) {
            Json gens = Json::array();
            for (const auto &g : generator_integrality(tri, p, config.order)) {
                gens.push_back(hauptmodul::to_json(g.verdict));
            }
            return SuiteCell{std::move(label), true, Json{{"generators", std::move(gens)}}};
        }));
    } else if (name == "lemma2") {
        const auto p = need_prime(config, name);
        const auto r = lemma_two_check(p);
        cells.push_back({"p=" + std::to_string(p), r.holds(), hauptmodul::to_json(r)});
    } else if (name == "euler") {
        const auto &tri = need_triangle(config, name);
        const auto r = euler_identity_check(hg_params(tri), config.order);
        Json detail{{"holds", r.holds}};
        if (!r.holds) {
            detail["part"] = r.failing_part == EulerPart::frobenius_f ? "F" : "q";
            detail["firstFailure"] = *r.first_failure;
        }
        cells.push_back({cell_label(tri, std::nullopt, config.order), r.holds, std::move(detail)});
    } else if (name == "halphen") {
        const auto &tri = need_triangle(config, name);
        const auto sol = solve_halphen(tri, config.order);
        const auto residual = halphen_residual(sol);
        const bool zero = std::all_of(residual.begin(), residual.end(), is_zero_series);
        cells.push_back({cell_label(tri, std::nullopt, config.order), zero,
                         Json{{"normalization", normalization_name(sol.normalization)},
                              {"t2", hauptmodul::to_json(sol.t2.with_order(std::min<std::size_t>(config.order, 3)))}}});
    } else if (name == "classifier") {
        const auto &tri = need_triangle(config, name);
        const auto p = need_prime(config, name);
        const auto v = theorem_classifier(tri, p);
        const auto d = dwork_set_condition(hg_params(tri), p);
        // Equivalence is a theorem only above 2 m1 m2.
        const bool agree = v.verdict == Verdict::below_theorem_range || v.congruence_holds == d.holds;
        cells.push_back({cell_label(tri, p, 0), agree,
                         Json{{"verdict", hauptmodul::to_json(v)},
                              {"setCondition", d.holds},
                              {"alternative", alternative_name(d.alternative)}}});
    } else if (name == "dieudonne") {
        const auto &tri = need_triangle(config, name);
        const auto p = need_prime(config, name);
        const auto r = dieudonne_check(schwarz_d(hg_params(tri), config.order), p, config.order);
        cells.push_back({cell_label(tri, p, config.order), r.agree(), hauptmodul::to_json(r)});
    } else if (name == "remark183") {
        if (!config.long_tests) {
            raise(ErrorCode::invalid_argument, "suite remark183 runs N = 183 and needs the long-tests flag");
        }
        const TriangleType tri(2, 5);
        for (unsigned long p : {11ul, 19ul}) {
            const auto e = empirical_integrality(tri, p, 183);
            cells.push_back({cell_label(tri, p, 183), e.classification == Evidence::integral_evidence,
                             hauptmodul::to_json(e)});
        }
    } else {
        raise(ErrorCode::invalid_argument, "unknown suite '" + std::string(name) + "'");
    }
    return report;
}

} // namespace hauptmodul
