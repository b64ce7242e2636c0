#include "hauptmodul/hauptmodul.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "hauptmodul/dwork.hpp"
#include "hauptmodul/error.hpp"
#include "hauptmodul/halphen.hpp"
#include "hauptmodul/hypergeometric.hpp"
#include "hauptmodul/lab.hpp"
#include "hauptmodul/serialize.hpp"
#include "hauptmodul/suite.hpp"

using namespace hauptmodul;

struct hm_series {
    LaurentSeries value;
};

struct hm_report {
    Json json;
    bool passed;
    std::optional<EmpiricalVerdict> empirical;
};

namespace
{

thread_local std::string last_error;

hm_status fail(hm_status status, const std::string &message)
{
    last_error = message;
    return status;
}

template <typename F>
hm_status guard(F &&body) noexcept
{
    try {
        last_error.clear();
        body();
        return HM_OK;
    } catch (const Error &e) {
        return fail(static_cast<hm_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc &) {
        return fail(HM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(HM_ERR_INTERNAL, e.what());
    }
}

void require(bool condition, const char *what)
{
    if (!condition) {
        raise(ErrorCode::invalid_argument, what);
    }
}

char *duplicate(const std::string &s)
{
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

TriangleType to_triangle(hm_triangle tri)
{
    return TriangleType(tri.m1, tri.m2 == HM_INFINITY ? std::nullopt : std::optional<unsigned>(tri.m2));
}

hm_triangle from_triangle(const TriangleType &tri)
{
    return hm_triangle{tri.m1(), tri.m2().value_or(HM_INFINITY)};
}

std::optional<GeneratorLabel> parse_generator(const std::string &name)
{
    if (name.size() < 4 || name[0] != 'E' || (name[1] != '1' && name[1] != '2') || name[2] != '_') {
        return std::nullopt;
    }
    const std::string digits = name.substr(3);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 6) {
        return std::nullopt;
    }
    const unsigned weight = static_cast<unsigned>(std::stoul(digits));
    if (weight == 0 || weight % 2 != 0) {
        raise(ErrorCode::invalid_argument, "generator weight must be a positive even number: " + name);
    }
    return GeneratorLabel{static_cast<unsigned>(name[1] - '0'), weight / 2};
}

LaurentSeries expand(const TriangleType &tri, const std::string &name, std::size_t order)
{
    const std::size_t solve_order = std::max<std::size_t>(order, 2);
    auto power = [order](const TruncatedSeries &s) { return LaurentSeries::from_power_series(s.with_order(order)); };

    if (name == "t1" || name == "t2" || name == "t3") {
        const auto sol = solve_halphen(tri, solve_order);
        return power(name == "t1" ? sol.t1 : name == "t2" ? sol.t2 : sol.t3);
    }
    if (name == "J") {
        return hauptmodul_from_halphen(solve_halphen(tri, order + 2));
    }
    if (name == "Jhyp") {
        return mirror_map(hg_params(tri), order + 2).J;
    }
    if (auto label = parse_generator(name)) {
        return power(generator_series(*label, solve_halphen(tri, solve_order)));
    }
    const HGParams params = hg_params(tri);
    if (name == "F") {
        return power(series_f(params, order));
    }
    if (name == "G") {
        return power(series_g(params, order));
    }
    if (name == "D") {
        return power(schwarz_d(params, order));
    }
    if (name == "qmap" || name == "q") {
        return power(mirror_q(params, order));
    }
    if (name == "zmap" || name == "zq" || name == "z(q)") {
        return power(reversion(mirror_q(params, order)));
    }
    raise(ErrorCode::invalid_argument, "unknown series '" + name + "'");
}

} // namespace

extern "C" {

HM_API const char *hm_status_name(hm_status status)
{
    if (status == HM_OK) {
        return "Ok";
    }
    if (status == HM_ERR_INTERNAL) {
        return "Internal";
    }
    if (status >= HM_ERR_INVALID_ARGUMENT && status <= HM_ERR_VERIFICATION_FAILURE) {
        return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
    }
    return "Unknown";
}

HM_API const char *hm_last_error(void)
{
    return last_error.c_str();
}

HM_API const char *hm_version(void)
{
    return "1.0.0";
}

HM_API void hm_string_free(char *s)
{
    std::free(s);
}

HM_API hm_status hm_triangle_parse(const char *text, hm_triangle *out)
{
    return guard([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = from_triangle(parse_triangle(text));
    });
}

HM_API hm_status hm_triangle_validate(hm_triangle tri)
{
    return guard([&] { (void)to_triangle(tri); });
}

HM_API hm_status hm_expand(hm_triangle tri, const char *name, unsigned order, hm_series **out)
{
    return guard([&] {
        require(name != nullptr && out != nullptr, "null argument");
        *out = new hm_series{expand(to_triangle(tri), name, order)};
    });
}

HM_API int hm_is_unlisted_generator(hm_triangle tri, const char *name)
{
    try {
        if (name == nullptr) {
            return 0;
        }
        const auto label = parse_generator(name);
        return label && !is_listed_generator(to_triangle(tri), *label) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

HM_API long hm_series_lowest_exponent(const hm_series *s)
{
    return s != nullptr ? s->value.lowest_exponent() : 0;
}

HM_API long hm_series_truncation(const hm_series *s)
{
    return s != nullptr ? s->value.order() : -1;
}

HM_API hm_status hm_series_coefficient(const hm_series *s, long exponent, char **out)
{
    return guard([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = duplicate(to_string(s->value.coefficient(exponent)));
    });
}

HM_API hm_status hm_series_to_json(const hm_series *s, char **out)
{
    return guard([&] {
        require(s != nullptr && out != nullptr, "null argument");
        *out = duplicate(to_json(s->value).dump());
    });
}

HM_API hm_status hm_series_valuations(const hm_series *s, unsigned long p, char **out_json)
{
    return guard([&] {
        require(s != nullptr && out_json != nullptr, "null argument");
        *out_json = duplicate(to_json(valuation_profile(s->value, p)).dump());
    });
}

HM_API void hm_series_free(hm_series *s)
{
    delete s;
}

HM_API hm_status hm_classify(hm_triangle tri, unsigned long p, hm_verdict *out)
{
    return guard([&] {
        require(out != nullptr, "null argument");
        const auto v = theorem_classifier(to_triangle(tri), p);
        hm_verdict r{};
        r.verdict = v.verdict == Verdict::integral       ? HM_VERDICT_INTEGRAL
                    : v.verdict == Verdict::non_integral ? HM_VERDICT_NON_INTEGRAL
                                                         : HM_VERDICT_BELOW_THEOREM_RANGE;
        r.congruence_holds = v.congruence_holds ? 1 : 0;
        const auto &w = v.witness ? v.witness : v.conjectural_witness;
        if (w) {
            r.epsilon = w->epsilon;
            r.epsilon_prime = w->epsilon_prime.value_or(0);
            r.branch = w->branch == WitnessBranch::plain ? HM_BRANCH_PLAIN : HM_BRANCH_SHIFTED;
        } else {
            r.branch = HM_BRANCH_NONE;
        }
        *out = r;
    });
}

HM_API hm_status hm_classify_json(hm_triangle tri, unsigned long p, char **out)
{
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = duplicate(to_json(theorem_classifier(to_triangle(tri), p)).dump());
    });
}

HM_API hm_status hm_hecke(unsigned n, unsigned long p, int *integral)
{
    return guard([&] {
        require(integral != nullptr, "null argument");
        *integral = hecke_classifier(n, p) ? 1 : 0;
    });
}

HM_API hm_status hm_almost_integral(hm_triangle tri, int *out)
{
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = almost_integral(to_triangle(tri)) ? 1 : 0;
    });
}

HM_API hm_status hm_takeuchi(unsigned bound, hm_triangle *out, size_t capacity, size_t *count)
{
    return guard([&] {
        require(count != nullptr && (out != nullptr || capacity == 0), "null argument");
        const auto scan = takeuchi_scan(bound);
        *count = scan.types.size();
        for (std::size_t i = 0; i < scan.types.size() && i < capacity; ++i) {
            out[i] = from_triangle(scan.types[i]);
        }
    });
}

HM_API hm_status hm_takeuchi_json(unsigned bound, char **out)
{
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = duplicate(to_json(takeuchi_scan(bound)).dump());
    });
}

HM_API hm_status hm_dwork_map(const char *x, unsigned long p, char **image, unsigned long *digit)
{
    return guard([&] {
        require(x != nullptr && image != nullptr && digit != nullptr, "null argument");
        const auto d = dwork_map(parse_rational(x), p);
        *image = duplicate(to_string(d.image));
        *digit = d.digit;
    });
}

HM_API hm_status hm_empirical(hm_triangle tri, unsigned long p, unsigned order, hm_report **out)
{
    return guard([&] {
        require(out != nullptr, "null argument");
        auto v = empirical_integrality(to_triangle(tri), p, order);
        auto json = to_json(v);
        *out = new hm_report{std::move(json), v.classification == Evidence::integral_evidence, std::move(v)};
    });
}

HM_API hm_status hm_verify(const char *suite, hm_triangle tri, unsigned long p, unsigned order, int long_tests,
                           hm_report **out)
{
    return guard([&] {
        require(suite != nullptr && out != nullptr, "null argument");
        SuiteConfig config;
        if (tri.m1 != 0) {
            config.triangle = to_triangle(tri);
        }
        if (p != 0) {
            config.prime = p;
        }
        config.order = order;
        config.long_tests = long_tests != 0;
        const auto report = run_suite(suite, config);
        *out = new hm_report{report.to_json(), report.passed(), std::nullopt};
    });
}

HM_API const char *hm_suite_names(void)
{
    static const std::string joined = [] {
        std::string s;
        for (const auto &n : suite_names()) {
            s += (s.empty() ? "" : ",") + n;
        }
        return s;
    }();
    return joined.c_str();
}

HM_API int hm_report_passed(const hm_report *r)
{
    return r != nullptr && r->passed ? 1 : 0;
}

HM_API hm_status hm_report_to_json(const hm_report *r, char **out)
{
    return guard([&] {
        require(r != nullptr && out != nullptr, "null argument");
        *out = duplicate(r->json.dump());
    });
}

HM_API hm_status hm_report_to_csv(const hm_report *r, char **out)
{
    return guard([&] {
        require(r != nullptr && out != nullptr, "null argument");
        require(r->empirical.has_value(), "CSV rows exist only for empirical reports");
        *out = duplicate(to_csv_row(*r->empirical));
    });
}

HM_API const char *hm_csv_header(void)
{
    static const std::string header = csv_header();
    return header.c_str();
}

HM_API void hm_report_free(hm_report *r)
{
    delete r;
}

} // extern "C"
