// Command-line front end. Talks to the library exclusively through the C API.

#include <algorithm>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hauptmodul/hauptmodul.h"

namespace
{

using Json = nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;
constexpr unsigned long_order_threshold = 120;

// Raised for anything that should end the run with exit_usage.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(hm_status status)
{
    if (status != HM_OK) {
        throw UsageError(std::string(hm_status_name(status)) + ": " + hm_last_error());
    }
}

std::string take_string(char *s)
{
    std::string out(s);
    hm_string_free(s);
    return out;
}

struct SeriesDeleter {
    void operator()(hm_series *s) const
    {
        hm_series_free(s);
    }
};
struct ReportDeleter {
    void operator()(hm_report *r) const
    {
        hm_report_free(r);
    }
};
using SeriesPtr = std::unique_ptr<hm_series, SeriesDeleter>;
using ReportPtr = std::unique_ptr<hm_report, ReportDeleter>;

hm_triangle parse_type(const std::string &text)
{
    hm_triangle tri{};
    check(hm_triangle_parse(text.c_str(), &tri));
    return tri;
}

std::string type_label(hm_triangle tri)
{
    return "(" + std::to_string(tri.m1) + "," + (tri.m2 == HM_INFINITY ? "inf" : std::to_string(tri.m2)) + ",inf)";
}

bool type_less(hm_triangle x, hm_triangle y)
{
    if (x.m1 != y.m1) {
        return x.m1 < y.m1;
    }
    const unsigned long mx = x.m2 == HM_INFINITY ? ~0ul : x.m2;
    const unsigned long my = y.m2 == HM_INFINITY ? ~0ul : y.m2;
    return mx < my;
}

std::vector<hm_triangle> parse_types(const std::vector<std::string> &specs)
{
    std::vector<hm_triangle> out;
    for (const auto &s : specs) {
        out.push_back(parse_type(s));
    }
    std::sort(out.begin(), out.end(), type_less);
    return out;
}

bool is_prime(unsigned long n)
{
    if (n < 2) {
        return false;
    }
    for (unsigned long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// "lo..hi" inclusive, filtered by primality.
std::vector<unsigned long> parse_prime_range(const std::string &text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw UsageError("prime range must look like lo..hi, got '" + text + "'");
    }
    unsigned long lo = 0;
    unsigned long hi = 0;
    try {
        lo = std::stoul(text.substr(0, dots));
        hi = std::stoul(text.substr(dots + 2));
    } catch (const std::exception &) {
        throw UsageError("prime range must look like lo..hi, got '" + text + "'");
    }
    std::vector<unsigned long> primes;
    for (unsigned long n = lo; n <= hi; ++n) {
        if (is_prime(n)) {
            primes.push_back(n);
        }
    }
    return primes;
}

std::vector<unsigned long> collect_primes(const std::optional<unsigned long> &p, const std::string &range)
{
    std::vector<unsigned long> primes;
    if (p) {
        primes.push_back(*p);
    }
    if (!range.empty()) {
        const auto more = parse_prime_range(range);
        primes.insert(primes.end(), more.begin(), more.end());
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

// Runs cells concurrently; results come back in input order.
template <typename T>
std::vector<T> run_cells(const std::vector<std::function<T()>> &cells)
{
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    std::vector<T> results;
    results.reserve(cells.size());
    for (std::size_t start = 0; start < cells.size(); start += width) {
        std::vector<std::future<T>> batch;
        for (std::size_t i = start; i < std::min(cells.size(), start + width); ++i) {
            batch.push_back(std::async(std::launch::async, cells[i]));
        }
        for (auto &f : batch) {
            results.push_back(f.get());
        }
    }
    return results;
}

std::string format_term(const std::string &coeff, long exponent, bool first)
{
    const bool negative = !coeff.empty() && coeff[0] == '-';
    std::string magnitude = negative ? coeff.substr(1) : coeff;
    if (magnitude.size() > 2 && magnitude.compare(magnitude.size() - 2, 2, "/1") == 0) {
        magnitude.resize(magnitude.size() - 2);
    }
    std::string body;
    if (exponent == 0) {
        body = magnitude;
    } else {
        if (magnitude != "1") {
            body = magnitude.find('/') != std::string::npos ? "(" + magnitude + ")" : magnitude;
        }
        body += "q";
        if (exponent != 1) {
            body += "^" + std::to_string(exponent);
        }
    }
    if (first) {
        return (negative ? "-" : "") + body;
    }
    return (negative ? " - " : " + ") + body;
}

std::string pretty_series(const Json &j)
{
    const long lowest = j.value("lowestExponent", 0L);
    const long truncation = j.at("truncation").get<long>();
    std::string out;
    long e = lowest;
    for (const auto &c : j.at("coefficients")) {
        const auto s = c.get<std::string>();
        if (s != "0/1") {
            out += format_term(s, e, out.empty());
        }
        ++e;
    }
    if (out.empty()) {
        out = "0";
    }
    const long next = truncation + 1;
    out += " + O(q" + (next == 1 ? std::string() : "^" + std::to_string(next)) + ")";
    return out;
}

struct Options {
    std::vector<std::string> types;
    std::string series = "J";
    unsigned order = 120;
    bool order_given = false;
    std::string format;
    std::optional<unsigned long> prime;
    std::string primes;
    std::string suite;
    unsigned bound = 60;
    unsigned hecke_n = 0;
    std::string x;
    bool long_tests = false;
};

int cmd_expand(const Options &o)
{
    if (o.types.size() != 1) {
        throw UsageError("expand needs exactly one --type");
    }
    const hm_triangle tri = parse_type(o.types.front());
    if (hm_is_unlisted_generator(tri, o.series.c_str())) {
        std::cerr << "warning: " << o.series << " is not among the listed generators for " << type_label(tri)
                  << "\n";
    }
    hm_series *raw = nullptr;
    check(hm_expand(tri, o.series.c_str(), o.order, &raw));
    SeriesPtr series(raw);
    char *json = nullptr;
    check(hm_series_to_json(series.get(), &json));
    Json j = Json::parse(take_string(json));
    if (o.format == "json") {
        j["type"] = type_label(tri);
        j["series"] = o.series;
        std::cout << j.dump() << "\n";
    } else if (o.format == "pretty" || o.format.empty()) {
        std::cout << o.series << " " << type_label(tri) << " = " << pretty_series(j) << "\n";
    } else {
        throw UsageError("expand supports --format json|pretty");
    }
    return exit_ok;
}

int cmd_classify(const Options &o)
{
    const auto types = parse_types(o.types);
    const auto primes = collect_primes(o.prime, o.primes);
    if (types.empty() || primes.empty()) {
        throw UsageError("classify needs --type and --p or --primes");
    }
    Json rows = Json::array();
    for (const auto &tri : types) {
        for (unsigned long p : primes) {
            char *json = nullptr;
            const hm_status status = hm_classify_json(tri, p, &json);
            if (status == HM_ERR_SHARED_FACTOR) {
                continue; // primes dividing 2 m1 m2 are outside the classifier's domain
            }
            check(status);
            rows.push_back(Json::parse(take_string(json)));
        }
    }
    if (o.format == "json" || o.format.empty()) {
        std::cout << rows.dump() << "\n";
    } else if (o.format == "csv") {
        std::cout << "type,p,verdict,congruenceHolds,epsilon,epsilonPrime,branch\n";
        for (const auto &r : rows) {
            const Json &w = r["witness"].is_null() ? r.value("conjecturalWitness", Json()) : r["witness"];
            std::cout << "\"" << r["type"].get<std::string>() << "\"," << r["p"] << "," << r["verdict"].get<std::string>()
                      << "," << (r["congruenceHolds"].get<bool>() ? "true" : "false") << ","
                      << (w.is_null() ? "" : w["epsilon"].dump()) << ","
                      << (w.is_null() || w["epsilonPrime"].is_null() ? "" : w["epsilonPrime"].dump()) << ","
                      << (w.is_null() ? "" : w["branch"].get<std::string>()) << "\n";
        }
    } else if (o.format == "pretty") {
        for (const auto &r : rows) {
            std::cout << r["type"].get<std::string>() << " p=" << r["p"] << ": " << r["verdict"].get<std::string>();
            const Json &w = r["witness"].is_null() ? r.value("conjecturalWitness", Json()) : r["witness"];
            if (!w.is_null()) {
                std::cout << " (eps=" << w["epsilon"];
                if (!w["epsilonPrime"].is_null()) {
                    std::cout << ", eps'=" << w["epsilonPrime"];
                }
                std::cout << ", " << w["branch"].get<std::string>() << ")";
            }
            if (r.contains("conjectural")) {
                std::cout << " [conjectural: congruences " << (r["congruenceHolds"].get<bool>() ? "hold" : "fail")
                          << "]";
            }
            std::cout << "\n";
        }
    } else {
        throw UsageError("classify supports --format json|csv|pretty");
    }
    return exit_ok;
}

void require_long(const Options &o, unsigned order)
{
    if (order > long_order_threshold && !o.long_tests) {
        throw UsageError("N > " + std::to_string(long_order_threshold) + " is a long run; pass --long");
    }
}

int cmd_empirical(const Options &o)
{
    const auto types = parse_types(o.types);
    const auto primes = collect_primes(o.prime, o.primes);
    const unsigned order = o.order_given ? o.order : 60;
    require_long(o, order);
    if (types.empty() || primes.empty()) {
        throw UsageError("empirical needs --type and --p or --primes");
    }
    struct Cell {
        hm_status status;
        std::string error;
        std::string json;
        std::string csv;
    };
    std::vector<std::function<Cell()>> cells;
    for (const auto &tri : types) {
        for (unsigned long p : primes) {
            cells.push_back([tri, p, order]() {
                hm_report *raw = nullptr;
                const hm_status status = hm_empirical(tri, p, order, &raw);
                if (status != HM_OK) {
                    return Cell{status, hm_last_error(), {}, {}};
                }
                ReportPtr report(raw);
                char *json = nullptr;
                char *csv = nullptr;
                hm_report_to_json(report.get(), &json);
                hm_report_to_csv(report.get(), &csv);
                return Cell{HM_OK, {}, take_string(json), take_string(csv)};
            });
        }
    }
    Json rows = Json::array();
    std::vector<std::string> csv_rows;
    for (auto &cell : run_cells(cells)) {
        if (cell.status == HM_ERR_SHARED_FACTOR) {
            continue;
        }
        if (cell.status != HM_OK) {
            throw UsageError(std::string(hm_status_name(cell.status)) + ": " + cell.error);
        }
        rows.push_back(Json::parse(cell.json));
        csv_rows.push_back(cell.csv);
    }
    if (o.format == "csv") {
        std::cout << hm_csv_header() << "\n";
        for (const auto &r : csv_rows) {
            std::cout << r << "\n";
        }
    } else if (o.format == "pretty") {
        for (const auto &r : rows) {
            std::cout << r["type"].get<std::string>() << " p=" << r["p"] << " N=" << r["N"] << ": "
                      << r["verdict"].get<std::string>();
            if (!r["firstNegativeIndex"].is_null()) {
                std::cout << " (first negative valuation at z^" << r["firstNegativeIndex"] << ")";
            }
            std::cout << "\n";
        }
    } else if (o.format == "json" || o.format.empty()) {
        std::cout << rows.dump() << "\n";
    } else {
        throw UsageError("empirical supports --format json|csv|pretty");
    }
    return exit_ok;
}

int cmd_verify(const Options &o)
{
    if (o.suite.empty()) {
        throw UsageError(std::string("verify needs --suite, one of: ") + hm_suite_names());
    }
    const unsigned order = o.order_given ? o.order : 60;
    require_long(o, order);
    auto types = parse_types(o.types);
    auto primes = collect_primes(o.prime, o.primes);
    if (types.empty()) {
        types.push_back(hm_triangle{0, 0});
    }
    const bool prime_optional = primes.empty();
    if (prime_optional) {
        primes.push_back(0);
    }

    struct Cell {
        hm_status status;
        std::string error;
        bool passed;
        std::string json;
    };
    std::vector<std::function<Cell()>> cells;
    for (const auto &tri : types) {
        for (unsigned long p : primes) {
            cells.push_back([&o, tri, p, order]() {
                hm_report *raw = nullptr;
                const hm_status status = hm_verify(o.suite.c_str(), tri, p, order, o.long_tests ? 1 : 0, &raw);
                if (status != HM_OK) {
                    return Cell{status, hm_last_error(), false, {}};
                }
                ReportPtr report(raw);
                char *json = nullptr;
                hm_report_to_json(report.get(), &json);
                return Cell{HM_OK, {}, hm_report_passed(report.get()) != 0, take_string(json)};
            });
        }
    }
    Json reports = Json::array();
    bool all_passed = true;
    for (auto &cell : run_cells(cells)) {
        if (cell.status == HM_ERR_SHARED_FACTOR && !prime_optional && primes.size() > 1) {
            continue;
        }
        if (cell.status != HM_OK) {
            throw UsageError(std::string(hm_status_name(cell.status)) + ": " + cell.error);
        }
        all_passed = all_passed && cell.passed;
        reports.push_back(Json::parse(cell.json));
    }
    if (o.format == "pretty") {
        for (const auto &r : reports) {
            for (const auto &c : r["cells"]) {
                std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << r["suite"].get<std::string>() << " "
                          << c["label"].get<std::string>() << "\n";
            }
        }
    } else if (o.format == "json" || o.format.empty()) {
        std::cout << Json{{"passed", all_passed}, {"reports", reports}}.dump() << "\n";
    } else {
        throw UsageError("verify supports --format json|pretty");
    }
    if (!all_passed) {
        std::cerr << "VerificationFailure: at least one cell failed\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_takeuchi(const Options &o)
{
    char *json = nullptr;
    check(hm_takeuchi_json(o.bound, &json));
    const Json scan = Json::parse(take_string(json));
    const std::vector<std::string> expected = {"(2,3,inf)", "(2,4,inf)", "(2,6,inf)", "(2,inf,inf)",
                                               "(3,3,inf)", "(3,inf,inf)", "(4,4,inf)", "(6,6,inf)"};
    const auto found = scan["types"].get<std::vector<std::string>>();
    const bool matches = found == expected;
    if (o.format == "pretty") {
        for (const auto &t : found) {
            std::cout << t << "\n";
        }
    } else {
        Json out = scan;
        out["matchesClassification"] = matches;
        std::cout << out.dump() << "\n";
    }
    if (!matches) {
        std::cerr << "VerificationFailure: almost-integral list differs from the arithmetic (Takeuchi) list\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_hecke(const Options &o)
{
    const auto primes = collect_primes(o.prime, o.primes);
    if (o.hecke_n < 3 || primes.empty()) {
        throw UsageError("hecke needs --n >= 3 and --p or --primes");
    }
    Json rows = Json::array();
    for (unsigned long p : primes) {
        int integral = 0;
        const hm_status status = hm_hecke(o.hecke_n, p, &integral);
        if (status == HM_ERR_SHARED_FACTOR) {
            continue;
        }
        check(status);
        rows.push_back(Json{{"n", o.hecke_n}, {"p", p}, {"integral", integral != 0}});
    }
    std::cout << rows.dump() << "\n";
    return exit_ok;
}

int cmd_dwork(const Options &o)
{
    if (o.x.empty() || !o.prime) {
        throw UsageError("dwork needs --x and --p");
    }
    char *image = nullptr;
    unsigned long digit = 0;
    check(hm_dwork_map(o.x.c_str(), *o.prime, &image, &digit));
    std::cout << Json{{"x", o.x}, {"p", *o.prime}, {"image", take_string(image)}, {"digit", digit}}.dump() << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"q-expansions and p-integrality for triangle groups (m1, m2, inf)"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&o](CLI::App *cmd) { cmd->add_option("--format", o.format, "json | csv | pretty"); };
    auto add_order = [&o](CLI::App *cmd) {
        cmd->add_option_function<unsigned>(
            "-N,--N", [&o](unsigned n) { o.order = n, o.order_given = true; }, "truncation order");
    };
    auto add_primes = [&o](CLI::App *cmd) {
        cmd->add_option_function<unsigned long>(
            "--p", [&o](unsigned long p) { o.prime = p; }, "a single prime");
        cmd->add_option("--primes", o.primes, "inclusive range lo..hi, filtered by primality");
    };

    auto *expand = app.add_subcommand("expand", "print a q-expansion with exact coefficients");
    expand->add_option("--type", o.types, "triangle type m1,m2 (m2 may be inf)")->required();
    expand->add_option("--series", o.series, "t1 t2 t3 J Jhyp E1_<2k> E2_<2k> F G D qmap zmap");
    add_order(expand);
    add_format(expand);

    auto *classify = app.add_subcommand("classify", "congruence classifier for p-integrality of J");
    classify->add_option("--type", o.types, "triangle type(s)")->required();
    add_primes(classify);
    add_format(classify);

    auto *empirical = app.add_subcommand("empirical", "valuations of the mirror map q(a,b|z)");
    empirical->add_option("--type", o.types, "triangle type(s)")->required();
    add_primes(empirical);
    add_order(empirical);
    add_format(empirical);
    empirical->add_flag("--long", o.long_tests, "allow N above 120");

    auto *verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite, hm_suite_names())->required();
    verify->add_option("--type", o.types, "triangle type(s)");
    add_primes(verify);
    add_order(verify);
    add_format(verify);
    verify->add_flag("--long", o.long_tests, "enable long runs (N above 120, remark183)");

    auto *takeuchi = app.add_subcommand("takeuchi", "scan for almost-integral types");
    takeuchi->add_option("--bound", o.bound, "largest finite m to scan (>= 6)");
    add_format(takeuchi);

    auto *hecke = app.add_subcommand("hecke", "Hecke group (2,n,inf) criterion");
    hecke->add_option("--n", o.hecke_n, "n >= 3")->required();
    add_primes(hecke);

    auto *dwork = app.add_subcommand("dwork", "Dwork map of a rational");
    dwork->add_option("--x", o.x, "num/den")->required();
    add_primes(dwork);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*expand) {
            return cmd_expand(o);
        }
        if (*classify) {
            return cmd_classify(o);
        }
        if (*empirical) {
            return cmd_empirical(o);
        }
        if (*verify) {
            return cmd_verify(o);
        }
        if (*takeuchi) {
            return cmd_takeuchi(o);
        }
        if (*hecke) {
            return cmd_hecke(o);
        }
        if (*dwork) {
            return cmd_dwork(o);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
