#include "hauptmodul/serialize.hpp"

#include "hauptmodul/error.hpp"

namespace hauptmodul
{

Json to_json(const Valuation &v)
{
    return v ? Json(*v) : Json(nullptr);
}

namespace
{

Json rationals(std::span<const Rational> coeffs)
{
    Json out = Json::array();
    for (const auto &c : coeffs) {
        out.push_back(to_string(c));
    }
    return out;
}

std::vector<Rational> parse_rationals(const Json &j)
{
    if (!j.is_array()) {
        raise(ErrorCode::parse_error, "series coefficients must be an array of \"num/den\" strings");
    }
    std::vector<Rational> out;
    for (const auto &c : j) {
        if (!c.is_string()) {
            raise(ErrorCode::parse_error, "series coefficient is not a string");
        }
        out.push_back(parse_rational(c.get<std::string>()));
    }
    return out;
}

Json optional_index(const std::optional<long> &i)
{
    return i ? Json(*i) : Json(nullptr);
}

} // namespace

Json to_json(const TruncatedSeries &s)
{
    return Json{{"truncation", s.order()}, {"coefficients", rationals(s.coefficients())}};
}

Json to_json(const LaurentSeries &s)
{
    return Json{{"lowestExponent", s.lowest_exponent()},
                {"truncation", s.order()},
                {"coefficients", rationals(s.coefficients())}};
}

TruncatedSeries truncated_series_from_json(const Json &j)
{
    try {
        return TruncatedSeries(parse_rationals(j.at("coefficients")), j.at("truncation").get<std::size_t>());
    } catch (const Json::exception &e) {
        raise(ErrorCode::parse_error, std::string("bad series JSON: ") + e.what());
    }
}

LaurentSeries laurent_series_from_json(const Json &j)
{
    try {
        return LaurentSeries(j.at("lowestExponent").get<long>(), parse_rationals(j.at("coefficients")),
                             j.at("truncation").get<long>());
    } catch (const Json::exception &e) {
        raise(ErrorCode::parse_error, std::string("bad Laurent series JSON: ") + e.what());
    }
}

Json to_json(const ValuationProfile &profile)
{
    Json entries = Json::array();
    for (const auto &v : profile.entries) {
        entries.push_back(to_json(v));
    }
    return Json{{"prime", profile.prime},
                {"firstExponent", profile.first_exponent},
                {"entries", std::move(entries)},
                {"minValuation", to_json(profile.min_valuation)}};
}

Json to_json(const CongruenceWitness &w)
{
    return Json{{"epsilon", w.epsilon},
                {"epsilonPrime", w.epsilon_prime ? Json(*w.epsilon_prime) : Json(nullptr)},
                {"branch", branch_name(w.branch)}};
}

Json to_json(const IntegralityVerdict &v)
{
    Json j{{"type", v.triangle.label()},
           {"p", v.prime},
           {"verdict", verdict_name(v.verdict)},
           {"congruenceHolds", v.congruence_holds},
           {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
    if (v.verdict == Verdict::below_theorem_range) {
        j["conjectural"] = true;
        j["conjecturalWitness"] = v.conjectural_witness ? to_json(*v.conjectural_witness) : Json(nullptr);
    }
    return j;
}

Json to_json(const EmpiricalVerdict &v)
{
    return Json{{"type", v.triangle.label()},
                {"p", v.prime},
                {"N", v.order},
                {"subject", v.subject},
                {"verdict", evidence_name(v.classification)},
                {"firstNegativeIndex", optional_index(v.first_negative_index)},
                {"minValuation", to_json(v.profile.min_valuation)},
                {"rawMinValuation", to_json(v.raw_min_valuation)}};
}

Json to_json(const CongruenceReport &r)
{
    Json failures = Json::array();
    for (const auto &f : r.failures) {
        failures.push_back(Json{{"index", f.index}, {"valuation", to_json(f.found)}, {"required", f.required}});
    }
    return Json{{"description", r.description},
                {"p", r.prime},
                {"N", r.order},
                {"holds", r.holds()},
                {"failures", std::move(failures)}};
}

Json to_json(const DieudonneReport &r)
{
    return Json{{"expIntegrality", to_json(r.exp_integrality)},
                {"congruence", to_json(r.congruence)},
                {"agree", r.agree()}};
}

Json to_json(const TakeuchiScan &scan)
{
    Json types = Json::array();
    for (const auto &t : scan.types) {
        types.push_back(t.label());
    }
    Json excluded = Json::array();
    for (const auto &e : scan.excluded_orders) {
        excluded.push_back(Json{{"m", e.m}, {"failingResidue", e.residue}});
    }
    return Json{{"bound", scan.bound}, {"types", std::move(types)}, {"excludedOrders", std::move(excluded)}};
}

Json to_json(const LemmaTwoResult &r)
{
    return Json{{"p", r.prime},
                {"tuplesChecked", r.tuples_checked},
                {"holds", r.holds()},
                {"counterexamples", r.counterexamples}};
}

Json to_json(const DworkImage &d)
{
    return Json{{"x", to_string(d.input)}, {"p", d.prime}, {"image", to_string(d.image)}, {"digit", d.digit}};
}

std::string csv_header()
{
    return "type,p,N,verdict,firstNegativeIndex,minValuation";
}

std::string to_csv_row(const EmpiricalVerdict &v)
{
    auto opt = [](const auto &x) { return x ? std::to_string(*x) : std::string(); };
    return "\"" + v.triangle.label() + "\"," + std::to_string(v.prime) + "," + std::to_string(v.order) + "," +
           evidence_name(v.classification) + "," + opt(v.first_negative_index) + "," + opt(v.profile.min_valuation);
}

} // namespace hauptmodul
