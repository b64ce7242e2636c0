#ifndef HAUPTMODUL_SERIALIZE_HPP
#define HAUPTMODUL_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "hauptmodul/dwork.hpp"
#include "hauptmodul/lab.hpp"
#include "hauptmodul/series.hpp"

namespace hauptmodul
{

using Json = nlohmann::json;

// Integer or null for +infinity.
Json to_json(const Valuation &v);

// {"truncation": N, "coefficients": ["num/den", ...]}
Json to_json(const TruncatedSeries &s);
// {"lowestExponent": l, "truncation": N, "coefficients": [...]}
Json to_json(const LaurentSeries &s);
TruncatedSeries truncated_series_from_json(const Json &j);
LaurentSeries laurent_series_from_json(const Json &j);

// {"prime", "firstExponent", "entries": [int|null, ...], "minValuation"}
Json to_json(const ValuationProfile &profile);

Json to_json(const CongruenceWitness &w);
Json to_json(const IntegralityVerdict &v);
// Record {type, p, N, verdict, firstNegativeIndex, minValuation} plus the
// subject series and the raw (unnormalized) minimum valuation.
Json to_json(const EmpiricalVerdict &v);
Json to_json(const CongruenceReport &r);
Json to_json(const DieudonneReport &r);
Json to_json(const TakeuchiScan &scan);
Json to_json(const LemmaTwoResult &r);
Json to_json(const DworkImage &d);

// Columns: type, p, N, verdict, firstNegativeIndex, minValuation.
std::string csv_header();
std::string to_csv_row(const EmpiricalVerdict &v);

} // namespace hauptmodul

#endif
