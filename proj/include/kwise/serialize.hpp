#pragma once

#include <string>

#include "json.hpp"
#include "kwise/distinguish.hpp"
#include "kwise/gaussmix.hpp"
#include "kwise/krawtchouk.hpp"
#include "kwise/lp.hpp"
#include "kwise/transform.hpp"
#include "kwise/weight_pmf.hpp"

namespace kwise {

using Json = nlohmann::ordered_json;

/// {"n": n, "pmf": [{"w": w, "p": "num/den"}, ...]}, weights increasing.
Json to_json(const WeightPmf& p);
/// Inverse of to_json; validates every invariant. Throws ErrorCode::parse.
WeightPmf pmf_from_json(const Json& j);
WeightPmf pmf_from_string(const std::string& text);

Json to_json(const BiasProfile& b);
/// {"coeffs": ["num/den", ...]}, constant term first.
Json to_json(const RationalPoly& p);
Json to_json(const LpSolution& s);
Json to_json(const BiasCertificate& c);
Json to_json(const SeparationReport& r);
Json to_json(const ParamSet& p);

namespace gaussmix {
Json to_json(const GaussMixture& m);
Json to_json(const FitResult& f);
Json to_json(const InverseEntryReport& r);
Json to_json(const PowerCountReport& r);
Json to_json(const QuotientReport& r);
Json to_json(const CheckResult& r);
Json to_json(const SeriesCheck& r);
}  // namespace gaussmix

}  // namespace kwise
