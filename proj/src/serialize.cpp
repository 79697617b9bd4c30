#include "kwise/serialize.hpp"

namespace kwise {

namespace {

Json real_json(const Real& x) { return to_decimal(x, 17); }

template <class T>
Json matrix_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const WeightPmf& p) {
  Json pmf = Json::array();
  for (const auto& [w, mass] : p.masses()) pmf.push_back({{"w", w}, {"p", to_string(mass)}});
  return {{"n", p.n()}, {"pmf", std::move(pmf)}};
}

WeightPmf pmf_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("pmf")) fail(ErrorCode::parse, "PMF record needs \"n\" and \"pmf\"");
    const int n = j.at("n").get<int>();
    std::map<int, Rational> masses;
    for (const auto& entry : j.at("pmf")) {
      const int w = entry.at("w").get<int>();
      const auto& p = entry.at("p");
      const Rational mass = p.is_string() ? parse_rational(p.get<std::string>()) : Rational(p.get<long long>());
      if (!masses.emplace(w, mass).second) fail(ErrorCode::parse, "duplicate weight in PMF record");
    }
    return WeightPmf(n, std::move(masses));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("malformed PMF record: ") + e.what());
  }
}

WeightPmf pmf_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("invalid JSON: ") + e.what());
  }
  return pmf_from_json(j);
}

Json to_json(const BiasProfile& b) {
  Json bias = Json::array();
  for (const auto& x : b.biases) bias.push_back(to_string(x));
  return {{"n", b.n}, {"bias", std::move(bias)}};
}

Json to_json(const RationalPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return {{"coeffs", std::move(coeffs)}};
}

Json to_json(const LpSolution& s) {
  Json j{{"status", to_string(s.status)}};
  if (s.status != LpStatus::optimal) return j;
  j["value"] = to_string(s.value);
  j["primal"] = s.primal ? to_json(*s.primal) : Json(nullptr);
  if (s.dual) j["dual"] = to_json(*s.dual);
  return j;
}

Json to_json(const BiasCertificate& c) {
  Json rows = Json::array();
  for (const auto& r : c.rows) {
    Json row{{"ell", r.ell}, {"bias", to_string(r.bias)}, {"case", r.case_id}, {"bound", to_decimal(r.bound, 17)}};
    if (r.chain_bound) row["chain_bound"] = to_decimal(*r.chain_bound, 17);
    row["pass"] = r.pass;
    rows.push_back(std::move(row));
  }
  return {{"n", c.n}, {"k", c.k}, {"all_pass", c.all_pass()}, {"rows", std::move(rows)}};
}

Json to_json(const ParamSet& p) {
  Json j = Json::object();
  auto put_int = [&](const char* key, const std::optional<int>& v) {
    if (v) j[key] = *v;
  };
  auto put_rat = [&](const char* key, const std::optional<Rational>& v) {
    if (v) j[key] = to_string(*v);
  };
  auto put_real = [&](const char* key, const std::optional<Real>& v) {
    if (v) j[key] = to_decimal(*v, 17);
  };
  put_int("n", p.n);
  put_int("k", p.k);
  put_int("k_prime", p.k_prime);
  put_int("t", p.t);
  put_int("t_prime", p.t_prime);
  put_int("a", p.a);
  put_int("b", p.b);
  put_int("m", p.m);
  put_rat("rho", p.rho);
  put_rat("eps", p.eps);
  put_rat("delta", p.delta);
  put_real("theta", p.theta);
  put_real("sigma2", p.sigma2);
  put_real("alpha", p.alpha);
  put_rat("q", p.q);
  put_real("d_half", p.d_half);
  put_real("L", p.erdelyi_l);
  put_real("c", p.c);
  put_real("beta", p.beta);
  return j;
}

Json to_json(const SeparationReport& r) {
  Json j{{"scenario", to_string(r.scenario)}, {"params", to_json(r.params)}, {"t", r.t}};
  if (r.interval) j["interval"] = {r.interval->first, r.interval->second};
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["advantage"] = to_string(r.advantage);
  j["template"] = real_json(r.template_value);
  Json notes = Json::object();
  for (const auto& [key, value] : r.notes) notes[key] = value;
  j["notes"] = std::move(notes);
  return j;
}

namespace gaussmix {

Json to_json(const GaussMixture& m) {
  Json means = Json::array();
  Json weights = Json::array();
  for (const auto& x : m.means) means.push_back(real_json(x));
  for (const auto& x : m.weights) weights.push_back(real_json(x));
  return {{"k", m.k()}, {"means", std::move(means)}, {"weights", std::move(weights)}, {"variance", real_json(m.variance)}};
}

Json to_json(const FitResult& f) {
  return {{"mixture", to_json(f.mixture)}, {"distance", real_json(f.distance)}, {"budget_exhausted", f.budget_exhausted}};
}

Json to_json(const InverseEntryReport& r) {
  return {{"k", r.k},
          {"q", kwise::to_string(r.q)},
          {"inverse", matrix_json(r.inverse)},
          {"bound", matrix_json(r.bound)},
          {"worst_ratio", kwise::to_string(r.worst_ratio)},
          {"pass", r.pass}};
}

Json to_json(const PowerCountReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"i", e.i},
                       {"j", e.j},
                       {"shift", e.value.shift},
                       {"poly", kwise::to_json(e.value.poly)},
                       {"expected_count", e.expected_count.str()},
                       {"coefficient_sum", e.coefficient_sum.str()},
                       {"pass", e.pass}});
  }
  return {{"k", r.k}, {"pass", r.pass}, {"entries", std::move(entries)}};
}

Json to_json(const QuotientReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"i", e.i},
                       {"j", e.j},
                       {"quotient", kwise::to_string(e.quotient)},
                       {"elementary", kwise::to_string(e.elementary)},
                       {"pass", e.pass}});
  }
  return {{"pass", r.pass}, {"entries", std::move(entries)}};
}

Json to_json(const CheckResult& r) {
  return {{"hypothesis_ok", r.hypothesis_ok}, {"conclusion_ok", r.conclusion_ok}, {"pass", r.pass()}, {"detail", r.detail}};
}

Json to_json(const SeriesCheck& r) {
  return {{"terms", r.terms},
          {"partial_product", real_json(r.partial_product)},
          {"lower", real_json(r.lower)},
          {"exp_bound", real_json(r.exp_bound)},
          {"pass", r.pass}};
}

}  // namespace gaussmix

}  // namespace kwise
