#include "kwise/kwise.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kwise/analytic.hpp"
#include "kwise/distinguish.hpp"
#include "kwise/gaussmix.hpp"
#include "kwise/krawtchouk.hpp"
#include "kwise/lp.hpp"
#include "kwise/noise.hpp"
#include "kwise/serialize.hpp"
#include "kwise/transform.hpp"
#include "kwise/weight_pmf.hpp"
#include "verify/verify.hpp"

struct kw_pmf {
  kwise::WeightPmf value;
};

struct kw_lp_solution {
  kwise::LpSolution value;
};

namespace {

using kwise::ErrorCode;
using kwise::Json;
using kwise::Rational;
using kwise::Real;

thread_local std::string last_error;

kw_status set_error(kw_status code, const std::string& what) {
  last_error = what;
  return code;
}

template <class F>
kw_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return KW_OK;
  } catch (const kwise::Error& e) {
    return set_error(static_cast<kw_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(KW_PARSE, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(KW_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(KW_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(KW_INTERNAL, e.what());
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) kwise::fail(ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put_string(char** out, const std::string& s) {
  need(out, "output");
  *out = dup_string(s);
}

void put_json(char** out, const Json& j) { put_string(out, j.dump()); }

void put_pmf(kw_pmf** out, kwise::WeightPmf p) {
  need(out, "output");
  *out = new kw_pmf{std::move(p)};
}

Json parse_params(const char* text) {
  if (text == nullptr || *text == '\0') return Json::object();
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    kwise::fail(ErrorCode::parse, std::string("invalid JSON parameters: ") + e.what());
  }
  if (!j.is_object()) kwise::fail(ErrorCode::parse, "parameters must be a JSON object");
  return j;
}

Rational rational_of(const Json& v) {
  if (v.is_string()) return kwise::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  kwise::fail(ErrorCode::parse, "expected a rational as a string or integer");
}

Real real_of(const Json& v) {
  if (v.is_number()) return Real(v.get<double>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find('/') != std::string::npos) return kwise::to_real(kwise::parse_rational(s));
    try {
      return Real(s);
    } catch (const std::exception&) {
      kwise::fail(ErrorCode::parse, "not a number: " + s);
    }
  }
  kwise::fail(ErrorCode::parse, "expected a number");
}

int int_at(const Json& j, const char* key) {
  if (!j.contains(key)) kwise::fail(ErrorCode::invalid_argument, std::string("missing parameter ") + key);
  return j.at(key).get<int>();
}

int int_or(const Json& j, const char* key, int fallback) { return j.contains(key) ? j.at(key).get<int>() : fallback; }

Rational rational_at(const Json& j, const char* key) {
  if (!j.contains(key)) kwise::fail(ErrorCode::invalid_argument, std::string("missing parameter ") + key);
  return rational_of(j.at(key));
}

Real real_at(const Json& j, const char* key) {
  if (!j.contains(key)) kwise::fail(ErrorCode::invalid_argument, std::string("missing parameter ") + key);
  return real_of(j.at(key));
}

std::vector<Real> reals_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) kwise::fail(ErrorCode::invalid_argument, std::string("missing array ") + key);
  std::vector<Real> out;
  for (const auto& v : j.at(key)) out.push_back(real_of(v));
  return out;
}

std::vector<Rational> rationals_at(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) kwise::fail(ErrorCode::invalid_argument, std::string("missing array ") + key);
  std::vector<Rational> out;
  for (const auto& v : j.at(key)) out.push_back(rational_of(v));
  return out;
}

std::string real_string(const Real& x) { return kwise::to_decimal(x, 17); }

kwise::SupportFilter filter_of(const kw_filter* f) {
  if (f == nullptr) return kwise::SupportFilter::all();
  switch (f->kind) {
    case KW_FILTER_ALL: return kwise::SupportFilter::all();
    case KW_FILTER_MODULAR: return kwise::SupportFilter::modular(f->modulus, f->residue);
    case KW_FILTER_SLAB: return kwise::SupportFilter::slab(f->radius);
  }
  kwise::fail(ErrorCode::invalid_argument, "unknown filter kind");
}

std::optional<kwise::WeightObjective> objective_of(const char* text) {
  if (text == nullptr) return std::nullopt;
  const std::string s(text);
  if (s.empty() || s == "none") return std::nullopt;
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  if (colon == std::string::npos || (name != "min_moment" && name != "max_moment")) {
    kwise::fail(ErrorCode::invalid_argument, "objective must be none, min_moment:J or max_moment:J");
  }
  int j = 0;
  try {
    j = std::stoi(s.substr(colon + 1));
  } catch (const std::exception&) {
    kwise::fail(ErrorCode::invalid_argument, "bad moment order in objective " + s);
  }
  if (j < 0) kwise::fail(ErrorCode::invalid_argument, "moment order must be nonnegative");
  kwise::WeightObjective obj;
  obj.coefficient = [j](int w) { return kwise::pow(Rational(w), static_cast<unsigned>(j)); };
  obj.sense = name == "min_moment" ? kwise::Sense::minimize : kwise::Sense::maximize;
  return obj;
}

kwise::ParamSet param_set_of(const Json& j) {
  kwise::ParamSet p;
  auto get_int = [&](const char* key, std::optional<int>& slot) {
    if (j.contains(key)) slot = j.at(key).get<int>();
  };
  get_int("n", p.n);
  get_int("k", p.k);
  get_int("k_prime", p.k_prime);
  get_int("t", p.t);
  get_int("t_prime", p.t_prime);
  get_int("a", p.a);
  get_int("b", p.b);
  if (j.contains("rho")) p.rho = rational_of(j.at("rho"));
  if (j.contains("c")) p.c = real_of(j.at("c"));
  if (j.contains("beta")) p.beta = real_of(j.at("beta"));
  return p;
}

kwise::gaussmix::GaussMixture mixture_of(const Json& j) {
  kwise::gaussmix::GaussMixture m;
  m.means = reals_at(j, "means");
  m.weights = reals_at(j, "weights");
  m.variance = j.contains("variance") ? real_of(j.at("variance")) : Real(1);
  m.validate();
  return m;
}

kwise::RationalPoly poly_of(const Json& j) { return kwise::RationalPoly(rationals_at(j, "coeffs")); }

Json gaussmix_op(const std::string& op, const Json& j) {
  namespace gm = kwise::gaussmix;
  const double radius = j.contains("radius") ? j.at("radius").get<double>() : gm::kDefaultRadius;
  const double step = j.contains("step") ? j.at("step").get<double>() : gm::kDefaultStep;
  if (op == "sup_distance") {
    const auto r = gm::sup_distance(mixture_of(j), radius, step);
    return {{"distance", real_string(r.distance)}, {"argmax", real_string(r.argmax)}};
  }
  if (op == "interval_advantage") {
    const auto r = gm::interval_advantage(mixture_of(j), radius, step);
    return {{"a", real_string(r.a)}, {"b", real_string(r.b)}, {"advantage", real_string(r.advantage)}};
  }
  if (op == "fit") {
    gm::FitOptions o;
    o.starts = int_or(j, "starts", o.starts);
    o.budget = int_or(j, "budget", o.budget);
    o.seed = j.contains("seed") ? j.at("seed").get<std::uint64_t>() : o.seed;
    o.threads = int_or(j, "threads", o.threads);
    o.radius = radius;
    o.step = step;
    return gm::to_json(gm::best_mixture_fit(int_at(j, "k"), real_at(j, "variance"), o));
  }
  if (op == "det_mk") {
    const int k = int_at(j, "k");
    if (j.contains("q")) {
      const Rational q = rational_at(j, "q");
      return {{"det", kwise::to_string(gm::det_mk([&](int x) { return gm::gaussian_power(q, x); }, k))}};
    }
    const auto c = rationals_at(j, "coefficients");
    const auto b = rationals_at(j, "bases");
    if (c.size() != b.size()) kwise::fail(ErrorCode::dimension_mismatch, "coefficients and bases differ in length");
    auto f = [&](int x) {
      Rational acc = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const Rational p = kwise::pow(b[i], static_cast<unsigned>(x < 0 ? -x : x));
        acc += c[i] * (x < 0 ? Rational(1 / p) : p);
      }
      return acc;
    };
    return {{"det", kwise::to_string(gm::det_mk(f, k))}};
  }
  if (op == "inverse_bound") return gm::to_json(gm::inverse_entry_bound_check(int_at(j, "k"), rational_at(j, "q")));
  if (op == "qbinomial") return kwise::to_json(gm::qbinomial(int_at(j, "k"), int_at(j, "i")));
  if (op == "power_count") return gm::to_json(gm::vandermonde_power_count_check(int_at(j, "k")));
  if (op == "quotient") return gm::to_json(gm::elementary_symmetric_quotient_check(rationals_at(j, "nodes")));
  if (op == "gapmiddle") {
    return {{"value", real_string(gm::gapmiddle_lower(int_at(j, "k"), real_at(j, "d_half"), real_at(j, "alpha")))}};
  }
  if (op == "mixture_lower_bound") {
    return {{"value", real_string(gm::mixture_distance_lower_bound(int_at(j, "k"), real_at(j, "variance"), real_at(j, "d_half")))}};
  }
  if (op == "exponential_fit") {
    const auto f = gm::fit_exponential_sum(int_at(j, "k"), real_at(j, "q"), int_or(j, "starts", 32),
                                           j.contains("seed") ? j.at("seed").get<std::uint64_t>() : 1, int_or(j, "budget", 6000));
    Json coefficients = Json::array();
    Json rates = Json::array();
    for (const auto& x : f.coefficients) coefficients.push_back(real_string(x));
    for (const auto& x : f.rates) rates.push_back(real_string(x));
    return {{"coefficients", coefficients}, {"rates", rates}, {"sample_error", real_string(f.sample_error)}};
  }
  if (op == "erdelyi") return gm::to_json(gm::erdelyi_check(poly_of(j), int_at(j, "m"), rational_at(j, "L")));
  if (op == "coppersmith") return gm::to_json(gm::coppersmith_check(poly_of(j), int_at(j, "m")));
  if (op == "chebyshev") {
    if (!j.contains("coeffs")) return kwise::to_json(gm::chebyshev_t(int_at(j, "k")));
    return gm::to_json(gm::chebyshev_extremal_check(poly_of(j), rational_at(j, "s")));
  }
  if (op == "series") return gm::to_json(gm::series_lower_check(real_at(j, "x")));
  kwise::fail(ErrorCode::invalid_argument, "unknown gaussmix operation " + op);
}

Json analytic_op(const std::string& name, const Json& j) {
  if (name == "fact2") return {{"value", real_string(kwise::analytic::fact2(int_at(j, "n"), int_at(j, "k"), real_at(j, "t")))}};
  if (name == "stirling") return {{"value", real_string(kwise::analytic::stirling(int_at(j, "n"), int_at(j, "a")))}};
  if (name == "be") return {{"value", real_string(kwise::analytic::berry_esseen_noise(real_at(j, "rho"), int_at(j, "n")))}};
  if (name == "petrov") {
    const auto r = kwise::analytic::petrov_noise(int_at(j, "n"), int_at(j, "w"), real_at(j, "rho"), real_at(j, "theta"), real_at(j, "c"));
    return {{"factor", real_string(r.factor)},
            {"epsilon_max", real_string(r.epsilon_max)},
            {"theta_max", real_string(r.theta_max)},
            {"theta_in_range", r.theta_in_range}};
  }
  if (name == "phi_tail") {
    const auto [lo, hi] = kwise::analytic::phi_tail(real_at(j, "theta"));
    return {{"lower", real_string(lo)}, {"upper", real_string(hi)}, {"tail", real_string(kwise::analytic::normal_tail(real_at(j, "theta")))}};
  }
  if (name == "bernstein_noise") {
    return {{"value", real_string(kwise::analytic::bernstein_noise(int_at(j, "n"), real_at(j, "rho"), real_at(j, "s"), real_at(j, "c")))}};
  }
  if (name == "deviation_tail") {
    return {{"value", kwise::to_string(kwise::deviation_tail(int_at(j, "n"), int_at(j, "w"), rational_at(j, "rho"), rational_at(j, "s")))}};
  }
  kwise::fail(ErrorCode::invalid_argument, "unknown analytic quantity " + name);
}

}  // namespace

extern "C" {

const char* kw_version(void) { return "1.0.0"; }

const char* kw_last_error(void) { return last_error.c_str(); }

void kw_string_free(char* s) { std::free(s); }

kw_status kw_pmf_binomial(int n, kw_pmf** out) {
  return guarded([&] { put_pmf(out, kwise::binomial_pmf(n)); });
}

kw_status kw_pmf_slice(int n, int t, kw_pmf** out) {
  return guarded([&] { put_pmf(out, kwise::slice_pmf(n, t)); });
}

kw_status kw_pmf_from_json(const char* json, kw_pmf** out) {
  return guarded([&] {
    need(json, "json");
    put_pmf(out, kwise::pmf_from_string(json));
  });
}

kw_status kw_pmf_mixture(const kw_pmf* a, const kw_pmf* b, const char* lambda, kw_pmf** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(lambda, "lambda");
    put_pmf(out, kwise::mixture(a->value, b->value, kwise::parse_rational(lambda)));
  });
}

kw_status kw_pmf_complement(const kw_pmf* p, kw_pmf** out) {
  return guarded([&] {
    need(p, "pmf");
    put_pmf(out, kwise::complement(p->value));
  });
}

kw_status kw_pmf_to_json(const kw_pmf* p, char** out) {
  return guarded([&] {
    need(p, "pmf");
    put_json(out, kwise::to_json(p->value));
  });
}

kw_status kw_pmf_n(const kw_pmf* p, int* out) {
  return guarded([&] {
    need(p, "pmf");
    need(out, "output");
    *out = p->value.n();
  });
}

kw_status kw_pmf_support_size(const kw_pmf* p, int* out) {
  return guarded([&] {
    need(p, "pmf");
    need(out, "output");
    *out = static_cast<int>(p->value.support_size());
  });
}

void kw_pmf_free(kw_pmf* p) { delete p; }

kw_status kw_moments(const kw_pmf* p, int k, char** out) {
  return guarded([&] {
    need(p, "pmf");
    Json arr = Json::array();
    for (const auto& m : kwise::moments(p->value, k)) arr.push_back(kwise::to_string(m));
    put_json(out, arr);
  });
}

kw_status kw_is_k_uniform(const kw_pmf* p, int k, int* out) {
  return guarded([&] {
    need(p, "pmf");
    need(out, "output");
    *out = kwise::is_k_uniform(p->value, k) ? 1 : 0;
  });
}

kw_status kw_tail_mass(const kw_pmf* p, int t, char** out) {
  return guarded([&] {
    need(p, "pmf");
    put_string(out, kwise::to_string(kwise::tail_mass(p->value, t)));
  });
}

kw_status kw_interval_mass(const kw_pmf* p, int a, int b, char** out) {
  return guarded([&] {
    need(p, "pmf");
    put_string(out, kwise::to_string(kwise::interval_mass(p->value, a, b)));
  });
}

kw_status kw_slice_bias(int n, int t, int ell, char** out) {
  return guarded([&] { put_string(out, kwise::to_string(kwise::slice_bias(n, t, ell))); });
}

kw_status kw_bias_profile(const kw_pmf* p, char** out) {
  return guarded([&] {
    need(p, "pmf");
    put_json(out, kwise::to_json(kwise::bias_profile(p->value)));
  });
}

kw_status kw_lemma13_bound(int n, int t, int ell, char** out) {
  return guarded([&] { put_string(out, real_string(kwise::lemma13_bound(n, t, ell))); });
}

kw_status kw_construct_k_uniform(int n, int k, const kw_filter* filter, const char* objective, kw_lp_solution** out) {
  return guarded([&] {
    need(out, "output");
    auto s = kwise::construct_k_uniform(n, k, filter_of(filter), objective_of(objective));
    *out = new kw_lp_solution{std::move(s)};
  });
}

kw_status kw_extremal_tail(int n, int k, int t, const char* kind, const kw_filter* filter, kw_lp_solution** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "output");
    auto s = kwise::extremal_tail(n, k, t, kwise::parse_extremal_kind(kind), filter_of(filter));
    *out = new kw_lp_solution{std::move(s)};
  });
}

kw_status kw_lp_solution_status(const kw_lp_solution* s, kw_lp_status* out) {
  return guarded([&] {
    need(s, "solution");
    need(out, "output");
    switch (s->value.status) {
      case kwise::LpStatus::optimal: *out = KW_LP_OPTIMAL; break;
      case kwise::LpStatus::infeasible: *out = KW_LP_INFEASIBLE; break;
      case kwise::LpStatus::unbounded: *out = KW_LP_UNBOUNDED; break;
    }
  });
}

kw_status kw_lp_solution_value(const kw_lp_solution* s, char** out) {
  return guarded([&] {
    need(s, "solution");
    if (s->value.status != kwise::LpStatus::optimal) kwise::fail(ErrorCode::precondition, "LP has no optimal value");
    put_string(out, kwise::to_string(s->value.value));
  });
}

kw_status kw_lp_solution_primal(const kw_lp_solution* s, kw_pmf** out) {
  return guarded([&] {
    need(s, "solution");
    if (!s->value.primal) kwise::fail(ErrorCode::precondition, "LP solution carries no primal PMF");
    put_pmf(out, *s->value.primal);
  });
}

kw_status kw_lp_solution_to_json(const kw_lp_solution* s, char** out) {
  return guarded([&] {
    need(s, "solution");
    put_json(out, kwise::to_json(s->value));
  });
}

void kw_lp_solution_free(kw_lp_solution* s) { delete s; }

kw_status kw_sparsify(const kw_pmf* p, int k, kw_pmf** out) {
  return guarded([&] {
    need(p, "pmf");
    put_pmf(out, kwise::sparsify(p->value, k));
  });
}

kw_status kw_smooth(const kw_pmf* p, const char* rho, kw_pmf** out) {
  return guarded([&] {
    need(p, "pmf");
    need(rho, "rho");
    put_pmf(out, kwise::smooth(p->value, kwise::parse_rational(rho)));
  });
}

kw_status kw_replace_noise(const kw_pmf* p, int rounds, kw_pmf** out) {
  return guarded([&] {
    need(p, "pmf");
    put_pmf(out, kwise::replace_noise(p->value, rounds));
  });
}

kw_status kw_noise_moments(int x_sign, const char* rho, char** out) {
  return guarded([&] {
    need(rho, "rho");
    const auto m = kwise::noise_moments(x_sign, kwise::parse_rational(rho));
    put_json(out, Json{{"mean", kwise::to_string(m.mean)},
                       {"second", kwise::to_string(m.second)},
                       {"third", kwise::to_string(m.third)},
                       {"variance", kwise::to_string(m.variance)},
                       {"third_central", kwise::to_string(m.third_central)}});
  });
}

kw_status kw_bu_to_sb(const kw_pmf* p, int k, kw_pmf** out) {
  return guarded([&] {
    need(p, "pmf");
    put_pmf(out, kwise::bu_to_sb(p->value, k));
  });
}

kw_status kw_certify_bias(const kw_pmf* q, int k, char** out) {
  return guarded([&] {
    need(q, "pmf");
    put_json(out, kwise::to_json(kwise::certify_bias(q->value, k)));
  });
}

kw_status kw_interval_property_check(const kw_pmf* p, const kw_pmf* q, int k, int* out) {
  return guarded([&] {
    need(p, "p");
    need(q, "q");
    need(out, "output");
    *out = kwise::interval_property_check(p->value, q->value, k) ? 1 : 0;
  });
}

kw_status kw_advantage(const kw_pmf* p, const kw_pmf* q, int t, char** out) {
  return guarded([&] {
    need(p, "p");
    need(q, "q");
    put_string(out, kwise::to_string(kwise::advantage(p->value, q->value, t)));
  });
}

kw_status kw_best_threshold(const kw_pmf* p, const kw_pmf* q, char** out) {
  return guarded([&] {
    need(p, "p");
    need(q, "q");
    const auto c = kwise::best_threshold(p->value, q->value);
    put_json(out, Json{{"t", c.t}, {"advantage", kwise::to_string(c.advantage)}});
  });
}

kw_status kw_best_interval(const kw_pmf* p, const kw_pmf* q, char** out) {
  return guarded([&] {
    need(p, "p");
    need(q, "q");
    const auto c = kwise::best_interval(p->value, q->value);
    put_json(out, Json{{"a", c.a}, {"b", c.b}, {"advantage", kwise::to_string(c.advantage)}});
  });
}

kw_status kw_run_separation(const char* scenario, const char* params, const char* format, char** out) {
  return guarded([&] {
    need(scenario, "scenario");
    const std::string fmt = format == nullptr ? "json" : format;
    if (fmt != "json" && fmt != "csv") kwise::fail(ErrorCode::invalid_argument, "format must be json or csv");
    const auto report = kwise::run_separation(kwise::parse_scenario(scenario), param_set_of(parse_params(params)));
    if (fmt == "csv") {
      put_string(out, kwise::separation_csv_row(report));
    } else {
      put_json(out, kwise::to_json(report));
    }
  });
}

kw_status kw_separation_csv_header(char** out) {
  return guarded([&] { put_string(out, kwise::separation_csv_header()); });
}

kw_status kw_analytic(const char* name, const char* params, char** out) {
  return guarded([&] {
    need(name, "name");
    put_json(out, analytic_op(name, parse_params(params)));
  });
}

kw_status kw_gaussmix(const char* op, const char* params, char** out) {
  return guarded([&] {
    need(op, "op");
    put_json(out, gaussmix_op(op, parse_params(params)));
  });
}

kw_status kw_verify(const char* suite, int threads, uint64_t seed, kw_criterion_callback callback, void* user,
                    int* all_passed) {
  return guarded([&] {
    need(suite, "suite");
    need(all_passed, "output");
    kwise::verify::SuiteOptions opts;
    opts.threads = threads < 1 ? 1 : threads;
    opts.seed = seed;
    bool ok = true;
    kwise::verify::run_suite(suite, opts, [&](const kwise::verify::CriterionResult& r) {
      ok = ok && r.passed;
      if (callback == nullptr) return;
      const kw_criterion c{r.id, r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), r.seconds, r.limit_seconds};
      callback(&c, user);
    });
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
