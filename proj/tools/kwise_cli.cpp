// Command-line front end over the kwise C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kwise/kwise.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  kw_status status;
  ApiError(kw_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(kw_status s) {
  if (s != KW_OK) throw ApiError(s, kw_last_error());
}

struct PmfDeleter {
  void operator()(kw_pmf* p) const { kw_pmf_free(p); }
};
struct LpDeleter {
  void operator()(kw_lp_solution* s) const { kw_lp_solution_free(s); }
};
using PmfPtr = std::unique_ptr<kw_pmf, PmfDeleter>;
using LpPtr = std::unique_ptr<kw_lp_solution, LpDeleter>;

std::string take(char* s) {
  std::string out(s);
  kw_string_free(s);
  return out;
}

template <class F>
std::string call_string(F&& f) {
  char* s = nullptr;
  check(f(&s));
  return take(s);
}

template <class F>
PmfPtr call_pmf(F&& f) {
  kw_pmf* p = nullptr;
  check(f(&p));
  return PmfPtr(p);
}

struct Options {
  std::optional<int> n, k, k_prime, t, t_prime, a, b, slice, mod, residue, slab, rounds, ell, budget, starts;
  std::string rho;
  std::string objective;
  std::string format = "json";
  std::string input;
  std::string output;
  std::string scenario;
  std::string suite = "all";
  std::string op;
  std::string params;
  std::string c;
  std::string beta;
  std::string variance;
  std::uint64_t seed = 1;
  int threads = 1;
  bool certify = false;
};

// Decimal rendering of "num/den" for human tables.
std::string approx(const std::string& rational) {
  const auto slash = rational.find('/');
  long double v = std::strtold(rational.substr(0, slash).c_str(), nullptr);
  if (slash != std::string::npos) v /= std::strtold(rational.substr(slash + 1).c_str(), nullptr);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lg", v);
  return buf;
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_cell(const Json& v) {
  const std::string text = scalar_text(v);
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

std::string pmf_csv(const Json& pmf) {
  std::string out = "w,p\n";
  for (const auto& e : pmf.at("pmf")) out += std::to_string(e.at("w").get<int>()) + "," + e.at("p").get<std::string>() + "\n";
  return out;
}

std::string pmf_table(const Json& pmf) {
  std::ostringstream out;
  out << "n = " << pmf.at("n").get<int>() << "\n";
  for (const auto& e : pmf.at("pmf")) {
    const auto p = e.at("p").get<std::string>();
    out << std::setw(6) << e.at("w").get<int>() << "  " << std::setw(12) << approx(p) << "  " << p << "\n";
  }
  return out.str();
}

// csv/table for records that are not PMFs: an array of row objects under
// "rows" or "entries" becomes one line each; otherwise key/value pairs.
std::string generic_csv(const Json& j) {
  for (const char* key : {"rows", "entries"}) {
    if (!j.contains(key) || !j.at(key).is_array() || j.at(key).empty()) continue;
    std::string out;
    bool first = true;
    for (const auto& [name, _] : j.at(key).front().items()) {
      out += (first ? "" : ",") + name;
      first = false;
    }
    out += "\n";
    for (const auto& row : j.at(key)) {
      first = true;
      for (const auto& [name, v] : row.items()) {
        out += (first ? "" : ",") + csv_cell(v);
        first = false;
      }
      out += "\n";
    }
    return out;
  }
  std::string out = "key,value\n";
  for (const auto& [name, v] : j.items()) out += name + "," + csv_cell(v) + "\n";
  return out;
}

std::string generic_table(const Json& j) {
  std::ostringstream out;
  for (const auto& [name, v] : j.items()) {
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << name << ":\n";
      for (const auto& row : v) {
        out << " ";
        for (const auto& [field, x] : row.items()) out << " " << field << "=" << scalar_text(x);
        out << "\n";
      }
      continue;
    }
    std::string text = scalar_text(v);
    if (v.is_string() && text.find('/') != std::string::npos) text += " (" + approx(text) + ")";
    out << name << ": " << text << "\n";
  }
  return out.str();
}

class Output {
 public:
  explicit Output(const Options& o) : format_(o.format), path_(o.output) {}

  void pmf(const Json& pmf) const {
    if (format_ == "csv") return write(pmf_csv(pmf));
    if (format_ == "table") return write(pmf_table(pmf));
    write(pmf.dump() + "\n");
  }

  void record(const Json& j) const {
    if (format_ == "csv") return write(generic_csv(j));
    if (format_ == "table") return write(generic_table(j));
    write(j.dump() + "\n");
  }

  void raw(const std::string& csv, const Json& j) const {
    if (format_ == "csv") return write(csv);
    record(j);
  }

  void write(const std::string& text) const {
    if (path_.empty() || path_ == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path_);
    if (!f) throw UsageError("cannot write " + path_);
    f << text;
  }

 private:
  std::string format_;
  std::string path_;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  buf << f.rdbuf();
  return buf.str();
}

// Accepts a bare PMF record or a record carrying one under "primal",
// "transformed" or "sparsified".
std::string pmf_text_from(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ApiError(KW_PARSE, std::string("invalid JSON input: ") + e.what());
  }
  if (j.is_object() && !j.contains("pmf")) {
    for (const char* key : {"primal", "transformed", "sparsified"}) {
      if (j.contains(key) && j.at(key).is_object()) return j.at(key).dump();
    }
  }
  return j.dump();
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

PmfPtr source_pmf(const Options& o) {
  if (!o.input.empty()) {
    const auto text = pmf_text_from(read_input(o.input));
    return call_pmf([&](kw_pmf** p) { return kw_pmf_from_json(text.c_str(), p); });
  }
  const int n = require(o.n, "--n (or --input)");
  if (o.slice) return call_pmf([&](kw_pmf** p) { return kw_pmf_slice(n, *o.slice, p); });
  return call_pmf([&](kw_pmf** p) { return kw_pmf_binomial(n, p); });
}

Json pmf_json(const kw_pmf* p) { return Json::parse(call_string([&](char** s) { return kw_pmf_to_json(p, s); })); }

std::optional<kw_filter> filter_of(const Options& o) {
  if (o.mod && o.slab) throw UsageError("--mod and --slab are exclusive");
  if (o.mod) {
    if (!o.residue) throw UsageError("--mod needs --residue");
    return kw_filter{KW_FILTER_MODULAR, *o.mod, *o.residue, 0};
  }
  if (o.residue) throw UsageError("--residue needs --mod");
  if (o.slab) return kw_filter{KW_FILTER_SLAB, 0, 0, *o.slab};
  return std::nullopt;
}

int emit_lp(const Output& out, kw_lp_solution* s) {
  kw_lp_status status;
  check(kw_lp_solution_status(s, &status));
  const Json j = Json::parse(call_string([&](char** t) { return kw_lp_solution_to_json(s, t); }));
  if (status == KW_LP_OPTIMAL && j.contains("primal") && j.at("primal").is_object()) {
    const Json& primal = j.at("primal");
    std::string csv = "value," + j.at("value").get<std::string>() + "\n" + pmf_csv(primal);
    out.raw(csv, j);
  } else {
    out.record(j);
  }
  return status == KW_LP_OPTIMAL ? kExitOk : kExitFailed;
}

int cmd_construct(const Options& o, const Output& out) {
  const auto f = filter_of(o);
  kw_lp_solution* s = nullptr;
  check(kw_construct_k_uniform(require(o.n, "--n"), require(o.k, "--k"), f ? &*f : nullptr,
                               o.objective.empty() ? nullptr : o.objective.c_str(), &s));
  LpPtr hold(s);
  return emit_lp(out, s);
}

int cmd_extremal(const Options& o, const Output& out) {
  const auto f = filter_of(o);
  kw_lp_solution* s = nullptr;
  const std::string kind = o.objective.empty() ? "max_tail" : o.objective;
  check(kw_extremal_tail(require(o.n, "--n"), require(o.k, "--k"), require(o.t, "--t"), kind.c_str(), f ? &*f : nullptr, &s));
  LpPtr hold(s);
  return emit_lp(out, s);
}

int cmd_sparsify(const Options& o, const Output& out) {
  const auto p = source_pmf(o);
  const auto q = call_pmf([&](kw_pmf** r) { return kw_sparsify(p.get(), require(o.k, "--k"), r); });
  out.pmf(pmf_json(q.get()));
  return kExitOk;
}

int cmd_smooth(const Options& o, const Output& out) {
  const auto p = source_pmf(o);
  if (!o.rho.empty() && o.rounds) throw UsageError("--rho and --rounds are exclusive");
  PmfPtr q;
  if (o.rounds) {
    q = call_pmf([&](kw_pmf** r) { return kw_replace_noise(p.get(), *o.rounds, r); });
  } else {
    if (o.rho.empty()) throw UsageError("missing --rho (or --rounds)");
    q = call_pmf([&](kw_pmf** r) { return kw_smooth(p.get(), o.rho.c_str(), r); });
  }
  out.pmf(pmf_json(q.get()));
  return kExitOk;
}

int cmd_bias(const Options& o, const Output& out) {
  const auto p = source_pmf(o);
  if (o.certify) {
    const Json cert = Json::parse(call_string([&](char** s) { return kw_certify_bias(p.get(), require(o.k, "--k"), s); }));
    out.record(cert);
    return cert.at("all_pass").get<bool>() ? kExitOk : kExitFailed;
  }
  const Json profile = Json::parse(call_string([&](char** s) { return kw_bias_profile(p.get(), s); }));
  if (o.ell) {
    const auto& b = profile.at("bias");
    if (*o.ell < 0 || *o.ell >= static_cast<int>(b.size())) throw UsageError("--ell out of range");
    out.record(Json{{"ell", *o.ell}, {"bias", b.at(static_cast<std::size_t>(*o.ell))}});
    return kExitOk;
  }
  Json rows = Json::array();
  for (std::size_t ell = 0; ell < profile.at("bias").size(); ++ell) rows.push_back({{"ell", ell}, {"bias", profile.at("bias")[ell]}});
  out.raw(generic_csv(Json{{"rows", rows}}), profile);
  return kExitOk;
}

int cmd_tail(const Options& o, const Output& out) {
  const auto p = source_pmf(o);
  if (o.a || o.b) {
    const int a = require(o.a, "--a");
    const int b = require(o.b, "--b");
    const auto v = call_string([&](char** s) { return kw_interval_mass(p.get(), a, b, s); });
    out.raw("a,b,value\n" + std::to_string(a) + "," + std::to_string(b) + "," + v + "\n", Json{{"a", a}, {"b", b}, {"value", v}});
    return kExitOk;
  }
  const int t = require(o.t, "--t");
  const auto v = call_string([&](char** s) { return kw_tail_mass(p.get(), t, s); });
  out.raw("t,value\n" + std::to_string(t) + "," + v + "\n", Json{{"t", t}, {"value", v}});
  return kExitOk;
}

// sparsify, transform to a small-bias law, certify, and check the interval
// property against the sparsified law.
int cmd_pipeline(const Options& o, const Output& out) {
  const int k = require(o.k, "--k");
  PmfPtr p;
  if (!o.input.empty() || !o.t) {
    p = source_pmf(o);
  } else {
    kw_lp_solution* s = nullptr;
    check(kw_extremal_tail(require(o.n, "--n"), k, *o.t, "max_tail", nullptr, &s));
    LpPtr hold(s);
    p = call_pmf([&](kw_pmf** r) { return kw_lp_solution_primal(s, r); });
  }
  const auto sparse = call_pmf([&](kw_pmf** r) { return kw_sparsify(p.get(), k, r); });
  const auto q = call_pmf([&](kw_pmf** r) { return kw_bu_to_sb(p.get(), k, r); });
  const Json cert = Json::parse(call_string([&](char** s) { return kw_certify_bias(q.get(), k, s); }));
  int vs_sparse = 0;
  int vs_input = 0;
  check(kw_interval_property_check(sparse.get(), q.get(), k, &vs_sparse));
  check(kw_interval_property_check(p.get(), q.get(), k, &vs_input));
  Json j{{"k", k},
         {"input", pmf_json(p.get())},
         {"sparsified", pmf_json(sparse.get())},
         {"transformed", pmf_json(q.get())},
         {"certificate", cert},
         {"interval_property", vs_sparse != 0},
         {"interval_property_vs_input", vs_input != 0}};
  if (o.format == "csv") {
    out.write(generic_csv(cert));
  } else if (o.format == "table") {
    out.write("input support " + std::to_string(j["input"]["pmf"].size()) + ", sparsified support " +
              std::to_string(j["sparsified"]["pmf"].size()) + ", transformed support " +
              std::to_string(j["transformed"]["pmf"].size()) + "\n" + "interval property (vs sparsified): " +
              (vs_sparse ? "yes" : "no") + "\n" + "interval property (vs input): " + (vs_input ? "yes" : "no") + "\n" +
              generic_table(cert));
  } else {
    out.write(j.dump() + "\n");
  }
  return cert.at("all_pass").get<bool>() && vs_sparse != 0 ? kExitOk : kExitFailed;
}

int cmd_separate(const Options& o, const Output& out) {
  if (o.scenario.empty()) throw UsageError("missing --scenario");
  Json params = Json::object();
  auto put = [&](const char* key, const std::optional<int>& v) {
    if (v) params[key] = *v;
  };
  put("n", o.n);
  put("k", o.k);
  put("k_prime", o.k_prime);
  put("t", o.t);
  put("t_prime", o.t_prime);
  put("a", o.a);
  put("b", o.b);
  if (!o.rho.empty()) params["rho"] = o.rho;
  if (!o.c.empty()) params["c"] = o.c;
  if (!o.beta.empty()) params["beta"] = o.beta;
  const auto text = params.dump();
  const Json report = Json::parse(call_string([&](char** s) { return kw_run_separation(o.scenario.c_str(), text.c_str(), "json", s); }));
  if (o.format == "csv") {
    const auto header = call_string([&](char** s) { return kw_separation_csv_header(s); });
    const auto row = call_string([&](char** s) { return kw_run_separation(o.scenario.c_str(), text.c_str(), "csv", s); });
    out.write(header + "\n" + row + "\n");
  } else {
    out.record(report);
  }
  const auto adv = report.at("advantage").get<std::string>();
  return adv.front() != '-' && adv != "0" ? kExitOk : kExitFailed;
}

int cmd_gaussmix(const Options& o, const Output& out) {
  if (o.op.empty()) throw UsageError("missing --op");
  Json params = Json::object();
  if (!o.params.empty()) {
    try {
      params = Json::parse(o.params);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(std::string("--params is not JSON: ") + e.what());
    }
  }
  if (o.k && !params.contains("k")) params["k"] = *o.k;
  if (!o.variance.empty() && !params.contains("variance")) params["variance"] = o.variance;
  if (o.budget && !params.contains("budget")) params["budget"] = *o.budget;
  if (o.starts && !params.contains("starts")) params["starts"] = *o.starts;
  if (o.op == "fit" || o.op == "exponential_fit") {
    if (!params.contains("seed")) params["seed"] = o.seed;
    if (o.op == "fit" && !params.contains("threads")) params["threads"] = o.threads;
  }
  const auto text = params.dump();
  const Json r = Json::parse(call_string([&](char** s) { return kw_gaussmix(o.op.c_str(), text.c_str(), s); }));
  out.record(r);
  return r.contains("pass") && !r.at("pass").get<bool>() ? kExitFailed : kExitOk;
}

int cmd_analytic(const Options& o, const Output& out) {
  if (o.op.empty()) throw UsageError("missing --op");
  const Json r = Json::parse(call_string([&](char** s) { return kw_analytic(o.op.c_str(), o.params.c_str(), s); }));
  out.record(r);
  return kExitOk;
}

struct VerifySink {
  std::string format;
  Json rows = Json::array();
  std::ostream* live = nullptr;
};

void on_criterion(const kw_criterion* c, void* user) {
  auto* sink = static_cast<VerifySink*>(user);
  sink->rows.push_back({{"id", c->id},
                        {"name", c->name},
                        {"passed", c->passed != 0},
                        {"seconds", c->seconds},
                        {"limit_seconds", c->limit_seconds},
                        {"detail", c->detail}});
  if (sink->live != nullptr) {
    *sink->live << "criterion " << c->id << " " << (c->passed ? "PASS" : "FAIL") << " " << c->name << " ("
                << c->seconds << " s) " << c->detail << std::endl;
  }
}

int cmd_verify(const Options& o, const Output& out) {
  VerifySink sink{o.format};
  if (o.format == "table" && (o.output.empty() || o.output == "-")) sink.live = &std::cout;
  int all = 0;
  check(kw_verify(o.suite.c_str(), o.threads, o.seed, on_criterion, &sink, &all));
  if (sink.live == nullptr) {
    if (o.format == "csv") {
      out.write(generic_csv(Json{{"rows", sink.rows}}));
    } else if (o.format == "table") {
      out.write(generic_table(Json{{"rows", sink.rows}}));
    } else {
      out.write(Json{{"suite", o.suite}, {"all_passed", all != 0}, {"results", sink.rows}}.dump() + "\n");
    }
  }
  return all != 0 ? kExitOk : kExitFailed;
}

void add_format(CLI::App* app, Options& o) {
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app->add_option("--output", o.output, "Write output to FILE");
  app->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
}

void add_source(CLI::App* app, Options& o) {
  app->add_option("--input", o.input, "PMF JSON file ('-' for stdin)");
  app->add_option("--n", o.n, "Number of coordinates (binomial default)");
  app->add_option("--slice", o.slice, "Use the uniform law on the weight-t slice");
}

void add_filter(CLI::App* app, Options& o) {
  app->add_option("--mod", o.mod, "Support restricted to w == residue (mod M)");
  app->add_option("--residue", o.residue, "Residue for --mod");
  app->add_option("--slab", o.slab, "Support restricted to |w| <= W");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact k-wise uniform constructions, transforms and experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kw_version()));

  auto* construct = app.add_subcommand("construct", "k-uniform weight PMF as an LP vertex");
  construct->add_option("--n", o.n)->required();
  construct->add_option("--k", o.k)->required();
  construct->add_option("--objective", o.objective, "none, min_moment:J or max_moment:J");
  add_filter(construct, o);

  auto* sparsify = app.add_subcommand("sparsify", "Reduce support to at most k+1 weights");
  add_source(sparsify, o);
  sparsify->add_option("--k", o.k)->required();

  auto* smooth = app.add_subcommand("smooth", "Apply rho-noise or replacement noise");
  add_source(smooth, o);
  smooth->add_option("--rho", o.rho, "Noise correlation p/q");
  smooth->add_option("--rounds", o.rounds, "Rounds of replacement noise instead of --rho");

  auto* bias = app.add_subcommand("bias", "Parity biases of a weight PMF");
  add_source(bias, o);
  bias->add_option("--ell", o.ell, "Report a single prefix length");
  bias->add_option("--k", o.k, "Order for --certify");
  bias->add_flag("--certify", o.certify, "Check the small-bias case bounds");

  auto* tail = app.add_subcommand("tail", "Tail or interval mass");
  add_source(tail, o);
  tail->add_option("--t", o.t);
  tail->add_option("--a", o.a);
  tail->add_option("--b", o.b);

  auto* extremal = app.add_subcommand("extremal", "Extremal tail over k-uniform PMFs");
  extremal->add_option("--n", o.n)->required();
  extremal->add_option("--k", o.k)->required();
  extremal->add_option("--t", o.t)->required();
  extremal->add_option("--objective", o.objective, "max_tail, max_point or signed_gap");
  add_filter(extremal, o);

  auto* pipeline = app.add_subcommand("pipeline", "Sparsify, transform to small bias, certify");
  add_source(pipeline, o);
  pipeline->add_option("--k", o.k)->required();
  pipeline->add_option("--t", o.t, "Start from the max-tail vertex at t");

  auto* separate = app.add_subcommand("separate", "Distinguishing experiments");
  separate->add_option("--scenario", o.scenario)->required()->check(CLI::IsMember({"thm8", "thm9", "thm10"}));
  separate->add_option("--n", o.n);
  separate->add_option("--k", o.k);
  separate->add_option("--k-prime", o.k_prime);
  separate->add_option("--t", o.t);
  separate->add_option("--t-prime", o.t_prime);
  separate->add_option("--a", o.a);
  separate->add_option("--b", o.b);
  separate->add_option("--rho", o.rho);
  separate->add_option("--c", o.c);
  separate->add_option("--beta", o.beta);

  auto* gaussmix = app.add_subcommand("gaussmix", "Gaussian mixtures and certificate checks");
  gaussmix->add_option("--op", o.op)->required();
  gaussmix->add_option("--params", o.params, "JSON object of parameters");
  gaussmix->add_option("--k", o.k);
  gaussmix->add_option("--variance", o.variance);
  gaussmix->add_option("--seed", o.seed);
  gaussmix->add_option("--budget", o.budget);
  gaussmix->add_option("--starts", o.starts);

  auto* analytic = app.add_subcommand("analytic", "Closed-form bounds");
  analytic->add_option("--op", o.op)->required();
  analytic->add_option("--params", o.params, "JSON object of parameters");

  auto* verify = app.add_subcommand("verify", "Run acceptance suites");
  verify->add_option("--suite", o.suite, "all, poly, or comma-separated criterion ids");
  verify->add_option("--seed", o.seed);

  for (auto* sub : {construct, sparsify, smooth, bias, tail, extremal, pipeline, separate, gaussmix, analytic, verify}) add_format(sub, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  const Output out(o);
  try {
    if (*construct) return cmd_construct(o, out);
    if (*sparsify) return cmd_sparsify(o, out);
    if (*smooth) return cmd_smooth(o, out);
    if (*bias) return cmd_bias(o, out);
    if (*tail) return cmd_tail(o, out);
    if (*extremal) return cmd_extremal(o, out);
    if (*pipeline) return cmd_pipeline(o, out);
    if (*separate) return cmd_separate(o, out);
    if (*gaussmix) return cmd_gaussmix(o, out);
    if (*analytic) return cmd_analytic(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.status == KW_INTERNAL ? kExitFailed : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}
