#include "moments/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "moments/bessel_painleve.hpp"
#include "moments/contour.hpp"
#include "moments/cue.hpp"
#include "moments/exact_formulas.hpp"
#include "moments/hankel.hpp"

namespace moments::cli {
namespace {

using json = nlohmann::json;

const std::map<std::string, std::vector<ParamSpec>>& spec_table() {
  static const std::map<std::string, std::vector<ParamSpec>> table = {
      {"mc",
       {{"observable", ParamKind::text, "zprime2", "zprime2 | z2 | mixed | logderiv | lambda"},
        {"n", ParamKind::integer, "50", "matrix size N"},
        {"samples", ParamKind::integer, "100000", "number of Haar samples"},
        {"k", ParamKind::integer, "1", "K for mixed and logderiv"},
        {"m", ParamKind::integer, "0", "M for mixed"},
        {"a", ParamKind::real, "0.5", "logderiv evaluation point e^{-a/N}"},
        {"power", ParamKind::real, "2", "exponent p of |Lambda(1)|^p for lambda"},
        {"against", ParamKind::text, "exact", "reference: exact (finite N) | asymptotic (leading term)"},
        {"sigmas", ParamKind::real, "3", "pass band in standard errors, exact reference"},
        {"rel-tol", ParamKind::real, "0.05", "pass band in relative error, asymptotic reference"},
        {"workers", ParamKind::integer, "0", "sampling threads, 0 = all cores; does not change the result"}}},
      {"exact",
       {{"observable", ParamKind::text, "mixed", "mixed | logderiv | lambda"},
        {"n", ParamKind::integer, "50", "matrix size N"},
        {"k", ParamKind::integer, "1", "K"},
        {"m", ParamKind::integer, "0", "M for mixed"},
        {"a", ParamKind::real, "0.5", "logderiv evaluation point e^{-a/N}"},
        {"power", ParamKind::real, "2", "exponent p for lambda"},
        {"rel-tol", ParamKind::real, "0.05", "allowed relative distance from the leading asymptotic"}}},
      {"theorem1", {{"k", ParamKind::integer, "1", "K"}, {"m", ParamKind::integer, "0", "M"}}},
      {"theorem2",
       {{"k", ParamKind::integer, "2", "K in 1..3"},
        {"a", ParamKind::real, "0.01", "a > 0"},
        {"n", ParamKind::integer, "1000000", "matrix size N"},
        {"rel-tol", ParamKind::real, "0.02", "allowed relative error of the asymptotic"}}},
      {"lemma1", {{"k", ParamKind::integer, "2", "K"}, {"cap", ParamKind::integer, "4", "total degree checked"}}},
      {"lemma2", {{"k", ParamKind::integer, "2", "K"}, {"variant", ParamKind::text, "rowK", "rowK | row2K"}}},
      {"cmatrix", {{"k", ParamKind::integer, "3", "K"}}},
      {"painleve",
       {{"k", ParamKind::integer, "2", "K"},
        {"s", ParamKind::text, "0.1,0.5,1,2", "comma separated points in (0, 2]"},
        {"terms", ParamKind::integer, "40", "series terms"},
        {"tol", ParamKind::real, "1e-10", "residual bound"}}},
      {"hankel",
       {{"k", ParamKind::integer, "2", "K"},
        {"a", ParamKind::real, "0.3", "a"},
        {"t1", ParamKind::real, "0.2", "t1"},
        {"t2", ParamKind::real, "-0.1", "t2"},
        {"tol", ParamKind::real, "1e-9", "relative bound, determinant vs product formula"}}},
      {"crosscheck",
       {{"k", ParamKind::integer, "2", "K"}, {"tol", ParamKind::real, "1e-12", "bound on |quadrature - residue|"}}},
  };
  return table;
}

long parse_integer(const std::string& key, const std::string& text) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("--" + key + ": not an integer: " + text);
  return v;
}

double parse_real(const std::string& key, const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
    throw UsageError("--" + key + ": not a number: " + text);
  return v;
}

class Params {
 public:
  Params(const std::string& verb, const std::map<std::string, std::string>& given) {
    const auto& specs = parameter_specs(verb);
    for (const auto& [key, value] : given) {
      if (std::none_of(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.key == key; }))
        throw UsageError(verb + ": unknown parameter '" + key + "'");
    }
    for (const auto& s : specs) {
      const auto it = given.find(s.key);
      const std::string& text = it == given.end() ? s.default_value : it->second;
      switch (s.kind) {
        case ParamKind::integer:
          integers_[s.key] = parse_integer(s.key, text);
          json_[s.key] = integers_[s.key];
          break;
        case ParamKind::real:
          reals_[s.key] = parse_real(s.key, text);
          json_[s.key] = reals_[s.key];
          break;
        case ParamKind::text:
          texts_[s.key] = text;
          json_[s.key] = text;
          break;
      }
    }
  }

  long integer(const std::string& key) const { return integers_.at(key); }
  int small(const std::string& key, long lo, long hi) const {
    const long v = integer(key);
    if (v < lo || v > hi)
      throw UsageError("--" + key + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
  }
  double real(const std::string& key) const { return reals_.at(key); }
  const std::string& text(const std::string& key) const { return texts_.at(key); }
  const json& as_json() const { return json_; }

 private:
  std::map<std::string, long> integers_;
  std::map<std::string, double> reals_;
  std::map<std::string, std::string> texts_;
  json json_ = json::object();
};

double rel_diff(double x, double ref) { return ref == 0 ? std::abs(x) : std::abs(x - ref) / std::abs(ref); }

double rel_diff(const Rational& x, const Rational& ref) {
  const Rational d = ref == 0 ? Rational(abs(x)) : Rational(abs(x - ref) / abs(ref));
  return to_double(d);
}

MomentSpec observable_spec(const Params& p) {
  const std::string& name = p.text("observable");
  if (name == "zprime2") return MomentSpec::mixed_z(1, 0);
  if (name == "z2") return MomentSpec::mixed_z(1, 1);
  if (name == "mixed") return MomentSpec::mixed_z(p.small("k", 1, 16), p.small("m", 0, 16));
  if (name == "logderiv") return MomentSpec::logderiv(p.small("k", 1, 16), p.real("a"));
  if (name == "lambda") return MomentSpec::abs_lambda_power(p.real("power"));
  throw UsageError("unknown observable '" + name + "'");
}

// E |Lambda(1)|^{2K} = prod_{j=1}^N prod_{i<K} (j+K+i)/(j+i)
Rational integer_lambda_moment(int K, long n) {
  Rational acc = 1;
  for (long j = 1; j <= n; ++j)
    for (int i = 0; i < K; ++i) acc *= make_rational(j + K + i, j + i);
  return acc;
}

/// E|Lambda'/Lambda(e^{-a/N})|^{2K} = e^{2K alpha} J*(alpha,...; alpha,...), alpha = a/N.
double logderiv_exact(int K, double a, long n, unsigned bits) {
  if (K > 3) throw UsageError("exact log-derivative moments are available for K <= 3");
  const BigComplex alpha(BigReal(a, bits) / BigReal(n, bits));
  const BigComplex j = K <= 2 ? section6_closed(K, alpha, n) : j_star_coincident(K, alpha, n, bits);
  return (exp(alpha * (2L * K)) * j).re.to_double();
}

std::optional<double> exact_value(const MomentSpec& spec, long n, unsigned bits) {
  switch (spec.kind) {
    case MomentKind::mixed_z:
      if (spec.K == 1) return to_double(k1_mixed_moment_exact(n, spec.M));
      if (spec.M == spec.K) return to_double(integer_lambda_moment(spec.K, n));
      return std::nullopt;
    case MomentKind::logderiv:
      if (spec.K > 3) return std::nullopt;
      return logderiv_exact(spec.K, spec.a, n, bits);
    case MomentKind::abs_lambda_power: {
      const double p = spec.power;
      double log_moment = 0;
      for (long j = 1; j <= n; ++j) {
        const double x = static_cast<double>(j);
        log_moment += std::lgamma(x) + std::lgamma(x + p) - 2 * std::lgamma(x + p / 2);
      }
      return std::exp(log_moment);
    }
  }
  return std::nullopt;
}

std::optional<double> asymptotic_value(const MomentSpec& spec, long n) {
  const double N = static_cast<double>(n);
  switch (spec.kind) {
    case MomentKind::mixed_z: {
      const int K = spec.K;
      return to_double(theorem1_coefficient(K, spec.M)) * std::pow(N, K * K + 2 * K - 2 * spec.M);
    }
    case MomentKind::logderiv:
      return theorem2_value(spec.K, spec.a, N);
    case MomentKind::abs_lambda_power: {
      const double half = spec.power / 2;
      if (half < 1 || half != std::floor(half)) return std::nullopt;
      const int K = static_cast<int>(half);
      return to_double(keating_snaith_coeff(K)) * std::pow(N, K * K);
    }
  }
  return std::nullopt;
}

void set_scalar(Report& r, double v) {
  r.value = {v};
  r.value_is_array = false;
}

void verb_mc(const Params& p, const RunConfig& config, Report& r) {
  const MomentSpec spec = observable_spec(p);
  const long n = p.small("n", 1, 1 << 20);
  const long samples = p.integer("samples");
  if (samples < 2) throw UsageError("--samples must be at least 2");
  const long workers = p.integer("workers");
  if (workers < 0) throw UsageError("--workers must be non-negative");
  const std::string& mode = p.text("against");
  if (mode != "exact" && mode != "asymptotic") throw UsageError("--against must be exact or asymptotic");

  const auto ref = mode == "exact" ? exact_value(spec, n, config.precision_bits) : asymptotic_value(spec, n);
  if (!ref) throw UsageError("no " + mode + " reference for this observable");

  const auto est = estimate_moment(spec, static_cast<int>(n), static_cast<std::size_t>(samples), config.seed,
                                   static_cast<unsigned>(workers));
  set_scalar(r, est.mean);
  r.reference = *ref;
  r.rel_error = rel_diff(est.mean, *ref);
  r.std_error = est.std_error;
  r.samples = est.samples;
  r.pass = mode == "exact" ? std::abs(est.mean - *ref) <= p.real("sigmas") * est.std_error
                           : *r.rel_error <= p.real("rel-tol");
}

void verb_exact(const Params& p, const RunConfig& config, Report& r) {
  const MomentSpec spec = observable_spec(p);
  const long n = p.small("n", 1, 1 << 30);
  const auto value = exact_value(spec, n, config.precision_bits);
  if (!value) throw UsageError("no exact finite-N formula for this (K, M); available for K = 1 or M = K");
  set_scalar(r, *value);
  r.reference = asymptotic_value(spec, n);
  if (r.reference) {
    r.rel_error = rel_diff(*value, *r.reference);
    r.pass = *r.rel_error <= p.real("rel-tol");
  } else {
    r.pass = std::isfinite(*value);
  }
}

void verb_theorem1(const Params& p, Report& r) {
  const int K = p.small("k", 1, 8);
  const int M = p.small("m", 0, K);
  const Rational coefficient = theorem1_coefficient(K, M);
  const Rational painleve = theorem1_painleve_form(K, M);
  set_scalar(r, to_double(coefficient));
  r.reference = to_double(painleve);
  r.rel_error = rel_diff(coefficient, painleve);
  r.pass = coefficient == painleve;
}

void verb_theorem2(const Params& p, const RunConfig& config, Report& r) {
  const int K = p.small("k", 1, 3);
  const double a = p.real("a");
  if (a <= 0) throw UsageError("--a must be positive");
  const long n = p.small("n", 1, 1 << 30);
  const double value = logderiv_exact(K, a, n, config.precision_bits);
  set_scalar(r, value);
  r.reference = theorem2_value(K, a, static_cast<double>(n));
  r.rel_error = rel_diff(value, *r.reference);
  r.pass = *r.rel_error <= p.real("rel-tol");
}

void verb_lemma1(const Params& p, Report& r) {
  const int K = p.small("k", 1, 6);
  const int cap = p.small("cap", 2, 12);
  const TruncatedSeries2 det = lemma1_determinant(K, cap);
  const Rational expected = power(Rational(-2), static_cast<long>(K) * K);
  set_scalar(r, to_double(det.constant_term()));
  r.reference = to_double(expected);
  r.rel_error = rel_diff(det.constant_term(), expected);
  r.pass = det.constant_term() == expected && det.terms().size() == 1;
}

void verb_lemma2(const Params& p, Report& r) {
  const int K = p.small("k", 1, 4);
  const std::string& name = p.text("variant");
  if (name != "rowK" && name != "row2K") throw UsageError("--variant must be rowK or row2K");
  const Lemma2Variant variant = name == "rowK" ? Lemma2Variant::rowK : Lemma2Variant::row2K;

  const TruncatedSeries2 det = lemma2_determinant(K, variant);
  // a! b! [t1^a t2^b] should be the same constant for every a + b = 2K
  const Rational target = lemma2_leading_coefficient(K, variant, 0, 2 * K) * Rational(factorial(2 * K));
  bool ok = det.total_degree() == 2 * K;
  double worst = 0;
  r.value.clear();
  for (int a = 0; a <= 2 * K; ++a) {
    const int b = 2 * K - a;
    const Rational scaled = det.coefficient(a, b) * Rational(factorial(a) * factorial(b));
    r.value.push_back(to_double(scaled));
    worst = std::max(worst, rel_diff(scaled, target));
    ok = ok && det.coefficient(a, b) == lemma2_leading_coefficient(K, variant, a, b);
  }
  r.value_is_array = true;
  r.reference = to_double(target);
  r.rel_error = worst;
  r.pass = ok;
}

void verb_cmatrix(const Params& p, Report& r) {
  const int K = p.small("k", 1, 10);
  const Rational det = c_matrix_determinant(K);
  const Rational expected = Rational(1) / Rational(factorial(2 * K));
  set_scalar(r, to_double(det));
  r.reference = to_double(expected);
  r.rel_error = rel_diff(det, expected);
  r.pass = det == expected;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_real(key, item));
  if (out.empty()) throw UsageError("--" + key + ": empty list");
  return out;
}

void verb_painleve(const Params& p, Report& r) {
  const int K = p.small("k", 1, 6);
  const int terms = p.small("terms", 8, 200);
  double worst = 0;
  r.value.clear();
  for (double s : parse_list("s", p.text("s"))) {
    const double residual = painleve_residual(K, s, terms);
    r.value.push_back(residual);
    worst = std::max(worst, residual);
  }
  r.value_is_array = true;
  r.reference = 0.0;
  r.pass = worst < p.real("tol");
}

void verb_hankel(const Params& p, Report& r) {
  WeightParams w{p.real("a"), p.real("t1"), p.real("t2"), p.small("k", 1, 6)};
  w.validate();
  const cplx delta = hankel_delta({w.K, w.K}, w);
  cplx product;
  try {
    product = product_formula_delta(w);
  } catch (const DegenerateDeterminant&) {
    product = product_formula_delta_limit(w);
  }
  set_scalar(r, delta.real());
  r.reference = product.real();
  r.rel_error = std::abs(delta - product) / std::max(std::abs(product), 1e-300);
  r.pass = *r.rel_error <= p.real("tol");
}

void verb_crosscheck(const Params& p, Report& r) {
  const int K = p.small("k", 1, 6);
  WeightParams zero;
  zero.K = K;
  const Matrix<cplx> quadrature = moment_matrix({K, K}, zero);
  const ClassMMatrix exact = lemma1_matrix(K);
  double worst = 0;
  for (int i = 0; i < 2 * K; ++i) {
    for (int j = 0; j < 2 * K; ++j) {
      const double residue = to_double(residue_integral(exact.entry(i, j)));
      worst = std::max(worst, std::abs(quadrature[i][j] - residue) / std::max(1.0, std::abs(residue)));
    }
  }
  set_scalar(r, worst);
  r.reference = 0.0;
  r.pass = worst <= p.real("tol");
}

json number_or_null(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_number(const json& v) { return v.is_null() ? "" : v.dump(); }

const std::map<std::string, std::string> kDescriptions = {
    {"mc", "Monte Carlo moment over Haar samples against the exact or asymptotic value"},
    {"exact", "exact finite-N moment against its leading asymptotic"},
    {"theorem1", "leading constant c(K, M), series route against the Painleve route"},
    {"theorem2", "exact log-derivative moment against binom(2K-2,K-1) N^{2K}/(2a)^{2K-1}"},
    {"lemma1", "moment determinant series: constant (-2)^{K^2}, no t-dependence"},
    {"lemma2", "top-degree coefficients of the column-shifted moment determinants"},
    {"cmatrix", "det C_{2K} = 1/(2K)!"},
    {"painleve", "sigma-form residual of the Bessel determinant"},
    {"hankel", "Delta_(K,K) by quadrature against the product formula"},
    {"crosscheck", "zero-parameter quadrature moments against exact residues"},
};

const char* type_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::integer: return "INT";
    case ParamKind::real: return "FLOAT";
    case ParamKind::text: return "TEXT";
  }
  return "TEXT";
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> names = {"mc",     "exact",   "theorem1", "theorem2", "lemma1",
                                                 "lemma2", "cmatrix", "painleve", "hankel",   "crosscheck"};
  return names;
}

const std::vector<ParamSpec>& parameter_specs(const std::string& verb) {
  const auto it = spec_table().find(verb);
  if (it == spec_table().end()) throw UsageError("unknown command '" + verb + "'");
  return it->second;
}

unsigned default_precision_bits() {
  const char* env = std::getenv("MOMENTS_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionBits;
  const long bits = parse_integer("MOMENTS_PRECISION_BITS", env);
  if (bits < 64 || bits > 1 << 16) throw UsageError("MOMENTS_PRECISION_BITS must lie in [64, 65536]");
  return static_cast<unsigned>(bits);
}

RunResult run(const RunConfig& config) {
  const Params params(config.command, config.parameters);
  if (config.precision_bits < 64) throw UsageError("precision must be at least 64 bits");

  Report r;
  r.command = config.command;
  r.params = params.as_json();
  r.seed = config.seed;
  r.precision_bits = config.precision_bits;

  const auto start = std::chrono::steady_clock::now();
  try {
    const std::string& c = config.command;
    if (c == "mc") verb_mc(params, config, r);
    else if (c == "exact") verb_exact(params, config, r);
    else if (c == "theorem1") verb_theorem1(params, r);
    else if (c == "theorem2") verb_theorem2(params, config, r);
    else if (c == "lemma1") verb_lemma1(params, r);
    else if (c == "lemma2") verb_lemma2(params, r);
    else if (c == "cmatrix") verb_cmatrix(params, r);
    else if (c == "painleve") verb_painleve(params, r);
    else if (c == "hankel") verb_hankel(params, r);
    else verb_crosscheck(params, r);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const PoleError& e) {
    throw UsageError(e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {r.pass ? 0 : 1, r};
}

json to_json(const Report& r) {
  json out;
  out["command"] = r.command;
  out["params"] = r.params;
  if (r.value_is_array) {
    json values = json::array();
    for (double v : r.value) values.push_back(number_or_null(v));
    out["value"] = values;
  } else {
    out["value"] = r.value.empty() ? json(nullptr) : number_or_null(r.value.front());
  }
  out["reference"] = number_or_null(r.reference);
  out["rel_error"] = number_or_null(r.rel_error);
  out["std_error"] = number_or_null(r.std_error);
  out["samples"] = r.samples ? json(*r.samples) : json(nullptr);
  out["seed"] = r.seed;
  out["precision_bits"] = r.precision_bits;
  out["elapsed_ms"] = r.elapsed_ms;
  out["pass"] = r.pass;
  return out;
}

std::string to_csv(const Report& r) {
  const json j = to_json(r);
  std::vector<std::string> header = {"command"};
  std::vector<std::string> row = {csv_field(r.command)};
  for (const auto& [key, v] : r.params.items()) {
    header.push_back(key);
    row.push_back(csv_field(v.is_string() ? v.get<std::string>() : v.dump()));
  }
  std::string value;
  if (j["value"].is_array()) {
    for (std::size_t i = 0; i < j["value"].size(); ++i) value += (i ? ";" : "") + csv_number(j["value"][i]);
  } else {
    value = csv_number(j["value"]);
  }
  header.insert(header.end(), {"value", "reference", "rel_error", "std_error", "samples", "seed", "precision_bits",
                               "elapsed_ms", "pass"});
  row.insert(row.end(), {value, csv_number(j["reference"]), csv_number(j["rel_error"]), csv_number(j["std_error"]),
                         csv_number(j["samples"]), j["seed"].dump(), j["precision_bits"].dump(),
                         j["elapsed_ms"].dump(), r.pass ? "true" : "false"});

  auto join = [](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) line += (i ? "," : "") + cells[i];
    return line + "\n";
  };
  return join(header) + join(row);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moments of characteristic polynomials of random unitary matrices"};
  app.fallthrough();
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  unsigned bits = 0;
  std::string format = "json";
  std::string output;
  app.add_option("--seed", seed, "master seed (default 0)");
  app.add_option("--precision", bits, "working precision in bits (default 256, or MOMENTS_PRECISION_BITS)");
  app.add_option("--format", format, "json | csv (default json)")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output, "write the report to this file instead of stdout");

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, CLI::App*> subcommands;
  for (const auto& verb : verbs()) {
    CLI::App* sub = app.add_subcommand(verb, kDescriptions.at(verb));
    subcommands[verb] = sub;
    for (const auto& s : parameter_specs(verb))
      sub->add_option("--" + s.key, values[verb][s.key], s.help + " (default " + s.default_value + ")")
          ->type_name(type_name(s.kind));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    RunConfig config;
    for (const auto& [verb, sub] : subcommands) {
      if (!sub->parsed()) continue;
      config.command = verb;
      for (const auto& s : parameter_specs(verb))
        if (sub->count("--" + s.key) > 0) config.parameters[s.key] = values[verb][s.key];
    }
    config.seed = seed;
    config.precision_bits = app.count("--precision") > 0 ? bits : default_precision_bits();
    config.output_format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!output.empty()) config.output_path = output;

    const RunResult result = run(config);
    const std::string text =
        config.output_format == OutputFormat::csv ? to_csv(result.report) : to_json(result.report).dump(2) + "\n";
    if (config.output_path) {
      std::ofstream file(*config.output_path);
      if (!file) throw UsageError("cannot write " + *config.output_path);
      file << text;
    } else {
      out << text;
    }
    return result.exit_code;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace moments::cli
