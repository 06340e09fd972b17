#include "whf/job.hpp"

#include <algorithm>
#include <set>

#include "whf/corpus.hpp"
#include "whf/errors.hpp"
#include "whf/oracle.hpp"

namespace whf {

using nlohmann::json;

namespace {

constexpr int kDerivedWindow = 16;
constexpr int kDirectWindow = 96;

const std::pair<JobMode, const char*> kModes[] = {
    {JobMode::factorize, "factorize"},
    {JobMode::verify, "verify"},
    {JobMode::orthogonal, "orthogonal"},
    {JobMode::oracle_compare, "oracle-compare"},
    {JobMode::matrix_dump, "matrix-dump"},
};

const std::set<std::string> kMatrices = {"U",      "U_half", "U_inverse", "F_R",     "F_plus",   "F_minus", "U_R",
                                         "U_plus", "U_minus", "U_tilde",  "pi_plus", "pi_minus", "pi_tilde"};

json residual_json(const Ring& ring, double residual) {
  if (ring.is_exact()) return residual == 0.0 ? json("0") : json(format_double(residual));
  return residual;
}

json winding_json(const std::optional<int>& w) { return w ? json(*w) : json(nullptr); }

std::optional<Element> parse_optional_element(const Ring& ring, const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  return ring.parse(*s);
}

int reach(const LaurentSeries& a) {
  if (a.is_zero()) return 1;
  return std::max({*a.max_degree(), -*a.min_degree(), 1});
}

LaurentSeries build_symbol(const JobSpec& s) {
  if (s.factors) return symbol_from_factors(s.ring, factors_from_json(s.ring, *s.factors));
  if (s.coefficients) return series_from_json(s.ring, *s.coefficients);
  throw ValidationError("this mode needs a symbol");
}

int default_window(const JobSpec& s) {
  if (s.window > 0) return s.window;
  return s.route == TildeRoute::direct ? kDirectWindow : kDerivedWindow;
}

InvertiblePair build_pair(const JobSpec& s, int window) {
  const Ring& ring = s.ring;
  if (s.factors) return invert_from_factors(ring, factors_from_json(ring, *s.factors), window);
  const LaurentSeries a = build_symbol(s);
  if (s.inverse) {
    const json& inv = *s.inverse;
    Interval declared = Interval::all();
    const json& coeffs = inv.is_object() ? inv.at("coefficients") : inv;
    if (inv.is_object() && inv.contains("window")) declared = Interval{inv.at("window").at(0), inv.at("window").at(1)};
    InvertiblePair pair = make_pair(a, series_from_json(ring, coeffs, declared));
    const bool ok = ring.is_exact() ? pair.residual == 0.0 : pair.residual <= ring.tolerance();
    if (!ok) throw ValidationError("supplied inverse leaves residual " + format_double(pair.residual));
    return pair;
  }
  if (!ring.is_exact() && ring.arity() == 1) {
    int samples = 8;
    while (samples < 4 * window) samples <<= 1;
    return invert_numeric(a, samples);
  }
  return invert_direct(a, window);
}

json oracle_entry(const FactorizationResult& engine, const FactorizationResult& oracle) {
  const ComparisonReport r = compare(engine, oracle);
  return json{{"pi_minus", r.pi_minus},
              {"pi_tilde", r.pi_tilde},
              {"pi_plus", r.pi_plus},
              {"max", r.max_difference()},
              {"winding_equal", r.winding_equal},
              {"residual", oracle.residual}};
}

JobOutcome run_factorize(const JobSpec& s) {
  const InvertiblePair pair = build_pair(s, default_window(s));
  const FactorizationResult r = factorize(pair, s.route);
  JobOutcome out;
  out.output = result_to_json(r, s.ring);
  out.output["mode"] = "factorize";
  out.output["ring"] = s.ring.name();
  out.output["route"] = s.route == TildeRoute::derived ? "derived" : "direct";
  if (s.route == TildeRoute::direct) out.output["tail"] = pi_tilde_direct(pair).tail;
  if (s.dump_matrices) {
    out.dump = "# pi^+ matrix\n" + pi_matrices(pair, FVariant::plus).m.dump() + "\n# pi^- matrix\n" +
               pi_matrices(pair, FVariant::minus).m.dump();
  }
  return out;
}

JobOutcome run_verify(const JobSpec& s) {
  const LaurentSeries a = build_symbol(s);
  const json& r = *s.result;
  const LaurentSeries pm = series_from_json(s.ring, r.at("pi_minus"));
  const LaurentSeries pt = series_from_json(s.ring, r.at("pi_tilde"));
  const LaurentSeries pp = series_from_json(s.ring, r.at("pi_plus"));
  const double residual = (pm * pt * pp).distance(a);
  const bool ok = s.ring.is_exact() ? residual == 0.0 : residual <= s.ring.tolerance();
  JobOutcome out;
  out.output = json{{"mode", "verify"}, {"ring", s.ring.name()}, {"residual", residual_json(s.ring, residual)}};
  out.exit_code = ok ? kExitOk : kExitNumerical;
  return out;
}

JobOutcome run_orthogonal(const JobSpec& s) {
  const InvertiblePair pair = build_pair(s, default_window(s));
  const OrthogonalDecomposition d = orthogonal_decompose(pair);
  const auto [unit, normal] = orthonormal_split(d);
  json idempotents = json::array();
  for (const auto& [n, p] : d.idempotents) idempotents.push_back({{"n", n}, {"c", s.ring.format(p)}});

  const int h = std::max(default_window(s), 8) + reach(pair.a) + 2;
  DetValue diag;
  const LaurentSeries np = n_p_series(projection_from_orthonormal(normal, Interval{-h, h - 1}), &diag);
  JobOutcome out;
  out.output = json{{"mode", "orthogonal"},
                    {"ring", s.ring.name()},
                    {"unit", s.ring.format(unit)},
                    {"idempotents", idempotents},
                    {"normal", series_to_json(normal)},
                    {"n_p", series_to_json(np)},
                    {"n_p_exact", diag.exact},
                    {"winding", winding_json(winding_index(normal))}};
  return out;
}

JobOutcome run_oracle_compare(const JobSpec& s) {
  const int window = s.window > 0 ? s.window : kDerivedWindow;
  std::vector<InvertiblePair> pairs;
  if (s.factors || s.coefficients) {
    pairs.push_back(build_pair(s, window));
  } else {
    Corpus corpus(s.seed);
    for (int i = 0; i < s.count; ++i) pairs.push_back(invert_from_factors(s.ring, corpus.complex_factors(s.ring), window));
  }
  json entries = json::array();
  double worst = 0.0;
  bool windings = true;
  for (const InvertiblePair& pair : pairs) {
    const FactorizationResult engine = factorize(pair);
    const FactorizationResult cep = cepstral_factorize(pair.a, s.samples);
    const FactorizationResult roots = root_split_factorize(pair.a);
    json e{{"symbol", series_to_json(pair.a)},
           {"winding", winding_json(engine.winding)},
           {"cepstral", oracle_entry(engine, cep)},
           {"root_split", oracle_entry(engine, roots)}};
    worst = std::max({worst, e["cepstral"]["max"].get<double>(), e["root_split"]["max"].get<double>()});
    windings = windings && e["cepstral"]["winding_equal"].get<bool>() && e["root_split"]["winding_equal"].get<bool>();
    entries.push_back(std::move(e));
  }
  JobOutcome out;
  out.output = json{{"mode", "oracle-compare"},
                    {"ring", s.ring.name()},
                    {"seed", s.seed},
                    {"count", pairs.size()},
                    {"samples", s.samples},
                    {"max_difference", worst},
                    {"windings_agree", windings},
                    {"tolerance", s.oracle_tolerance},
                    {"symbols", entries}};
  out.exit_code = worst <= s.oracle_tolerance && windings ? kExitOk : kExitNumerical;
  return out;
}

JobOutcome run_matrix_dump(const JobSpec& s) {
  const Ring& ring = s.ring;
  const int h = s.matrix_half_width;
  const std::string& name = s.matrix;
  const Interval window = Interval::symmetric(h);
  const std::optional<Element> t = parse_optional_element(ring, s.t);
  std::optional<WindowedMatrix> m;
  if (name == "F_R" || name == "F_plus" || name == "F_minus") {
    const FVariant v = name == "F_R" ? FVariant::R : name == "F_plus" ? FVariant::plus : FVariant::minus;
    m = build_F(ring, v, t, window);
  } else if (name == "U") {
    m = build_U(build_symbol(s), Lattice::integer, window);
  } else if (name == "U_half") {
    m = build_U(build_symbol(s), Lattice::half_integer, Interval{-h, h - 1});
  } else if (name == "U_R" || name == "U_plus" || name == "U_minus") {
    const FVariant v = name == "U_R" ? FVariant::R : name == "U_plus" ? FVariant::plus : FVariant::minus;
    m = conjugate_U(build_symbol(s), v, t, window);
  } else if (name == "U_tilde") {
    m = build_Utilde(build_symbol(s), t, window);
  } else {
    const InvertiblePair pair = build_pair(s, default_window(s));
    if (name == "U_inverse") {
      m = build_U(pair.b, Lattice::integer, window);
    } else if (name == "pi_tilde") {
      m = pi_tilde_matrix(pair, h);
    } else {
      const WindowedMatrix full = pi_matrices(pair, name == "pi_plus" ? FVariant::plus : FVariant::minus).m;
      m = full.section(intersect(window, full.window()));
    }
  }
  JobOutcome out;
  out.dump = m->dump();
  out.output = json{{"mode", "matrix-dump"},
                    {"ring", ring.name()},
                    {"matrix", name},
                    {"lattice", m->lattice() == Lattice::integer ? "integer" : "half-integer"},
                    {"window", {m->window().lo, m->window().hi}},
                    {"text", out.dump}};
  return out;
}

JobOutcome failure(int code, const char* kind, const std::string& message) {
  JobOutcome out;
  out.exit_code = code;
  out.output = json{{"error", {{"kind", kind}, {"message", message}}}};
  return out;
}

template <class F>
JobOutcome guarded(F&& f) {
  try {
    return f();
  } catch (const NumericalError& e) {
    return failure(kExitNumerical, "numerical", e.what());
  } catch (const RingMismatch& e) {
    return failure(kExitValidation, "ring-mismatch", e.what());
  } catch (const NotInvertible& e) {
    return failure(kExitValidation, "not-invertible", e.what());
  } catch (const WindowError& e) {
    return failure(kExitValidation, "window", e.what());
  } catch (const Error& e) {
    return failure(kExitValidation, "validation", e.what());
  } catch (const json::exception& e) {
    return failure(kExitValidation, "validation", e.what());
  } catch (const std::exception& e) {
    return failure(kExitInternal, "internal", e.what());
  }
}

}  // namespace

JobMode parse_mode(std::string_view name) {
  for (const auto& [mode, text] : kModes) {
    if (name == text) return mode;
  }
  throw ValidationError("unknown mode '" + std::string(name) + "'");
}

std::string to_string(JobMode mode) {
  for (const auto& [m, text] : kModes) {
    if (m == mode) return text;
  }
  return "?";
}

Ring parse_ring(const json& j) {
  std::string base;
  int arity = 1;
  std::optional<double> tolerance;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto caret = s.find('^');
    base = s.substr(0, caret);
    if (caret != std::string::npos) {
      try {
        arity = std::stoi(s.substr(caret + 1));
      } catch (const std::exception&) {
        throw ValidationError("bad ring descriptor '" + s + "'");
      }
    }
  } else if (j.is_object()) {
    base = j.at("base").get<std::string>();
    arity = j.value("arity", 1);
    if (j.contains("tolerance")) tolerance = j.at("tolerance").get<double>();
  } else {
    throw ValidationError("ring must be a string or an object");
  }
  if (arity < 1) throw ValidationError("ring arity must be positive");
  Ring base_ring = base == "Q" ? Ring::rational() : base == "C" ? Ring::complex() : throw ValidationError("unknown base field '" + base + "'");
  Ring ring = arity == 1 ? base_ring : Ring::product(base_ring, arity);
  return tolerance ? ring.with_tolerance(*tolerance) : ring;
}

JobSpec parse_job(const json& j, const JobOverrides& overrides) {
  if (!j.is_object()) throw ValidationError("job must be a JSON object");
  static const std::set<std::string> known = {"ring",   "mode",  "symbol",  "inverse", "window", "route",
                                              "seed",   "count", "samples", "result",  "matrix", "half_width",
                                              "t",      "tolerance", "oracle_tolerance"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ValidationError("unknown job field '" + key + "'");
  }
  JobSpec s;
  s.mode = parse_mode(overrides.mode ? *overrides.mode : j.value("mode", std::string("factorize")));
  if (j.contains("ring")) {
    s.ring = parse_ring(j.at("ring"));
  } else if (s.mode == JobMode::oracle_compare) {
    s.ring = Ring::complex();
  }
  if (j.contains("tolerance")) s.ring = s.ring.with_tolerance(j.at("tolerance").get<double>());
  if (overrides.tolerance) s.ring = s.ring.with_tolerance(*overrides.tolerance);
  if (!s.ring.is_exact() && !(s.ring.tolerance() > 0.0)) throw ValidationError("tolerance must be positive");

  if (j.contains("symbol")) {
    const json& sym = j.at("symbol");
    if (!sym.is_object()) throw ValidationError("symbol must be an object");
    const bool has_c = sym.contains("coefficients"), has_f = sym.contains("factors");
    if (has_c == has_f || sym.size() != 1) throw ValidationError("symbol needs exactly one of coefficients or factors");
    if (has_c) s.coefficients = sym.at("coefficients");
    if (has_f) s.factors = sym.at("factors");
  }
  if (j.contains("inverse")) {
    if (!s.coefficients) throw ValidationError("inverse goes with a coefficient-form symbol");
    s.inverse = j.at("inverse");
  }
  s.window = overrides.window ? *overrides.window : j.value("window", 0);
  if (s.window < 0 || (j.contains("window") && s.window == 0)) throw ValidationError("window must be a positive half-width");
  const std::string route = j.value("route", std::string("derived"));
  if (route != "derived" && route != "direct") throw ValidationError("route must be derived or direct");
  s.route = route == "direct" ? TildeRoute::direct : TildeRoute::derived;
  s.seed = overrides.seed ? *overrides.seed : j.value("seed", std::uint64_t{42});
  s.count = j.value("count", 100);
  s.samples = j.value("samples", 1024);
  s.oracle_tolerance = j.value("oracle_tolerance", 1e-8);
  if (j.contains("result")) s.result = j.at("result");
  s.matrix = j.value("matrix", std::string("U"));
  s.matrix_half_width = j.value("half_width", 4);
  if (j.contains("t") && !j.at("t").is_null()) s.t = j.at("t").get<std::string>();
  s.dump_matrices = overrides.dump_matrices;

  const bool has_symbol = s.coefficients || s.factors;
  switch (s.mode) {
    case JobMode::factorize:
    case JobMode::orthogonal:
      if (!has_symbol) throw ValidationError(to_string(s.mode) + " needs a symbol");
      break;
    case JobMode::verify:
      if (!has_symbol || !s.result) throw ValidationError("verify needs a symbol and a result");
      break;
    case JobMode::oracle_compare:
      if (s.ring.is_exact() || s.ring.arity() != 1) throw ValidationError("oracle-compare requires the ring C");
      if (s.count < 1) throw ValidationError("count must be positive");
      break;
    case JobMode::matrix_dump:
      if (!kMatrices.count(s.matrix)) throw ValidationError("unknown matrix '" + s.matrix + "'");
      if (s.matrix_half_width < 1) throw ValidationError("half_width must be positive");
      if (!has_symbol && s.matrix.rfind("F_", 0) != 0) throw ValidationError("matrix " + s.matrix + " needs a symbol");
      break;
  }
  return s;
}

JobOutcome run_job(const JobSpec& spec) {
  return guarded([&] {
    switch (spec.mode) {
      case JobMode::factorize:
        return run_factorize(spec);
      case JobMode::verify:
        return run_verify(spec);
      case JobMode::orthogonal:
        return run_orthogonal(spec);
      case JobMode::oracle_compare:
        return run_oracle_compare(spec);
      case JobMode::matrix_dump:
        return run_matrix_dump(spec);
    }
    throw std::logic_error("unhandled mode");
  });
}

JobOutcome run_job_text(std::string_view text, const JobOverrides& overrides) {
  JobSpec spec;
  JobOutcome parsed = guarded([&] {
    spec = parse_job(json::parse(text), overrides);
    return JobOutcome{};
  });
  if (parsed.exit_code != kExitOk) return parsed;
  return run_job(spec);
}

json result_to_json(const FactorizationResult& r, const Ring& ring) {
  return json{{"pi_minus", series_to_json(r.pi_minus)},
              {"pi_tilde", series_to_json(r.pi_tilde)},
              {"pi_plus", series_to_json(r.pi_plus)},
              {"residual", residual_json(ring, r.residual)},
              {"winding", winding_json(r.winding)}};
}

}  // namespace whf
