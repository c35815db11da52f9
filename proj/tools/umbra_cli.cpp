// Command-line front end for the umbral lattice library.
//
// Subcommands:
//   eval        sample a named lattice function over a window (CSV)
//   map         push a hypergeometric series through the lattice map (JSON)
//   verify      run the built-in residual suites (table or JSON)
//   toda        tabulate the lattice soliton (JSON)
//   oscillator  step the discrete oscillator (CSV)
//   wave        evaluate a discrete plane wave and its velocities (JSON)
//
// Exit codes: 0 success, 1 runtime failure (JSON error record on stderr) or
// failed verification, 2 usage error.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "umbra/core.hpp"
#include "umbra/errors.hpp"
#include "umbra/grid.hpp"
#include "umbra/hyper.hpp"
#include "umbra/map.hpp"
#include "umbra/solutions.hpp"
#include "umbra/verify.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Formatting and output
// ---------------------------------------------------------------------------

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) out += ',';
      out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += fmt17(row[i]);
      }
      out += '\n';
    }
    return out;
  }
};

// Writes through a temp file and renames so readers never see a torn file.
void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw umbra::DomainError("cannot open '" + tmp + "' for writing");
    os << content;
    os.flush();
    if (!os) throw umbra::DomainError("short write to '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw umbra::DomainError("cannot rename '" + tmp + "' onto '" + path +
                             "'");
}

// ---------------------------------------------------------------------------
// Argument parsing helpers
// ---------------------------------------------------------------------------

struct Window {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 1;

  std::vector<double> points() const {
    std::vector<double> xs(count);
    for (std::size_t j = 0; j < count; ++j)
      xs[j] = count > 1 ? lo + (hi - lo) * static_cast<double>(j) /
                                   static_cast<double>(count - 1)
                        : lo;
    return xs;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + s + "' is not a number");
  }
}

// lo:hi[:count]; without a count the span must be a whole number of unit
// steps and the window gets span+1 points.
Window parse_window(const std::string& s, const std::string& flag) {
  const auto parts = split(s, ':');
  if (parts.size() < 2 || parts.size() > 3)
    throw UsageError(flag + ": expected lo:hi or lo:hi:count, got '" + s + "'");
  Window w;
  w.lo = parse_double(parts[0], flag);
  w.hi = parse_double(parts[1], flag);
  if (parts.size() == 3) {
    try {
      const long c = std::stol(parts[2]);
      if (c < 1) throw std::invalid_argument(parts[2]);
      w.count = static_cast<std::size_t>(c);
    } catch (const std::exception&) {
      throw UsageError(flag + ": count '" + parts[2] +
                       "' must be a positive integer");
    }
  } else {
    const double span = w.hi - w.lo;
    const double rounded = std::nearbyint(span);
    if (span < 0.0 ||
        std::abs(span - rounded) > 1e-9 * std::max(1.0, std::abs(span)))
      throw UsageError(flag + ": span of '" + s +
                       "' is not a whole number; give an explicit count "
                       "(lo:hi:count)");
    w.count = static_cast<std::size_t>(rounded) + 1;
  }
  if (w.count == 1 && w.hi != w.lo)
    throw UsageError(flag + ": a single-point window needs hi == lo");
  return w;
}

// Integers and p/q stay exact, anything else becomes a double.
umbra::Numeric parse_numeric(const std::string& s, const std::string& flag) {
  const std::size_t slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t p1 = 0, p2 = 0;
      const long num = std::stol(s.substr(0, slash), &p1);
      const std::string den_str = s.substr(slash + 1);
      const long den = std::stol(den_str, &p2);
      if (p1 != slash || p2 != den_str.size() || den == 0)
        throw std::invalid_argument(s);
      return umbra::Numeric::ratio(num, den);
    }
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos == s.size()) return umbra::Numeric(v);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception&) {
    throw UsageError(flag + ": '" + s + "' is not a number or p/q ratio");
  }
  return umbra::Numeric(parse_double(s, flag));
}

std::string classify(const umbra::Error& e) {
  if (dynamic_cast<const umbra::PoleError*>(&e)) return "pole";
  if (dynamic_cast<const umbra::DomainError*>(&e)) return "domain";
  if (dynamic_cast<const umbra::ConvergenceError*>(&e)) return "convergence";
  if (dynamic_cast<const umbra::BranchCutError*>(&e)) return "branch-cut";
  if (dynamic_cast<const umbra::QuadratureBudgetError*>(&e))
    return "quadrature-budget";
  return "error";
}

int fail_with(const std::string& type, const std::string& message) {
  const json err = {{"schema", "umbra/1"},
                    {"error", {{"type", type}, {"message", message}}}};
  std::cerr << err.dump(2) << '\n';
  return 1;
}

json numeric_to_json(const umbra::Numeric& v) {
  if (v.is_complex()) {
    const umbra::Complex c = v.cplx();
    return json{{"re", c.real()}, {"im", c.imag()}};
  }
  return json(v.dbl());
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalOpts {
  std::string function;
  std::string window = "0:3:7";
  std::string method = "both";
  double spacing = 0.5;
  std::string policy = "parallel";
};

std::string run_eval(const EvalOpts& opt) {
  const Window w = parse_window(opt.window, "--x");
  const std::vector<double> xs = w.points();
  const double a = opt.spacing;
  const auto policy = opt.policy == "serial" ? umbra::ExecPolicy::Serial
                                             : umbra::ExecPolicy::Parallel;
  const double dx =
      w.count > 1 ? (w.hi - w.lo) / static_cast<double>(w.count - 1) : 0.0;

  CsvTable t;
  if (opt.function == "um-airy") {
    const bool quad = opt.method == "quadrature" || opt.method == "both";
    const bool series = opt.method == "series" || opt.method == "both";
    if (!quad && !series)
      throw UsageError("--method for um-airy: quadrature, series or both");
    std::vector<double> qv, sv;
    if (quad) {
      qv = umbra::sample_grid(
          [a](double x) {
            return umbra::um_airy(x, a, umbra::AiryMethod::Quadrature);
          },
          w.lo, dx, w.count, policy);
    }
    if (series) {
      for (double x : xs)
        sv.push_back(umbra::um_airy(x, a, umbra::AiryMethod::Series));
    }
    if (quad && series) {
      t.header = {"x", "quadrature", "series", "abs_diff"};
      for (std::size_t j = 0; j < xs.size(); ++j)
        t.rows.push_back({xs[j], qv[j], sv[j], std::abs(qv[j] - sv[j])});
    } else {
      t.header = {"x", "value"};
      const auto& v = quad ? qv : sv;
      for (std::size_t j = 0; j < xs.size(); ++j)
        t.rows.push_back({xs[j], v[j]});
    }
  } else if (opt.function == "um-gaussian") {
    const bool ser = opt.method == "series" || opt.method == "both";
    const bool uid = opt.method == "u-identity" || opt.method == "both";
    if (!ser && !uid)
      throw UsageError("--method for um-gaussian: series, u-identity or both");
    std::vector<double> sv, uv;
    if (ser) {
      for (double x : xs)
        sv.push_back(umbra::um_gaussian(x, a, umbra::GaussianMethod::Series));
    }
    if (uid) {
      uv = umbra::sample_grid(
          [a](double x) {
            return umbra::um_gaussian(x, a, umbra::GaussianMethod::UIdentity);
          },
          w.lo, dx, w.count, policy);
    }
    if (ser && uid) {
      t.header = {"x", "series", "u_identity", "abs_diff"};
      for (std::size_t j = 0; j < xs.size(); ++j)
        t.rows.push_back({xs[j], sv[j], uv[j], std::abs(sv[j] - uv[j])});
    } else {
      t.header = {"x", "value"};
      const auto& v = ser ? sv : uv;
      for (std::size_t j = 0; j < xs.size(); ++j)
        t.rows.push_back({xs[j], v[j]});
    }
  } else if (opt.function == "sampling") {
    t.header = {"x", "value"};
    for (double x : xs) t.rows.push_back({x, umbra::sampling_function(x, a)});
  } else if (opt.function == "rational-geom") {
    t.header = {"t", "value"};
    for (double x : xs)
      t.rows.push_back({x, umbra::rational_geom_transform(x, a)});
  } else {
    throw UsageError("unknown eval function '" + opt.function +
                     "'; expected um-airy, um-gaussian, sampling or "
                     "rational-geom");
  }
  return t.str();
}

// ---------------------------------------------------------------------------
// map
// ---------------------------------------------------------------------------

struct MapOpts {
  std::string upper, lower;
  double argument = 1.0;
  long k = 1;
  double gamma_exp = 0.0;
  double lambda_exp = 0.0;
  double spacing = 1.0;
  std::string window = "0:4";
};

std::vector<umbra::Numeric> parse_param_list(const std::string& s,
                                             const std::string& flag) {
  std::vector<umbra::Numeric> out;
  if (s.empty()) return out;
  for (const auto& piece : split(s, ','))
    out.push_back(umbra::Numeric(parse_double(piece, flag)));
  return out;
}

std::string run_map(const MapOpts& opt) {
  const Window w = parse_window(opt.window, "--x");
  if (opt.k < 1) throw UsageError("--k must be a positive integer");
  if (opt.spacing == 0.0) throw UsageError("--spacing must be nonzero");

  json doc;
  doc["schema"] = "umbra/1";
  doc["subcommand"] = "map";
  doc["input"] = {{"upper", json::array()},      {"lower", json::array()},
                  {"argument", opt.argument},    {"k", opt.k},
                  {"gamma_exp", opt.gamma_exp},  {"lambda_exp", opt.lambda_exp},
                  {"spacing", opt.spacing}};
  const auto upper = parse_param_list(opt.upper, "--upper");
  const auto lower = parse_param_list(opt.lower, "--lower");
  for (const auto& p : upper) doc["input"]["upper"].push_back(p.dbl());
  for (const auto& p : lower) doc["input"]["lower"].push_back(p.dbl());

  doc["points"] = json::array();
  for (double x : w.points()) {
    const umbra::HyperSpec base(upper, lower, umbra::Numeric(opt.argument));
    const umbra::LemmaInput in{umbra::Numeric(opt.gamma_exp),
                               umbra::Numeric(opt.lambda_exp),
                               opt.k,
                               base,
                               umbra::Numeric(opt.spacing),
                               umbra::Numeric(x)};
    const umbra::HyperSpec image = umbra::umbral_hyper_map(in);
    json rec;
    rec["x"] = x;
    rec["image"]["upper"] = json::array();
    for (const auto& p : image.numerator_params())
      rec["image"]["upper"].push_back(p.dbl());
    rec["image"]["lower"] = json::array();
    for (const auto& p : image.denominator_params())
      rec["image"]["lower"].push_back(p.dbl());
    rec["image"]["argument"] = numeric_to_json(image.argument());
    if (image.prefactor_power())
      rec["image"]["power_exponent"] = image.prefactor_power()->gamma_exp.dbl();
    if (image.prefactor_exponential()) {
      rec["image"]["exp_base"] =
          numeric_to_json(image.prefactor_exponential()->base);
      rec["image"]["exp_exponent"] =
          numeric_to_json(image.prefactor_exponential()->exponent);
    }
    try {
      rec["value"] = numeric_to_json(umbra::pfq_eval(image, umbra::EvalMode::Float));
    } catch (const umbra::Error& e) {
      rec["value"] = nullptr;
      rec["note"] = std::string(e.what());
    }
    doc["points"].push_back(std::move(rec));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "all";
  bool list = false;
  bool as_json = false;
  std::string profile = "default";
};

double tol_factor(const std::string& profile) {
  if (profile == "strict") return 0.1;
  if (profile == "loose") return 10.0;
  return 1.0;
}

std::pair<std::string, int> run_verify(const VerifyOpts& opt) {
  if (opt.list) {
    std::string out;
    for (const auto& name : umbra::residual_suite_names()) out += name + "\n";
    return {out, 0};
  }
  const double factor = tol_factor(opt.profile);
  const auto results = umbra::residual_suite(opt.suite);
  bool all_pass = true;
  json jdoc;
  std::string text;
  char line[160];
  std::snprintf(line, sizeof line, "%-22s %-14s %-14s %s\n", "suite",
                "max_residual", "tolerance", "result");
  text += line;
  jdoc["schema"] = "umbra/1";
  jdoc["subcommand"] = "verify";
  jdoc["profile"] = opt.profile;
  jdoc["suites"] = json::array();
  for (const auto& r : results) {
    const double tol = r.tolerance * factor;
    const bool pass = r.report.max_abs <= tol;
    all_pass = all_pass && pass;
    std::snprintf(line, sizeof line, "%-22s %-14.3e %-14.3e %s\n",
                  r.name.c_str(), r.report.max_abs, tol,
                  pass ? "PASS" : "FAIL");
    text += line;
    jdoc["suites"].push_back({{"name", r.name},
                              {"max_residual", r.report.max_abs},
                              {"tolerance", tol},
                              {"worst_point", r.report.location},
                              {"points", r.report.per_point.size()},
                              {"pass", pass}});
  }
  char tail[80];
  std::snprintf(tail, sizeof tail, "%s (%zu suite%s)\n",
                all_pass ? "all passed" : "FAILURES present", results.size(),
                results.size() == 1 ? "" : "s");
  text += tail;
  jdoc["all_pass"] = all_pass;
  return {opt.as_json ? jdoc.dump(2) + "\n" : text, all_pass ? 0 : 1};
}

// ---------------------------------------------------------------------------
// toda
// ---------------------------------------------------------------------------

struct TodaOpts {
  std::string n_window = "1:5";
  long m_max = 4;
  double spacing = 1.0;
  double q0 = 0.0;
  double alpha = 1.0;
  double beta = 1.0;
  bool backward = false;
  std::string domain = "rational";
};

std::string run_toda(const TodaOpts& opt) {
  const Window w = parse_window(opt.n_window, "--n");
  if (opt.m_max < 0) throw UsageError("--m-max must be nonnegative");
  for (double v : {w.lo, w.hi}) {
    if (v != std::nearbyint(v))
      throw UsageError("--n endpoints must be integers");
  }
  const auto dom = opt.domain == "series"
                       ? umbra::TodaDomain::SeriesDisc
                       : umbra::TodaDomain::RationalContinuation;
  if (opt.domain != "series" && opt.domain != "rational")
    throw UsageError("--domain: series or rational");

  umbra::TodaParams p;
  p.q0 = opt.q0;
  p.alpha = opt.alpha;
  p.beta = opt.beta;
  p.branch = opt.backward ? -1 : 1;

  json doc;
  doc["schema"] = "umbra/1";
  doc["subcommand"] = "toda";
  doc["params"] = {{"q0", p.q0},           {"alpha", p.alpha},
                   {"beta", p.beta},       {"gamma", p.gamma()},
                   {"velocity", p.velocity()}, {"spacing", opt.spacing},
                   {"domain", opt.domain}};
  doc["rows"] = json::array();
  for (double n = w.lo; n <= w.hi + 0.5; n += 1.0) {
    for (long m = 0; m <= opt.m_max; ++m) {
      const double t = static_cast<double>(m) * opt.spacing;
      const auto cont = umbra::toda_continuum(n, t, p);
      doc["rows"].push_back(
          {{"n", static_cast<long>(std::lround(n))},
           {"m", m},
           {"t", t},
           {"q", cont.first},
           {"p", cont.second},
           {"Q", umbra::toda_umbral_q(n, m, opt.spacing, p, dom)},
           {"P", umbra::toda_umbral_p(n, m, opt.spacing, p, dom)}});
    }
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// oscillator
// ---------------------------------------------------------------------------

struct OscOpts {
  std::string x0 = "1";
  std::string p0 = "0";
  std::string spacing = "1";
  long steps = 8;
};

std::string run_oscillator(const OscOpts& opt) {
  if (opt.steps < 0) throw UsageError("--steps must be nonnegative");
  const umbra::Numeric a = parse_numeric(opt.spacing, "--spacing");
  umbra::OscillatorState s{parse_numeric(opt.x0, "--x0"),
                           parse_numeric(opt.p0, "--p0"), umbra::Numeric(0)};
  CsvTable t;
  t.header = {"t", "X", "P", "energy"};
  for (long j = 0; j <= opt.steps; ++j) {
    t.rows.push_back({s.t.dbl(), s.X.dbl(), s.P.dbl(),
                      umbra::oscillator_energy(s, a).dbl()});
    s = umbra::oscillator_evolve(s, a, a);
  }
  return t.str();
}

// ---------------------------------------------------------------------------
// wave
// ---------------------------------------------------------------------------

struct WaveOpts {
  double omega = 1.0;
  double k = 1.0;
  double a = 0.5;
  double b = 0.5;
  double t = 0.0;
  double x = 0.0;
  std::string convention = "arcsin";
};

std::string run_wave(const WaveOpts& opt) {
  if (opt.convention != "arcsin" && opt.convention != "arctan")
    throw UsageError("--convention: arcsin or arctan");
  const auto conv = opt.convention == "arcsin"
                        ? umbra::PhaseConvention::ArcSin
                        : umbra::PhaseConvention::ArcTan;
  const umbra::WaveParams w{opt.omega, opt.k, opt.a, opt.b};
  const umbra::Complex f = umbra::plane_wave(w, opt.t, opt.x);
  json doc;
  doc["schema"] = "umbra/1";
  doc["subcommand"] = "wave";
  doc["params"] = {{"omega", w.omega}, {"k", w.k},   {"a", w.a},
                   {"b", w.b},         {"t", opt.t}, {"x", opt.x},
                   {"convention", opt.convention}};
  doc["field"] = {{"re", f.real()}, {"im", f.imag()}, {"abs", std::abs(f)}};
  doc["phase_velocity"] = umbra::phase_velocity(w, conv);
  doc["refraction_index"] = umbra::refraction_index(w, conv);
  return doc.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"umbral lattice calculus toolkit"};
  app.set_config("--config", "", "INI config file (command-line flags win)");
  app.require_subcommand(1);

  std::string output_path;
  app.add_option("-o,--output", output_path,
                 "write the result to this file atomically instead of stdout");
  std::string profile = "default";
  app.add_option("--tol-profile", profile,
                 "verification tolerance profile: strict, default or loose")
      ->envname("UMBRA_TOL_PROFILE")
      ->check(CLI::IsMember({"strict", "default", "loose"}));

  std::string payload;
  int payload_rc = 0;

  EvalOpts eopt;
  auto* eval = app.add_subcommand(
      "eval", "sample a named lattice function over a window (CSV)");
  eval->fallthrough();
  eval->add_option("function", eopt.function,
                   "um-airy | um-gaussian | sampling | rational-geom")
      ->required();
  eval->add_option("--x", eopt.window, "window lo:hi[:count]");
  eval->add_option("--method", eopt.method,
                   "um-airy: quadrature|series|both; um-gaussian: "
                   "series|u-identity|both");
  eval->add_option("--spacing", eopt.spacing, "lattice spacing");
  eval->add_option("--policy", eopt.policy, "grid sampling: serial|parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));
  eval->callback([&] { payload = run_eval(eopt); });

  MapOpts mopt;
  auto* map = app.add_subcommand(
      "map", "push a hypergeometric series through the lattice map (JSON)");
  map->fallthrough();
  map->add_option("--upper", mopt.upper, "comma-separated numerator parameters");
  map->add_option("--lower", mopt.lower,
                  "comma-separated denominator parameters");
  map->add_option("--argument", mopt.argument,
                  "series argument coefficient c in c*x^k");
  map->add_option("--k", mopt.k, "power of x in the series argument");
  map->add_option("--gamma", mopt.gamma_exp, "power prefactor exponent");
  map->add_option("--lambda", mopt.lambda_exp, "exponential prefactor rate");
  map->add_option("--spacing", mopt.spacing, "lattice spacing");
  map->add_option("--x", mopt.window, "window lo:hi[:count]");
  map->callback([&] { payload = run_map(mopt); });

  VerifyOpts vopt;
  auto* verify = app.add_subcommand(
      "verify", "run the built-in residual suites (table or JSON)");
  verify->fallthrough();
  verify->add_option("--suite", vopt.suite, "suite name or 'all'");
  verify->add_flag("--list", vopt.list, "list suite names and exit");
  verify->add_flag("--json", vopt.as_json, "emit JSON instead of a table");
  verify->callback([&] {
    vopt.profile = profile;
    auto [text, rc] = run_verify(vopt);
    payload = std::move(text);
    payload_rc = rc;
  });

  TodaOpts topt;
  auto* toda =
      app.add_subcommand("toda", "tabulate the lattice soliton (JSON)");
  toda->fallthrough();
  toda->add_option("--n", topt.n_window, "site window lo:hi (integers)");
  toda->add_option("--m-max", topt.m_max, "largest time-step count");
  toda->add_option("--spacing", topt.spacing, "time lattice spacing");
  toda->add_option("--q0", topt.q0, "displacement offset");
  toda->add_option("--alpha", topt.alpha, "kink amplitude (> 0)");
  toda->add_option("--beta", topt.beta, "kink steepness (!= 0)");
  toda->add_flag("--backward", topt.backward, "take the left-moving branch");
  toda->add_option("--domain", topt.domain,
                   "series (strict disc of convergence) or rational");
  toda->callback([&] { payload = run_toda(topt); });

  OscOpts oopt;
  auto* osc =
      app.add_subcommand("oscillator", "step the discrete oscillator (CSV)");
  osc->fallthrough();
  osc->add_option("--x0", oopt.x0, "initial position (integer, p/q or real)");
  osc->add_option("--p0", oopt.p0, "initial momentum (integer, p/q or real)");
  osc->add_option("--spacing", oopt.spacing,
                  "time step (integer, p/q or real)");
  osc->add_option("--steps", oopt.steps, "number of steps to record");
  osc->callback([&] { payload = run_oscillator(oopt); });

  WaveOpts wopt;
  auto* wave = app.add_subcommand(
      "wave", "evaluate a discrete plane wave and its velocities (JSON)");
  wave->fallthrough();
  wave->add_option("--omega", wopt.omega, "frequency");
  wave->add_option("--k", wopt.k, "wave number");
  wave->add_option("--a", wopt.a, "time lattice spacing");
  wave->add_option("--b", wopt.b, "space lattice spacing");
  wave->add_option("--t", wopt.t, "evaluation time");
  wave->add_option("--x", wopt.x, "evaluation position");
  wave->add_option("--convention", wopt.convention, "arcsin or arctan");
  wave->callback([&] { payload = run_wave(wopt); });

  try {
    app.parse(argc, argv);
    emit(output_path, payload);
    return payload_rc;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const umbra::Error& e) {
    return fail_with(classify(e), e.what());
  } catch (const std::exception& e) {
    return fail_with("internal", e.what());
  }
}
