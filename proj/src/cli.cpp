#include "swanson/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swanson/errors.hpp"
#include "swanson/numerics.hpp"
#include "swanson/potentials.hpp"
#include "swanson/susy.hpp"
#include "swanson/verify.hpp"

namespace swanson::cli {

namespace {

using Json = nlohmann::ordered_json;
using potentials::RosenMorseConfig;
using potentials::ScreenedConfig;

enum class ModelKind { RosenMorse, Screened };
enum class Format { Csv, Json };

struct RunConfig {
  ModelKind model = ModelKind::RosenMorse;
  model::SwansonParams sw{2.0, 0.5, std::nullopt};
  RosenMorseConfig rm{};
  ScreenedConfig sc{};
  int nmax = 3;
  std::size_t grid_points = 4001;
  std::optional<double> xmin, xmax;
  Format format = Format::Csv;
  std::string out;
};

std::string num(double v) {
  if (std::isnan(v))
    return "nan";
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v,
                               std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

using Cell = std::variant<std::int64_t, double, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c))
    return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&c))
    return *b ? "1" : "0";
  return num(std::get<double>(c));
}

Json cell_json(const Cell& c) {
  if (const auto* i = std::get_if<std::int64_t>(&c))
    return *i;
  if (const auto* b = std::get_if<bool>(&c))
    return *b;
  const double v = std::get<double>(c);
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

using Meta = std::vector<std::pair<std::string, std::string>>;

// Metadata values are numbers in JSON whenever the text parses as one.
Json meta_json(const std::string& v) {
  const auto* end = v.data() + v.size();
  std::int64_t i = 0;
  if (const auto [p, ec] = std::from_chars(v.data(), end, i);
      ec == std::errc() && p == end && !v.empty())
    return i;
  double d = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), end, d);
  if (ec == std::errc() && p == end && !v.empty())
    return d;
  return v;
}

Json meta_object(const Meta& meta) {
  Json o = Json::object();
  for (const auto& [k, v] : meta)
    o[k] = meta_json(v);
  return o;
}

Meta config_meta(const RunConfig& c, const numerics::Grid* g) {
  Meta m;
  m.emplace_back("model",
                 c.model == ModelKind::RosenMorse ? "rosen-morse" : "screened");
  m.emplace_back("omega", num(c.sw.omega));
  m.emplace_back("alpha", num(c.sw.alpha));
  if (c.model == ModelKind::RosenMorse) {
    m.emplace_back("a", num(c.rm.a));
    m.emplace_back("mu", num(c.rm.mu));
    m.emplace_back("beta1", num(c.rm.beta1));
    m.emplace_back("epsilon", num(c.rm.epsilon));
  } else {
    m.emplace_back("a", num(c.sc.a));
    m.emplace_back("b", num(c.sc.b));
    m.emplace_back("delta", num(c.sc.delta));
    m.emplace_back("tau", num(c.sc.tau));
    m.emplace_back("q", num(c.sc.q()));
    m.emplace_back("epsilon", num(ScreenedConfig::locked_epsilon(c.sw)));
  }
  m.emplace_back("nmax", std::to_string(c.nmax));
  if (g) {
    m.emplace_back("grid_points", std::to_string(g->n_points));
    m.emplace_back("xmin", num(g->xmin));
    m.emplace_back("xmax", num(g->xmax));
  }
  return m;
}

void write_table(std::ostream& os, Format f, const std::string& command,
                 const Meta& meta, const Table& t, const Meta& extra = {}) {
  if (f == Format::Csv) {
    os << "# command=" << command << '\n';
    for (const auto& [k, v] : meta)
      os << "# " << k << '=' << v << '\n';
    for (const auto& [k, v] : extra)
      os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << cell_text(row[i]);
      os << '\n';
    }
    return;
  }
  Json j;
  j["command"] = command;
  j["config"] = meta_object(meta);
  for (const auto& [k, v] : extra)
    j[k] = meta_json(v);
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
      r[t.columns[i]] = cell_json(row[i]);
    rows.push_back(r);
  }
  j["rows"] = rows;
  os << j.dump(2) << '\n';
}

// Writes to --out when given, otherwise to `out`.
template <class Fn>
void emit(const RunConfig& c, std::ostream& out, Fn&& fn) {
  if (c.out.empty()) {
    fn(out);
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f)
    throw DomainError("cannot open output file " + c.out);
  fn(f);
}

susy::SuperpotentialParams matched(const RunConfig& c) {
  if (c.model == ModelKind::RosenMorse)
    return potentials::rm_match_parameters(c.rm, c.sw).sp;
  return potentials::screened_match_parameters(c.sc, c.sw).sp;
}

numerics::Grid run_grid(const RunConfig& c, const susy::SuperpotentialParams& sp,
                        std::size_t points) {
  const auto s = susy::standard_grid(sp, points);
  return numerics::Grid(c.xmin.value_or(s.xmin), c.xmax.value_or(s.xmax), points);
}

void validate(const RunConfig& c, bool require_real) {
  c.sw.validate();
  if (c.model == ModelKind::RosenMorse) {
    c.rm.validate();
    if (require_real)
      potentials::rm_check_reality(c.rm, c.sw);
  } else {
    c.sc.validate();
    if (require_real)
      potentials::screened_check_reality(c.sw);
  }
  if (c.nmax < 0)
    throw DomainError("nmax must be non-negative");
  if (c.grid_points < 3)
    throw DomainError("grid-points must be at least 3");
}

// Reason the bound spectrum ends at level n.
std::string rm_truncation_reason(const RunConfig& c, int n) {
  const double m = potentials::rm_level_margin(c.rm, c.sw, n);
  if (m <= 0.0)
    return "B - n mu <= 0";
  const double wA = c.rm.beta1 * c.rm.mu / m;
  return m - wA <= 0.0 ? "r <= 0" : "s <= 0";
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const auto sp0 = matched(c);
  const auto g = run_grid(c, sp0, c.grid_points);
  const auto seq = susy::build_sequence(sp0, c.nmax, g);
  const bool rm = c.model == ModelKind::RosenMorse;

  int bound = 0;
  std::string reason;
  while (bound <= c.nmax) {
    const bool ok = rm ? potentials::rm_level_admissible(c.rm, c.sw, bound)
                       : susy::is_bound(seq.params[bound]);
    if (!ok) {
      reason = rm ? rm_truncation_reason(c, bound)
                  : "step inadmissible: wA_" + std::to_string(bound) + " = " +
                        num(seq.params[bound].wA) + " <= 0";
      break;
    }
    ++bound;
  }

  std::vector<double> numeric;
  if (bound > 0)
    numeric = verify::fd_levels(sp0, static_cast<std::size_t>(bound), g);

  const auto closed = [&](int n) {
    return rm ? potentials::rm_spectrum(c.rm, c.sw, n)
              : potentials::screened_spectrum_printed(c.sc, c.sw, n);
  };

  Table t;
  t.columns = {"n", "e_closed", "e_closed_relative", "e_shape_invariance",
               "e_numeric", "abs_diff", "admissible"};
  double esi = 0.0;
  for (int n = 0; n < bound; ++n) {
    if (n > 0)
      esi += seq.remainders[n - 1];
    const double ec = closed(n);
    t.rows.push_back({std::int64_t{n}, ec, ec - closed(0), esi, numeric[n],
                      std::abs(esi - numeric[n]), true});
  }
  Meta extra;
  if (!reason.empty()) {
    extra.emplace_back("truncated_at_n", std::to_string(bound));
    extra.emplace_back("truncation_reason", reason);
  }
  emit(c, out, [&](std::ostream& os) {
    write_table(os, c.format, "spectrum", config_meta(c, &g), t, extra);
  });
  return kExitOk;
}

int cmd_wavefunction(const RunConfig& c, int n, std::size_t samples,
                     std::optional<double> gamma, std::ostream& out) {
  if (n < 0)
    throw DomainError("n must be non-negative");
  if (samples < 3)
    throw DomainError("samples must be at least 3");
  const auto sp0 = matched(c);
  const auto g = run_grid(c, sp0, samples);
  const bool rm = c.model == ModelKind::RosenMorse;
  const auto seq = susy::build_sequence(
      sp0, n, rm ? g : susy::standard_grid(sp0, c.grid_points));
  if (!susy::is_bound(seq.params[n]))
    throw NoBoundStateError("level n = " + std::to_string(n) +
                            " is not admissible" +
                            (rm ? " (" + rm_truncation_reason(c, n) + ")" : ""));

  double gam = 0.0;
  if (!rm)
    gam = gamma ? *gamma : potentials::screened_gamma_candidate(c.sc, c.sw);

  const auto profile = rm ? potentials::rosen_morse_profile(c.rm)
                          : potentials::screened_profile(c.sc);
  const auto x = g.nodes();
  std::vector<double> pc(x.size()), pl(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    pc[i] = rm ? potentials::rm_wavefunction(c.rm, c.sw, n, x[i])
               : potentials::screened_wavefunction(c.sc, c.sw, n, x[i], gam);
    pl[i] = susy::ladder_wavefunction(seq, n, x[i]);
  }
  const double nc = std::sqrt(numerics::eta_norm(pc, profile, c.sw, g));
  const double nl = std::sqrt(numerics::eta_norm(pl, profile, c.sw, g));
  if (!(nc > 0.0) || !(nl > 0.0))
    throw RangeError("wavefunction vanishes on the window; widen or shift it");
  const double x0 = numerics::reference_point(profile, g);

  Table t;
  t.columns = {"x", "phi_closed", "phi_ladder", "ratio", "rho",
               "eta_weighted_density"};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = pc[i] / nc, b = pl[i] / nl;
    const double rho = model::rho_map(profile, c.sw, x[i], x0);
    t.rows.push_back({x[i], a, b, b != 0.0 ? a / b : std::nan(""), rho,
                      rho * rho * a * a});
  }
  Meta extra{{"n", std::to_string(n)}, {"rho_reference_x", num(x0)}};
  if (!rm)
    extra.emplace_back("gamma", num(gam));
  emit(c, out, [&](std::ostream& os) {
    write_table(os, c.format, "wavefunction", config_meta(c, &g), t, extra);
  });
  return kExitOk;
}

Json report_json(const verify::VerificationReport& r) {
  Json j;
  j["family"] = r.family;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json k;
    k["name"] = c.name;
    k["identity"] = c.identity;
    k["grids"] = c.grids;
    k["residual"] = std::isfinite(c.residual) ? Json(c.residual) : Json(nullptr);
    k["tolerance"] = c.tolerance;
    k["pass"] = c.pass;
    k["convergence_order"] = c.order ? Json(*c.order) : Json(nullptr);
    checks.push_back(k);
  }
  j["checks"] = checks;
  Json disc = Json::array();
  for (const auto& d : r.discrepancies) {
    Json k;
    k["name"] = d.name;
    k["description"] = d.description;
    k["value"] = std::isfinite(d.value) ? Json(d.value) : Json(nullptr);
    disc.push_back(k);
  }
  j["typeset_discrepancy"] = disc;
  j["notes"] = r.notes;
  return j;
}

int cmd_verify(const RunConfig& c, bool flip_rho, std::ostream& out) {
  verify::VerifyOptions opt;
  opt.n_points = c.grid_points;
  opt.xmin = c.xmin;
  opt.xmax = c.xmax;
  opt.nmax = c.nmax;
  opt.flip_rho = flip_rho;
  const auto r = c.model == ModelKind::RosenMorse
                     ? verify::verify_rosen_morse(c.rm, c.sw, opt)
                     : verify::verify_screened(c.sc, c.sw, opt);
  Json j;
  j["command"] = "verify";
  const auto g = run_grid(c, matched(c), c.grid_points);
  j["config"] = meta_object(config_meta(c, &g));
  j["report"] = report_json(r);
  emit(c, out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return r.passed() ? kExitOk : kExitVerificationFailed;
}

double* scan_target(RunConfig& c, const std::string& name) {
  if (name == "omega")
    return &c.sw.omega;
  if (name == "alpha")
    return &c.sw.alpha;
  if (c.model == ModelKind::RosenMorse) {
    if (name == "a")
      return &c.rm.a;
    if (name == "mu")
      return &c.rm.mu;
    if (name == "beta1")
      return &c.rm.beta1;
    if (name == "epsilon")
      return &c.rm.epsilon;
  } else {
    if (name == "a")
      return &c.sc.a;
    if (name == "b")
      return &c.sc.b;
    if (name == "delta")
      return &c.sc.delta;
    if (name == "tau")
      return &c.sc.tau;
  }
  throw DomainError("cannot scan parameter '" + name + "' for this model");
}

int cmd_scan(const RunConfig& base, const std::string& param, double from,
             double to, int steps, std::ostream& out) {
  if (steps < 1)
    throw DomainError("steps must be at least 1");
  RunConfig probe = base;
  scan_target(probe, param);
  const bool rm = base.model == ModelKind::RosenMorse;

  std::vector<double> values(steps + 1);
  for (int i = 0; i <= steps; ++i)
    values[i] = from + (to - from) * i / steps;
  std::sort(values.begin(), values.end());
  for (double v : values) {
    RunConfig c = base;
    *scan_target(c, param) = v;
    c.sw.validate();
    if (rm)
      c.rm.validate();
    else
      c.sc.validate();
  }

  Table t;
  t.columns = {"param", "n", "e_closed", "admissible", "margin", "real"};
  const double nan = std::nan("");
  bool any = false;
  for (double v : values) {
    RunConfig c = base;
    *scan_target(c, param) = v;
    const bool real = rm ? potentials::rm_radicand(c.rm, c.sw) > 0.0
                         : 9.0 * c.sw.omega - 4.0 * c.sw.alpha > 0.0;
    for (int n = 0; n <= c.nmax; ++n) {
      double e = nan, margin = nan;
      bool adm = false;
      if (real && rm) {
        margin = potentials::rm_level_margin(c.rm, c.sw, n);
        const double k = c.rm.beta1 * c.rm.mu / margin;
        if (margin != 0.0)
          e = -k * k - margin * margin -
              2.0 * c.sw.alpha * c.rm.mu * c.rm.mu / c.sw.omega;
        adm = margin > 0.0 && std::abs(k) < margin;
      } else if (real) {
        margin = potentials::screened_wA(c.sc, c.sw, n);
        e = potentials::screened_spectrum_printed(c.sc, c.sw, n);
        adm = potentials::screened_level_admissible(c.sc, c.sw, n);
      }
      any = any || adm;
      t.rows.push_back({v, std::int64_t{n}, e, adm, margin, real});
    }
  }
  Meta extra{{"param", param},
             {"margin", rm ? "B - n mu" : "wA_n (level bound iff > 0)"}};
  if (!any)
    extra.emplace_back("warning", "empty admissible region");
  emit(base, out, [&](std::ostream& os) {
    write_table(os, base.format, "scan", config_meta(base, nullptr),
                t, extra);
  });
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig c;
  CLI::App app{"Swanson-model spectra, wavefunctions and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value configuration file");

  std::string model = "rosen-morse";
  std::string format = "csv";
  double xmin = 0.0, xmax = 0.0;
  app.add_option("--model", model, "rosen-morse | screened")
      ->check(CLI::IsMember({"rosen-morse", "screened"}))
      ->capture_default_str();
  app.add_option("--omega", c.sw.omega)->capture_default_str();
  app.add_option("--alpha", c.sw.alpha)->capture_default_str();
  app.add_option("--a", c.rm.a, "profile amplitude a (both families)")
      ->capture_default_str();
  app.add_option("--mu", c.rm.mu)->capture_default_str();
  app.add_option("--beta1", c.rm.beta1)->capture_default_str();
  app.add_option("--epsilon", c.rm.epsilon,
                 "spectral parameter (Rosen-Morse; screened locks eps = 2 omega)")
      ->capture_default_str();
  app.add_option("--b", c.sc.b)->capture_default_str();
  app.add_option("--delta", c.sc.delta)->capture_default_str();
  app.add_option("--tau", c.sc.tau)->capture_default_str();
  app.add_option("--nmax", c.nmax)->capture_default_str();
  app.add_option("--grid-points", c.grid_points)->capture_default_str();
  auto* oxmin = app.add_option("--xmin", xmin);
  auto* oxmax = app.add_option("--xmax", xmax);
  app.add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", c.out, "output path (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "level table up to nmax");
  auto* wave = app.add_subcommand("wavefunction", "closed-form and ladder state");
  int n = 0;
  std::size_t samples = 2001;
  double gamma = 0.0;
  wave->add_option("--n", n)->capture_default_str();
  wave->add_option("--samples", samples)->capture_default_str();
  auto* ogamma = wave->add_option("--gamma", gamma,
                                  "screened closed-form parameter gamma");
  auto* ver = app.add_subcommand("verify", "identity suite, JSON report");
  bool flip = false;
  ver->add_flag("--flip-rho", flip)->group("");
  auto* scan = app.add_subcommand("scan", "parameter scan of the closed forms");
  std::string param = "mu";
  double from = 0.2, to = 1.0;
  int steps = 80;
  scan->add_option("--param", param)->capture_default_str();
  scan->add_option("--from", from)->capture_default_str();
  scan->add_option("--to", to)->capture_default_str();
  scan->add_option("--steps", steps)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  c.model = model == "screened" ? ModelKind::Screened : ModelKind::RosenMorse;
  c.format = format == "json" ? Format::Json : Format::Csv;
  c.sc.a = c.rm.a;
  if (*oxmin)
    c.xmin = xmin;
  if (*oxmax)
    c.xmax = xmax;

  try {
    validate(c, !*scan);
    if (c.xmin && c.xmax && !(*c.xmin < *c.xmax))
      throw DomainError("xmin must be below xmax");
    if (*spectrum)
      return cmd_spectrum(c, out);
    if (*wave)
      return cmd_wavefunction(c, n, samples,
                              *ogamma ? std::optional<double>(gamma) : std::nullopt,
                              out);
    if (*ver)
      return cmd_verify(c, flip, out);
    return cmd_scan(c, param, from, to, steps, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

} // namespace swanson::cli
