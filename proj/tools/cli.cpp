#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "invlab/bergman.hpp"
#include "invlab/distances.hpp"
#include "invlab/geodesic.hpp"
#include "invlab/localization.hpp"
#include "invlab/parallel.hpp"
#include "invlab/random.hpp"
#include "invlab/text.hpp"
#include "invlab/verify.hpp"

namespace invlab::cli {

namespace {

using json = nlohmann::ordered_json;

// A validation failure attributable to one flag.
class FlagError : public std::runtime_error {
 public:
  FlagError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

template <class F>
auto from_flag(const char* flag, F&& parse) {
  try {
    return parse();
  } catch (const FlagError&) {
    throw;
  } catch (const std::exception& e) {
    throw FlagError(flag, e.what());
  }
}

void require_member(const Domain& d, const ComplexPoint& p, const char* flag) {
  if (!contains(d, p))
    throw FlagError(flag, format_point(p) + " is outside " + d.literal());
}

struct RunConfig {
  std::uint64_t seed = 42;
  std::map<std::string, double> tolerances;
  SolverConfig solver;
  std::string output_path;
  std::string format = "csv";
};

RunConfig load_config(const std::string& path) {
  RunConfig c;
  if (path.empty()) return c;
  std::ifstream in(path);
  if (!in) throw FlagError("--config", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw FlagError("--config", e.what());
  }
  if (!j.is_object()) throw FlagError("--config", "top level must be an object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (key == "tolerances") {
        for (const auto& [name, t] : v.items()) c.tolerances[name] = t.get<double>();
      } else if (key == "solver") {
        for (const auto& [name, s] : v.items()) {
          if (name == "node_count") c.solver.node_count = s.get<std::size_t>();
          else if (name == "max_iterations") c.solver.max_iterations = s.get<int>();
          else if (name == "convergence_tol") c.solver.convergence_tol = s.get<double>();
          else if (name == "refinement_levels") c.solver.refinement_levels = s.get<int>();
          else if (name == "finite_difference_step")
            c.solver.finite_difference_step = s.get<double>();
          else throw FlagError("--config", "unknown solver key '" + name + "'");
        }
      } else if (key == "output_path") {
        c.output_path = v.get<std::string>();
      } else if (key == "format") {
        c.format = v.get<std::string>();
      } else {
        throw FlagError("--config", "unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw FlagError("--config", e.what());
  }
  return c;
}

// Flags shared by every subcommand; unset flags fall back to the config file.
struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;

  void attach(CLI::App* app, bool with_format) {
    app->add_option("--config", config_path, "JSON run configuration");
    app->add_option("--seed", seed, "64-bit sampling seed");
    app->add_option("--out", out, "output path (default: stdout)");
    if (with_format)
      app->add_option("--format", format, "csv or json")
          ->check(CLI::IsMember({"csv", "json"}));
  }

  RunConfig resolve() const {
    RunConfig c = load_config(config_path);
    if (seed) c.seed = *seed;
    if (out) c.output_path = *out;
    if (format) c.format = *format;
    if (c.format != "csv" && c.format != "json")
      throw FlagError("--format", "must be csv or json, got '" + c.format + "'");
    return c;
  }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw FlagError("--out", "cannot write " + path);
}

std::string num(double x) { return format_double17(x); }

json jnum(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  auto line = [](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += ',';
      // multi-coordinate points contain commas
      if (cells[i].find(',') != std::string::npos) s += '"' + cells[i] + '"';
      else s += cells[i];
    }
    return s + '\n';
  };
  std::string s = line(header);
  for (const auto& r : rows) s += line(r);
  return s;
}

// Rows rendered either as CSV or as a JSON array of objects (numbers kept
// numeric where the cell parses as one).
std::string table(const RunConfig& c, const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  if (c.format == "csv") return csv(header, rows);
  json arr = json::array();
  for (const auto& r : rows) {
    json o = json::object();
    for (std::size_t i = 0; i < header.size(); ++i) {
      char* end = nullptr;
      const double v = std::strtod(r[i].c_str(), &end);
      if (end && *end == '\0' && !r[i].empty() && std::isfinite(v)) o[header[i]] = v;
      else o[header[i]] = r[i];
    }
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + '\n';
}

json point_json(const ComplexPoint& p) {
  if (p.dim() == 1) return json::array({p[0].real(), p[0].imag()});
  json a = json::array();
  for (const cplx& c : p.coords()) {
    a.push_back(c.real());
    a.push_back(c.imag());
  }
  return a;
}

// ---- distance ---------------------------------------------------------------

struct DistanceCmd {
  Common common;
  std::string domain = "disc", z, w, which = "k";

  void attach(CLI::App* app) {
    common.attach(app, true);
    app->add_option("--domain", domain, "domain literal");
    app->add_option("--z", z, "first point")->required();
    app->add_option("--w", w, "second point")->required();
    app->add_option("--which", which, "k, c, l or m (= tanh k)")
        ->check(CLI::IsMember({"k", "c", "l", "m"}));
  }

  int run(std::ostream& out) const {
    const RunConfig c = common.resolve();
    const Domain d = from_flag("--domain", [&] { return parse_domain(domain); });
    const ComplexPoint pz = from_flag("--z", [&] { return parse_point(z); });
    const ComplexPoint pw = from_flag("--w", [&] { return parse_point(w); });
    if (pz.dim() != d.dim())
      throw FlagError("--z", "dimension " + std::to_string(pz.dim()) + " vs domain " +
                                 std::to_string(d.dim()));
    if (pw.dim() != d.dim())
      throw FlagError("--w", "dimension " + std::to_string(pw.dim()) + " vs domain " +
                                 std::to_string(d.dim()));
    require_member(d, pz, "--z");
    require_member(d, pw, "--w");

    DistanceValue v = which == "c"   ? caratheodory_distance(d, pz, pw)
                      : which == "l" ? lempert_function(d, pz, pw)
                                     : kobayashi_distance(d, pz, pw);
    if (which == "m") v.value = v.infinite() ? 1.0 : std::tanh(v.value);
    const std::string value = v.infinite() ? "inf" : num(v.value);
    emit(table(c, {"domain", "z", "w", "which", "value", "method"},
               {{d.literal(), format_point(pz, true), format_point(pw, true), which,
                 value, to_string(v.method)}}),
         c.output_path, out);
    return kOk;
  }
};

// ---- geodesic ---------------------------------------------------------------

struct GeodesicCmd {
  Common common;
  std::string domain = "disc", z, w;
  std::optional<std::size_t> nodes;
  std::optional<int> levels, max_iterations;
  std::optional<double> tol;

  void attach(CLI::App* app) {
    common.attach(app, false);
    app->add_option("--domain", domain, "domain literal");
    app->add_option("--z", z, "start point")->required();
    app->add_option("--w", w, "end point")->required();
    app->add_option("--nodes", nodes, "node count (2^k + 1)");
    app->add_option("--levels", levels, "dyadic refinement levels");
    app->add_option("--max-iterations", max_iterations, "iterations per level");
    app->add_option("--tol", tol, "relative improvement tolerance");
  }

  int run(std::ostream& out) const {
    RunConfig c = common.resolve();
    if (nodes) c.solver.node_count = *nodes;
    if (levels) c.solver.refinement_levels = *levels;
    if (max_iterations) c.solver.max_iterations = *max_iterations;
    if (tol) c.solver.convergence_tol = *tol;
    from_flag("--nodes", [&] {
      c.solver.validate();
      return 0;
    });
    const Domain d = from_flag("--domain", [&] { return parse_domain(domain); });
    const ComplexPoint pz = from_flag("--z", [&] { return parse_point(z); });
    const ComplexPoint pw = from_flag("--w", [&] { return parse_point(w); });
    require_member(d, pz, "--z");
    require_member(d, pw, "--w");

    const auto density = FinslerDensity::kobayashi(d);
    const auto res = minimize_curve(density, pz, pw, c.solver);
    json eps = nullptr;
    try {
      eps = jnum(epsilon_certificate(res.curve, density,
                                     [&](const ComplexPoint& a, const ComplexPoint& b) {
                                       return kobayashi_distance(d, a, b).value;
                                     })
                     .epsilon);
    } catch (const Unsupported&) {
      // no closed-form oracle for this domain
    }
    // one node per line keeps long curves readable
    std::string text = "{\n  \"nodes\": [";
    const auto& nodes = res.curve.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      text += (i ? ",\n    " : "\n    ") + point_json(nodes[i]).dump();
    text += "\n  ],\n  \"length\": " + jnum(res.length).dump() +
            ",\n  \"epsilon\": " + eps.dump() + "\n}\n";
    emit(text, c.output_path, out);
    return kOk;
  }
};

// ---- gap --------------------------------------------------------------------

struct GapCmd {
  Common common;
  std::string z, w;

  void attach(CLI::App* app) {
    common.attach(app, true);
    app->add_option("--z", z, "first point of Pi ∩ D")->required();
    app->add_option("--w", w, "second point of Pi ∩ D")->required();
  }

  int run(std::ostream& out) const {
    const RunConfig c = common.resolve();
    const Domain pi1 = Domain::halfdisc(1.0);
    const ComplexPoint pz = from_flag("--z", [&] { return parse_point(z); });
    const ComplexPoint pw = from_flag("--w", [&] { return parse_point(w); });
    if (pz.dim() != 1) throw FlagError("--z", "gap is planar");
    if (pw.dim() != 1) throw FlagError("--w", "gap is planar");
    require_member(pi1, pz, "--z");
    require_member(pi1, pw, "--w");
    const auto g = localization_gap_halfdisc(pz[0], pw[0]);
    emit(table(c, {"z", "w", "k_loc", "k_glob", "t1", "t2", "gap", "residual"},
               {{format_complex(pz[0], true), format_complex(pw[0], true),
                 num(g.k_local), num(g.k_global), num(g.t1), num(g.t2), num(g.gap),
                 num(g.residual)}}),
         c.output_path, out);
    return kOk;
  }
};

// ---- sweep ------------------------------------------------------------------

struct SweepCmd {
  Common common;
  std::string family = "imaginary-axis";
  double region = 0.05;
  std::optional<std::size_t> samples_flag;

  void attach(CLI::App* app) {
    common.attach(app, true);
    app->add_option("--family", family, "imaginary-axis, random-cap or normal")
        ->check(CLI::IsMember({"imaginary-axis", "random-cap", "normal"}));
    app->add_option("--region", region, "family scale r");
    app->add_option("--samples", samples_flag,
                    "number of rows (default 100; 24 for normal)");
  }

  int run(std::ostream& out) const {
    const RunConfig c = common.resolve();
    const std::size_t samples = samples_flag.value_or(family == "normal" ? 24 : 100);
    if (samples == 0 || samples > 1000000)
      throw FlagError("--samples", "must be in [1, 1000000]");
    struct Pair {
      double t;
      cplx z, w;
    };
    std::vector<Pair> pairs;
    if (family == "imaginary-axis") {
      if (!(region > 0.0 && region <= 0.1))
        throw FlagError("--region", "imaginary-axis needs 0 < r <= 0.1");
      // t from r down to r/1000, geometrically
      for (std::size_t i = 0; i < samples; ++i) {
        const double t =
            samples == 1 ? region
                         : region * std::pow(10.0, -3.0 * double(i) / double(samples - 1));
        pairs.push_back({t, cplx(0, t), cplx(0, t / 2)});
      }
    } else if (family == "normal") {
      if (!(region > 0.0 && region < 0.5))
        throw FlagError("--region", "normal needs 0 < r < 0.5");
      if (samples > 48) throw FlagError("--samples", "normal family allows at most 48");
      for (std::size_t k = 0; k < samples; ++k) {
        const double t = std::ldexp(region, -int(k));
        pairs.push_back({t, cplx(0, 2 * t), cplx(0, t)});
      }
    } else {
      if (!(region > 0.0 && region <= 1.0))
        throw FlagError("--region", "random-cap needs 0 < r <= 1");
      const CounterRng rng(c.seed);
      for (std::size_t k = 0; k < samples; ++k) {
        const cplx z = sample_halfdisc(rng, k, region, 0);
        const cplx w = sample_halfdisc(rng, k, region, 1);
        pairs.push_back({std::abs(z - w), z, w});
      }
    }

    const bool sharp = family == "imaginary-axis";
    const auto rows = parallel_map(pairs.size(), [&](std::size_t i) {
      const auto& p = pairs[i];
      const double gap = localization_gap_halfdisc(p.z, p.w).gap;
      const double d = std::abs(p.z - p.w);
      const double rhs =
          sharp ? d * (0.5 * d + std::min(p.z.imag(), p.w.imag()))
                : rhs_dimone(1.0, ComplexPoint{p.z}, ComplexPoint{p.w}, p.z.imag(),
                             p.w.imag());
      return std::vector<std::string>{num(p.t), format_complex(p.z, true),
                                      format_complex(p.w, true), num(gap), num(rhs),
                                      num(rhs > 0.0 ? gap / rhs : 0.0)};
    });
    emit(table(c, {"t", "z", "w", "gap", "rhs", "ratio"}, rows), c.output_path, out);
    return kOk;
  }
};

// ---- bergman ----------------------------------------------------------------

struct BergmanCmd {
  Common common;
  std::string domain = "disc", z;
  std::optional<std::string> X;
  std::optional<int> truncation;
  double h = 1e-3;

  void attach(CLI::App* app) {
    common.attach(app, false);
    app->add_option("--domain", domain, "Reinhardt domain literal");
    app->add_option("--z", z, "point")->required();
    app->add_option("--X", X, "tangent vector (default e1)");
    app->add_option("--truncation", truncation, "max total degree N");
    app->add_option("--step", h, "finite-difference step h");
  }

  int run(std::ostream& out) const {
    const RunConfig c = common.resolve();
    const Domain d = from_flag("--domain", [&] { return parse_domain(domain); });
    const ComplexPoint pz = from_flag("--z", [&] { return parse_point(z); });
    if (pz.dim() != d.dim())
      throw FlagError("--z", "dimension " + std::to_string(pz.dim()) + " vs domain " +
                                 std::to_string(d.dim()));
    require_member(d, pz, "--z");
    TangentVector v;
    if (X) {
      v = from_flag("--X", [&] { return parse_vector(*X); });
      if (v.dim() != d.dim()) throw FlagError("--X", "dimension mismatch");
    } else {
      std::vector<cplx> e(d.dim(), cplx(0));
      e[0] = 1.0;
      v = TangentVector(e);
    }
    const int N = truncation.value_or(default_truncation(d.dim()));
    if (N < 0) throw FlagError("--truncation", "must be >= 0");
    if (!(h > 0.0)) throw FlagError("--step", "must be positive");

    const MomentTable table(d, N);
    const auto k = bergman_kernel_diag(table, pz);
    const double beta = bergman_metric_numeric(table, pz, v, h);
    json j;
    j["kernel"] = jnum(k.kernel_diag);
    j["K_D"] = jnum(k.K_D);
    j["beta"] = jnum(beta);
    j["beta_tilde"] = jnum(beta / std::sqrt(double(d.dim()) + 1.0));
    j["tail"] = jnum(k.tail_estimate);
    emit(j.dump(2) + '\n', c.output_path, out);
    return kOk;
  }
};

// ---- verify -----------------------------------------------------------------

struct VerifyCmd {
  Common common;
  std::string suite = "all";

  void attach(CLI::App* app) {
    common.attach(app, false);
    app->add_option("--suite", suite, "suite name or all");
  }

  int run(std::ostream& out) const {
    RunConfig c = common.resolve();
    if (c.output_path.empty()) c.output_path = "report.json";
    if (suite != "all" &&
        std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
      throw FlagError("--suite", "unknown suite '" + suite + "'");
    VerifyOptions o;
    o.seed = c.seed;
    o.tolerances = from_flag("--config", [&] { return Tolerances(c.tolerances); });
    o.solver = c.solver;
    from_flag("--config", [&] {
      o.solver.validate();
      return 0;
    });

    const auto results = run_suites(suite, o);
    json report = json::object();
    bool all = true;
    for (const auto& r : results) {
      json measured = json::object();
      for (const auto& m : r.measured) measured[m.name] = jnum(m.value);
      report[r.name] = {{"pass", r.pass}, {"measured", measured}, {"tolerance", r.tolerance}};
      out << r.name << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
      all = all && r.pass;
    }
    emit(report.dump(2) + '\n', c.output_path, out);
    return all ? kOk : kVerificationFailed;
  }
};

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"invariant distances laboratory", "invlab"};
  app.require_subcommand(1);
  DistanceCmd distance;
  GeodesicCmd geodesic;
  GapCmd gap;
  SweepCmd sweep;
  BergmanCmd bergman;
  VerifyCmd verify;
  auto* s_distance = app.add_subcommand("distance", "closed-form distances");
  auto* s_geodesic = app.add_subcommand("geodesic", "optimize a discrete geodesic");
  auto* s_gap = app.add_subcommand("gap", "localization gap on Pi ∩ D vs Pi");
  auto* s_sweep = app.add_subcommand("sweep", "gap sweeps over pair families");
  auto* s_bergman = app.add_subcommand("bergman", "numeric Bergman kernel and metric");
  auto* s_verify = app.add_subcommand("verify", "run the verification suites");
  distance.attach(s_distance);
  geodesic.attach(s_geodesic);
  gap.attach(s_gap);
  sweep.attach(s_sweep);
  bergman.attach(s_bergman);
  verify.attach(s_verify);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidationError;
  }

  try {
    if (s_distance->parsed()) return distance.run(out);
    if (s_geodesic->parsed()) return geodesic.run(out);
    if (s_gap->parsed()) return gap.run(out);
    if (s_sweep->parsed()) return sweep.run(out);
    if (s_bergman->parsed()) return bergman.run(out);
    return verify.run(out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace invlab::cli
