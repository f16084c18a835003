#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "records.hpp"
#include "vacbrown/asymptotics.hpp"
#include "vacbrown/oracle.hpp"
#include "vacbrown/physics.hpp"

namespace vacbrown::cli {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Suffix {
  std::string_view name;
  double scale;
};

constexpr Suffix kLengthSuffixes[] = {{"m", 1.0},    {"cm", 1e-2}, {"mm", 1e-3},
                                      {"um", 1e-6},  {"nm", 1e-9}, {"A", 1e-10}};
constexpr Suffix kTimeSuffixes[] = {{"s", 1.0},    {"ms", 1e-3},  {"us", 1e-6},
                                    {"ns", 1e-9},  {"ps", 1e-12}, {"fs", 1e-15}};

template <std::size_t N>
double parse_with_units(std::string_view text, const Suffix (&suffixes)[N],
                        const std::optional<ParticleParams>& particle, bool is_time) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw DomainError("not a number: " + s);
  const std::string_view unit(end);
  if (unit.empty()) return v;
  for (const auto& suf : suffixes) {
    if (unit != suf.name) continue;
    if (!particle) throw DomainError("value '" + s + "' carries a unit; --particle is required");
    return is_time ? time_to_natural(v * suf.scale, *particle) : length_to_natural(v * suf.scale, *particle);
  }
  throw DomainError("unknown unit suffix in '" + s + "'");
}

std::optional<ParticleParams> lookup_particle(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto p = particle_by_name(name);
  if (!p) throw DomainError("unknown particle: " + name);
  return p;
}

DispersionKind lookup_kind(const std::string& name) {
  auto k = parse_kind(name);
  if (!k) throw DomainError("unknown quantity: " + name);
  return *k;
}

std::string report_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  std::ostringstream ss;
  ss << in.rdbuf();
  return oracle::fnv1a_hex(ss.str());
}

json provenance(const std::string& report_path) {
  json p = {{"report_version", oracle::kReportVersion}, {"report_path", report_path}};
  const auto hash = report_hash(report_path);
  p["report_hash"] = hash.empty() ? json(nullptr) : json(hash);
  return p;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json with_unit(double v, const std::string& unit) { return {{"value", number_or_null(v)}, {"unit", unit}}; }

// Options shared by every evaluating command.
struct Common {
  std::string quantity = "dv2-normal";
  std::string a, z, t;
  std::string particle;
  std::string format;
  std::string units = "si";
  std::string report = kDefaultReportPath;
  double rel_tol = SeriesControl{}.rel_tol;
  std::int64_t n_max = SeriesControl{}.n_max;
  double exclusion = SeriesControl{}.exclusion;

  SeriesControl control() const {
    SeriesControl c;
    c.rel_tol = rel_tol;
    c.n_max = n_max;
    c.exclusion = exclusion;
    validate(c);
    return c;
  }
  OutputUnits output_units() const {
    if (units == "si") return OutputUnits::si;
    if (units == "natural") return OutputUnits::natural;
    throw DomainError("--units must be si or natural");
  }
};

void add_series_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--rel-tol", c.rel_tol, "Relative tolerance of the image sums");
  cmd->add_option("--n-max", c.n_max, "Largest image index before giving up");
  cmd->add_option("--exclusion", c.exclusion, "Relative light-cone exclusion window");
  cmd->add_option("--report", c.report, "Adjudication report path (hashed into JSON output)");
}

void add_point_options(CLI::App* cmd, Common& c, bool need_a = true, bool need_t = true) {
  auto* a = cmd->add_option("--a", c.a, "Plate separation (natural units or with suffix)");
  cmd->add_option("--z", c.z, "Distance from the plate at z = 0")->required();
  auto* t = cmd->add_option("--t", c.t, "Elapsed time (natural units or with suffix)");
  if (need_a) a->required();
  if (need_t) t->required();
  cmd->add_option("--particle", c.particle, "Particle for SI units and physical values (electron)");
  cmd->add_option("--units", c.units, "Physical output units: si or natural");
}

struct PointResult {
  Record record;
  json j;
};

PointResult evaluate(DispersionKind kind, double a, double z, double t, const Common& c,
                     const std::optional<ParticleParams>& particle) {
  const EvalPoint p(Geometry(a, z), t);
  const auto v = dispersion_exact(kind, p, c.control());
  const auto regime = to_string(recommend_regime(p).tag);
  PointResult out;
  out.record = {"", kNaN, v.value, kNaN, v.tail_estimate, v.n_used, v.singularity.distance, regime, "ok"};
  out.j = {{"quantity", to_string(kind)},
           {"a", a},
           {"z", z},
           {"t", t},
           {"reduced", v.value},
           {"tail_estimate", v.tail_estimate},
           {"n_used", v.n_used},
           {"singularity_distance", number_or_null(v.singularity.distance)},
           {"regime", regime},
           {"status", "ok"}};
  if (particle) {
    const auto phys = physicalize(v.value, kind, *particle, UnitSystem::for_particle(*particle), c.output_units());
    out.record.physical = phys.value;
    out.j["physical"] = with_unit(phys.value, phys.unit);
  } else {
    out.j["physical"] = nullptr;
  }
  out.j["provenance"] = provenance(c.report);
  return out;
}

std::string render(const std::vector<Record>& rows, const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "csv") return to_csv(rows);
  throw DomainError("--format must be csv or json");
}

// eval ----------------------------------------------------------------------

CommandResult cmd_eval(const Common& c) {
  const auto particle = lookup_particle(c.particle);
  const auto kind = lookup_kind(c.quantity);
  const double a = parse_length(c.a, particle);
  const double z = parse_length(c.z, particle);
  const double t = parse_time(c.t, particle);
  auto r = evaluate(kind, a, z, t, c, particle);
  r.record.variable = "t";
  r.record.value = t;
  r.j["command"] = "eval";
  return {kOk, render({r.record}, r.j, c.format.empty() ? "json" : c.format), ""};
}

// sweep ---------------------------------------------------------------------

struct SweepOptions {
  std::string variable;
  std::string start, stop;
  int steps = 0;
  std::string scale = "linear";
  unsigned threads = 0;
};

std::vector<double> grid(double start, double stop, int steps, const std::string& scale) {
  if (!(start < stop)) throw DomainError("sweep needs start < stop");
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");
  std::vector<double> g(static_cast<std::size_t>(steps));
  if (scale == "linear") {
    for (int i = 0; i < steps; ++i) g[i] = start + (stop - start) * i / (steps - 1);
  } else if (scale == "log") {
    if (!(start > 0.0)) throw DomainError("log sweep needs start > 0");
    const double l0 = std::log(start), l1 = std::log(stop);
    for (int i = 0; i < steps; ++i) g[i] = std::exp(l0 + (l1 - l0) * i / (steps - 1));
  } else {
    throw DomainError("--scale must be linear or log");
  }
  g.front() = start;
  g.back() = stop;
  return g;
}

CommandResult cmd_sweep(const Common& c, const SweepOptions& s) {
  const auto particle = lookup_particle(c.particle);
  const auto kind = lookup_kind(c.quantity);
  const bool is_t = s.variable == "t";
  if (s.variable != "z" && s.variable != "t" && s.variable != "a")
    throw DomainError("--var must be z, t or a");
  const auto parse_var = [&](const std::string& v) { return is_t ? parse_time(v, particle) : parse_length(v, particle); };
  const auto values = grid(parse_var(s.start), parse_var(s.stop), s.steps, s.scale);
  const auto fixed = [&](const std::string& name, const std::string& text, bool time) {
    if (s.variable == name) return kNaN;
    if (text.empty()) throw DomainError("--" + name + " is required unless it is swept");
    return time ? parse_time(text, particle) : parse_length(text, particle);
  };
  const double a0 = fixed("a", c.a, false);
  const double z0 = fixed("z", c.z, false);
  const double t0 = fixed("t", c.t, true);

  std::vector<Record> rows(values.size());
  std::vector<json> objs(values.size());
  std::vector<int> codes(values.size(), kOk);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < values.size();) {
      const double v = values[i];
      const double a = s.variable == "a" ? v : a0;
      const double z = s.variable == "z" ? v : z0;
      const double t = is_t ? v : t0;
      try {
        auto r = evaluate(kind, a, z, t, c, particle);
        rows[i] = r.record;
        objs[i] = std::move(r.j);
      } catch (const std::exception& e) {
        double dist = kNaN;
        if (const auto* se = dynamic_cast<const SingularWindowError*>(&e)) dist = se->report().distance;
        rows[i] = {"", kNaN, kNaN, kNaN, kNaN, 0, dist, "", status_for(e)};
        objs[i] = {{"a", a}, {"z", z}, {"t", t}, {"status", status_for(e)}, {"message", e.what()}};
        codes[i] = exit_code_for(e);
      }
      rows[i].variable = s.variable;
      rows[i].value = v;
    }
  };
  unsigned n_threads = s.threads ? s.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(values.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = kOk;
  if (std::none_of(codes.begin(), codes.end(), [](int x) { return x == kOk; })) code = codes.front();
  json j = {{"command", "sweep"}, {"quantity", to_string(kind)}, {"variable", s.variable},
            {"scale", s.scale}, {"rows", objs}, {"provenance", provenance(c.report)}};
  return {code, render(rows, j, c.format.empty() ? "csv" : c.format), ""};
}

// compare -------------------------------------------------------------------

double rel_dev(double x, double exact) { return std::abs(x - exact) / std::abs(exact); }

CommandResult cmd_compare(const Common& c, bool with_oracle, std::int64_t oracle_images) {
  const auto particle = lookup_particle(c.particle);
  const auto kind = lookup_kind(c.quantity);
  const double a = parse_length(c.a, particle);
  const double z = parse_length(c.z, particle);
  const double t = parse_time(c.t, particle);
  const EvalPoint p(Geometry(a, z), t);
  const auto exact = dispersion_exact(kind, p, c.control());

  json j = {{"command", "compare"}, {"quantity", to_string(kind)}, {"a", a}, {"z", z}, {"t", t},
            {"exact", {{"value", exact.value}, {"tail_estimate", exact.tail_estimate}, {"n_used", exact.n_used}}},
            {"regime", to_string(recommend_regime(p).tag)}};
  std::vector<Record> rows{{"exact", t, exact.value, kNaN, exact.tail_estimate, exact.n_used,
                            exact.singularity.distance, to_string(recommend_regime(p).tag), "ok"}};
  const auto add = [&](const char* name, const std::function<double()>& f) {
    try {
      const double v = f();
      j[name] = {{"value", v}, {"rel_dev_vs_exact", rel_dev(v, exact.value)}};
      rows.push_back({name, t, v, kNaN, rel_dev(v, exact.value), 0, exact.singularity.distance, "", "ok"});
    } catch (const RegimeError& e) {
      j[name] = {{"value", nullptr}, {"reason", e.what()}};
      rows.push_back({name, t, kNaN, kNaN, kNaN, 0, exact.singularity.distance, "", "regime"});
    }
  };
  add("large_a", [&] { return approx_large_a(kind, p).value; });
  add("large_a_far", [&] { return approx_large_a_far(kind, p).value; });
  add("large_t", [&] { return approx_large_t(kind, p).value; });
  if (with_oracle) {
    const auto q = oracle::dispersion_via_quadrature(kind, p, oracle_images);
    // The oracle has no tail; compare it with the exact partial sum over the same images.
    const auto partial = dispersion_partial(kind, p, oracle_images, c.exclusion);
    j["oracle"] = {{"value", q.value},
                   {"error", q.error},
                   {"n_images", oracle_images},
                   {"finite_part", q.finite_part},
                   {"rel_dev_vs_exact", rel_dev(q.value, exact.value)},
                   {"rel_dev_vs_partial", rel_dev(q.value, partial.value)}};
    rows.push_back({"oracle", t, q.value, kNaN, q.error, oracle_images, exact.singularity.distance, "", "ok"});
  }
  j["provenance"] = provenance(c.report);
  return {kOk, render(rows, j, c.format.empty() ? "json" : c.format), ""};
}

// physics -------------------------------------------------------------------

CommandResult cmd_physics(const Common& c, bool single_plate) {
  const auto particle = lookup_particle(c.particle.empty() ? "electron" : c.particle);
  const double z = parse_length(c.z, particle);
  if (!(z > 0.0)) throw DomainError("z must be positive");
  const double z_m = natural_to_length(z, *particle);
  json j = {{"command", "physics"}, {"particle", c.particle.empty() ? "electron" : c.particle}, {"z", z}};
  j["single_plate"] = {
      {"late_normal_velocity",
       with_unit(dispersion_prefactor(*particle) * single_plate_late_normal_velocity(z), "c^2")},
      {"effective_temperature", with_unit(single_plate_effective_temperature(z_m, *particle), "K")},
      {"falling_time", {{"natural", with_unit(falling_time(z, *particle), "hbar/(mc^2)")},
                        {"si", with_unit(falling_time_si(z_m, *particle), "s")}}}};
  j["falling_time_threshold_separation"] = with_unit(falling_time_threshold_m(*particle), "m");

  if (!single_plate && !c.a.empty()) {
    const double a = parse_length(c.a, particle);
    const Geometry g(a, z);
    j["a"] = a;
    const double zmin = std::min(z, a - z);
    j["falling_time"] = {{"natural", with_unit(falling_time(zmin, *particle), "hbar/(mc^2)")},
                         {"si", with_unit(falling_time_si(natural_to_length(zmin, *particle), *particle), "s")}};
    if (!c.t.empty()) {
      const double t = parse_time(c.t, particle);
      const EvalPoint p(g, t);
      j["t"] = t;
      const auto v = dispersion_exact(kNormalVelocity, p, c.control());
      const double dv2 = dispersion_prefactor(*particle) * v.value;
      j["normal_velocity"] = with_unit(dv2, "c^2");
      j["effective_temperature"] = with_unit(effective_temperature(dv2, *particle), "K");
      if (t > 10.0 * a) j["amplification_ratio"] = amplification_ratio(g, t, c.control());
      else j["amplification_ratio"] = nullptr;
      const auto rep = validity_check(p, *particle);
      j["validity"] = {{"falling_time_ok", rep.falling_time_ok},
                       {"displacement_ok", rep.displacement_ok},
                       {"falling_time_margin", rep.falling_time_margin},
                       {"displacement_margin", rep.displacement_margin}};
    }
  }
  j["provenance"] = provenance(c.report);
  return {kOk, j.dump(2) + "\n", ""};
}

// adjudicate ----------------------------------------------------------------

CommandResult cmd_adjudicate(const std::string& path) {
  const auto report = oracle::adjudication_report();
  const std::string text = report.dump(2) + "\n";
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write report to " + path);
  out << text;
  out.close();
  const bool ok = report["all_passed"].get<bool>();
  json j = {{"command", "adjudicate"}, {"report_path", path}, {"report_version", oracle::kReportVersion},
            {"report_hash", oracle::fnv1a_hex(text)}, {"all_passed", ok}};
  return {ok ? kOk : kFailed, j.dump(2) + "\n", ""};
}

}  // namespace

double parse_length(std::string_view text, const std::optional<ParticleParams>& particle) {
  return parse_with_units(text, kLengthSuffixes, particle, false);
}

double parse_time(std::string_view text, const std::optional<ParticleParams>& particle) {
  return parse_with_units(text, kTimeSuffixes, particle, true);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SingularWindowError*>(&e)) return kSingular;
  if (dynamic_cast<const ConvergenceError*>(&e)) return kConvergence;
  if (dynamic_cast<const QuadratureError*>(&e)) return kConvergence;
  if (dynamic_cast<const RegimeError*>(&e)) return kRegime;
  return kDomain;
}

std::string status_for(const std::exception& e) {
  switch (exit_code_for(e)) {
    case kSingular: return "singular";
    case kConvergence: return "convergence";
    case kRegime: return "regime";
    default: return "domain";
  }
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Vacuum-fluctuation dispersions of a charge between two conducting plates"};
  app.require_subcommand(1);

  Common c;
  auto* eval = app.add_subcommand("eval", "Evaluate one dispersion at a point");
  eval->add_option("--quantity", c.quantity, "dv2-parallel, dv2-normal, dx2-parallel, dx2-normal")->required();
  add_point_options(eval, c);
  eval->add_option("--format", c.format, "json (default) or csv");
  add_series_options(eval, c);

  SweepOptions s;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a dispersion over a grid");
  sweep->add_option("--quantity", c.quantity)->required();
  sweep->add_option("--var", s.variable, "Swept variable: z, t or a")->required();
  sweep->add_option("--start", s.start)->required();
  sweep->add_option("--stop", s.stop)->required();
  sweep->add_option("--steps", s.steps)->required();
  sweep->add_option("--scale", s.scale, "linear or log");
  sweep->add_option("--threads", s.threads, "Worker threads (0: all cores)");
  sweep->add_option("--a", c.a);
  sweep->add_option("--z", c.z);
  sweep->add_option("--t", c.t);
  sweep->add_option("--particle", c.particle);
  sweep->add_option("--units", c.units);
  sweep->add_option("--format", c.format, "csv (default) or json");
  add_series_options(sweep, c);

  bool with_oracle = false;
  std::int64_t oracle_images = 400;
  auto* compare = app.add_subcommand("compare", "Exact sums against the asymptotic forms and the oracle");
  compare->add_option("--quantity", c.quantity)->required();
  add_point_options(compare, c);
  compare->add_flag("--oracle", with_oracle, "Also run the quadrature oracle");
  compare->add_option("--oracle-images", oracle_images, "Images per side in the oracle");
  compare->add_option("--format", c.format, "json (default) or csv");
  add_series_options(compare, c);

  bool single_plate = false;
  auto* physics = app.add_subcommand("physics", "Effective temperature, amplification and validity");
  add_point_options(physics, c, false, false);
  physics->add_flag("--single-plate", single_plate, "Ignore the second plate");
  add_series_options(physics, c);

  std::string report_path = kDefaultReportPath;
  auto* adjudicate = app.add_subcommand("adjudicate", "Run the oracle certification grid and write the report");
  adjudicate->add_option("--report", report_path, "Output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream out, err;
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kDomain, out.str(), err.str()};
  }

  try {
    if (*eval) return cmd_eval(c);
    if (*sweep) return cmd_sweep(c, s);
    if (*compare) return cmd_compare(c, with_oracle, oracle_images);
    if (*physics) return cmd_physics(c, single_plate);
    return cmd_adjudicate(report_path);
  } catch (const std::exception& e) {
    return {exit_code_for(e), "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace vacbrown::cli
