#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "abm/errors.hpp"
#include "abm/io/output.hpp"
#include "abm/poly/problem.hpp"
#include "abm/tov/search.hpp"
#include "abm/tov/star.hpp"

namespace abm::cli {

using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

struct Output {
  std::string path;
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, Output& o) {
  cmd->add_option("--out", o.path, "Output file (stdout when omitted)");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

void write_manifest(const std::string& data_path, const json& manifest) {
  std::ofstream os(data_path + ".manifest.json");
  if (!os) throw std::runtime_error("cannot write manifest for " + data_path);
  os << manifest.dump(2) << '\n';
}

/// Writes `text` to the --out file, or to `out` when no file was named.
void emit(const Output& o, const std::string& text, const json& manifest, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream os(o.path);
  if (!os) throw std::runtime_error("cannot open output file " + o.path);
  os << text;
  write_manifest(o.path, manifest);
}

struct PolyArgs {
  std::string mode = "abm-adaptive";
  int order = 0;
  double dx = 0.25;
  double tol = 1e-8;
  double dx_min = 0.0;
  double growth = 3.0;
  std::size_t max_steps = 1'000'000;
  double x0 = 0.5;
  double y0 = 1.0;
  double x_end = 5.0;
  Output output;
};

struct TovArgs {
  double pc = 0.0;
  int order = 10;
  double tol = 1e-8;
  double dx0 = 10.0;
  double dx_min = 10.0;
  double growth = 3.0;
  std::size_t max_steps = 200'000;
  Output output;
};

struct SieveArgs {
  double lo = 1e35;
  double hi = 1e36;
  int order = 6;
  double tol = 1e-8;
  double bracket_tol = 1e-5;
  double dx0 = 10.0;
  double dx_min = 10.0;
  int jobs = 1;
  std::string out;
};

struct SweepArgs {
  std::string orders;
  std::string tols = "1e-2,1e-3,1e-4,1e-5,1e-6,1e-7,1e-8";
  double pc = 3.631382e35;
  double ref_mass = 0.0;
  double ref_radius = 0.0;
  int ref_order = 10;
  double ref_tol = 1e-8;
  double dx0 = 10.0;
  double dx_min = 10.0;
  int jobs = 1;
  Output output;
};

IntegratorConfig star_config(int order, double tol, double dx0, double dx_min) {
  IntegratorConfig c = tov::default_star_config(order, tol);
  c.dx_initial = dx0;
  c.dx_min = dx_min;
  return c;
}

int cmd_poly(const PolyArgs& a, const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  poly::PolyCase c;
  c.x0 = a.x0;
  c.y0 = a.y0;
  c.x_end = a.x_end;
  c.config = IntegratorConfig{.order_ab = a.order,
                              .target_correction = a.tol,
                              .dx_initial = a.dx,
                              .dx_min = a.dx_min,
                              .growth_cap = a.growth,
                              .mode = parse_mode(a.mode),
                              .max_steps = a.max_steps};
  c.config.validate();
  if (!(c.x_end > c.x0)) throw ConfigError("--xend must exceed --x0");

  const poly::PolyRun run = poly::run_poly_case(c);
  const json resolved{{"integrator", io::to_json(c.config)},
                      {"problem", {{"x0", c.x0}, {"y0", c.y0}, {"x_end", c.x_end}}}};
  const json summary = io::poly_summary(run);

  std::ostringstream data;
  if (a.output.format == "json") {
    data << json{{"resolved", resolved}, {"summary", summary}, {"trajectory", io::poly_rows_json(run.rows)}}
                .dump(2)
         << '\n';
  } else {
    io::write_poly_csv(data, run.rows);
  }
  emit(a.output, data.str(), io::make_manifest("poly", args, resolved), out);
  (a.output.path.empty() ? err : out) << summary.dump() << '\n';

  if (!run.result.ok()) {
    err << "integration failed: " << run.result.message << '\n';
    return kRuntimeFailure;
  }
  return kSuccess;
}

int cmd_tov(const TovArgs& a, const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  if (!(a.pc > 0.0)) throw ConfigError("--pc must be a positive central pressure in erg/cm^3");
  const IntegratorConfig cfg = star_config(a.order, a.tol, a.dx0, a.dx_min);
  IntegratorConfig run_cfg = cfg;
  run_cfg.growth_cap = a.growth;
  run_cfg.max_steps = a.max_steps;
  run_cfg.validate();

  const tov::PhysicalConstants k;
  const tov::StarSolution star = tov::integrate_star(a.pc, run_cfg, k);
  const json resolved{{"integrator", io::to_json(run_cfg)},
                      {"constants", io::to_json(k)},
                      {"P_central_erg_cm3", a.pc}};
  const json summary = io::star_summary(star, k);

  std::ostringstream data;
  if (a.output.format == "json") {
    data << json{{"resolved", resolved},
                 {"summary", summary},
                 {"trajectory", io::star_rows_json(star.trajectory, run_cfg.order_ab)}}
                .dump(2)
         << '\n';
  } else {
    io::write_star_csv(data, star.trajectory);
  }
  emit(a.output, data.str(), io::make_manifest("tov", args, resolved), out);
  (a.output.path.empty() ? err : out) << summary.dump() << '\n';

  if (star.status == tov::StarStatus::Horizon) {
    err << "horizon formation: " << star.message << '\n';
    return kRuntimeFailure;
  }
  if (!star.ok()) {
    err << "star integration failed (" << tov::to_string(star.status) << "): " << star.message
        << '\n';
    return kRuntimeFailure;
  }
  return kSuccess;
}

int cmd_sieve(const SieveArgs& a, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  if (!(a.lo > 0.0) || !(a.lo < a.hi)) throw ConfigError("need 0 < --lo < --hi");
  if (!(a.bracket_tol > 0.0)) throw ConfigError("--bracket-tol must be positive");
  if (a.jobs < 1) throw ConfigError("--jobs must be at least 1");
  const IntegratorConfig cfg = star_config(a.order, a.tol, a.dx0, a.dx_min);
  cfg.validate();
  const tov::PhysicalConstants k;

  tov::SieveResult r;
  try {
    r = tov::trinary_sieve(a.lo, a.hi, cfg, k, a.bracket_tol, a.jobs);
  } catch (const std::runtime_error& e) {
    err << "sieve failed: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  const json resolved{{"integrator", io::to_json(cfg)},
                      {"constants", io::to_json(k)},
                      {"lo", a.lo},
                      {"hi", a.hi},
                      {"bracket_tol", a.bracket_tol}};
  const json summary = io::sieve_summary(r, k);
  out << summary.dump() << '\n';
  if (!a.out.empty()) {
    std::ofstream os(a.out);
    if (!os) throw std::runtime_error("cannot open output file " + a.out);
    os << json{{"resolved", resolved}, {"summary", summary}}.dump(2) << '\n';
    write_manifest(a.out, io::make_manifest("sieve", args, resolved));
  }
  return kSuccess;
}

int cmd_sweep(const SweepArgs& a, const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
  tov::SweepRequest req;
  try {
    req.orders = parse_orders(a.orders);
    req.tolerances = parse_reals(a.tols);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(a.pc > 0.0)) throw ConfigError("--pc must be positive");
  if (a.jobs < 1) throw ConfigError("--jobs must be at least 1");
  req.p_central = a.pc;
  req.base = star_config(req.orders.front(), req.tolerances.front(), a.dx0, a.dx_min);
  req.base.validate();

  if (a.ref_mass > 0.0 && a.ref_radius > 0.0) {
    req.reference = {a.ref_mass, a.ref_radius};
  } else {
    const IntegratorConfig ref_cfg = star_config(a.ref_order, a.ref_tol, a.dx0, a.dx_min);
    const tov::StarSolution ref = tov::integrate_star(a.pc, ref_cfg, req.constants, false);
    if (!ref.ok()) {
      err << "reference star failed: " << ref.message << '\n';
      return kRuntimeFailure;
    }
    req.reference = {ref.mass, ref.radius};
  }

  const std::vector<tov::SweepCell> cells = tov::parameter_sweep(req, a.jobs);
  const json resolved{{"integrator", io::to_json(req.base)},
                      {"constants", io::to_json(req.constants)},
                      {"orders", req.orders},
                      {"tolerances", req.tolerances},
                      {"P_central_erg_cm3", req.p_central},
                      {"reference", {{"M_g", req.reference.mass}, {"R_cm", req.reference.radius}}}};

  std::ostringstream data;
  if (a.output.format == "json") {
    data << json{{"resolved", resolved}, {"cells", io::sweep_rows_json(cells)}}.dump(2) << '\n';
  } else {
    io::write_sweep_csv(data, cells);
  }
  emit(a.output, data.str(), io::make_manifest("sweep", args, resolved), out);

  const auto ok_cells = std::count_if(cells.begin(), cells.end(), [](const auto& c) { return c.ok(); });
  (a.output.path.empty() ? err : out)
      << json{{"cells", cells.size()}, {"ok", ok_cells}, {"failed", cells.size() - ok_cells}}.dump() << '\n';
  for (const auto& c : cells) {
    if (!c.ok()) {
      err << "cell order " << c.order << " tol " << c.tolerance << " failed: " << c.message << '\n';
    }
  }
  return ok_cells > 0 ? kSuccess : kRuntimeFailure;
}

std::vector<std::string> replace_out(std::vector<std::string> args, const std::string& path) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--out" && i + 1 < args.size()) {
      args[i + 1] = path;
      return args;
    }
    if (args[i].rfind("--out=", 0) == 0) {
      args[i] = "--out=" + path;
      return args;
    }
  }
  args.push_back("--out");
  args.push_back(path);
  return args;
}

}  // namespace

std::vector<int> parse_orders(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("--orders must not be empty");
  std::vector<int> out;
  if (const auto dots = s.find(".."); dots != std::string::npos) {
    const int a = std::stoi(s.substr(0, dots));
    const int b = std::stoi(s.substr(dots + 2));
    if (a > b) throw std::invalid_argument("--orders range must be ascending");
    for (int o = a; o <= b; ++o) out.push_back(o);
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) throw std::invalid_argument("empty entry in --orders");
      out.push_back(std::stoi(item));
    }
  }
  return out;
}

std::vector<double> parse_reals(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("list of values must not be empty");
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw std::invalid_argument("empty entry in list");
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Adaptive Adams-Bashforth-Moulton integrator: polynomial study and neutron-star models",
               std::string(io::kToolName)};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(io::kToolVersion));

  PolyArgs poly_args;
  auto* poly = app.add_subcommand("poly", "Integrate the quartic test problem");
  poly->add_option("--mode", poly_args.mode, "Integration mode")
      ->check(CLI::IsMember({"ab-fixed", "abm-fixed", "abm-adaptive"}))
      ->capture_default_str();
  poly->add_option("--order", poly_args.order, "Adams-Bashforth order N (corrector N+1)")
      ->required();
  poly->add_option("--dx", poly_args.dx, "Step size (initial step when adaptive)")
      ->capture_default_str();
  poly->add_option("--tol", poly_args.tol, "Target fractional correction E")->capture_default_str();
  poly->add_option("--dxmin", poly_args.dx_min, "Minimum step (adaptive)")->capture_default_str();
  poly->add_option("--growth", poly_args.growth, "Step growth cap")->capture_default_str();
  poly->add_option("--max-steps", poly_args.max_steps, "Step limit")->capture_default_str();
  poly->add_option("--x0", poly_args.x0, "Initial abscissa")->capture_default_str();
  poly->add_option("--y0", poly_args.y0, "Initial value")->capture_default_str();
  poly->add_option("--xend", poly_args.x_end, "Final abscissa")->capture_default_str();
  add_output_flags(poly, poly_args.output);

  TovArgs tov_args;
  auto* tov = app.add_subcommand("tov", "Integrate one neutron star");
  tov->add_option("--pc", tov_args.pc, "Central pressure, erg/cm^3")->required();
  tov->add_option("--order", tov_args.order, "Adams-Bashforth order N")->capture_default_str();
  tov->add_option("--tol", tov_args.tol, "Target fractional correction E")->capture_default_str();
  tov->add_option("--dx0", tov_args.dx0, "Initial step, cm")->capture_default_str();
  tov->add_option("--dxmin", tov_args.dx_min, "Minimum step, cm")->capture_default_str();
  tov->add_option("--growth", tov_args.growth, "Step growth cap")->capture_default_str();
  tov->add_option("--max-steps", tov_args.max_steps, "Step limit")->capture_default_str();
  add_output_flags(tov, tov_args.output);

  SieveArgs sieve_args;
  auto* sieve = app.add_subcommand("sieve", "Ternary search for the maximum-mass central pressure");
  sieve->add_option("--lo", sieve_args.lo, "Lower central pressure, erg/cm^3")->capture_default_str();
  sieve->add_option("--hi", sieve_args.hi, "Upper central pressure, erg/cm^3")->capture_default_str();
  sieve->add_option("--order", sieve_args.order, "Adams-Bashforth order N")->capture_default_str();
  sieve->add_option("--tol", sieve_args.tol, "Target fractional correction E")->capture_default_str();
  sieve->add_option("--bracket-tol", sieve_args.bracket_tol, "Relative bracket width to stop at")
      ->capture_default_str();
  sieve->add_option("--dx0", sieve_args.dx0, "Initial step, cm")->capture_default_str();
  sieve->add_option("--dxmin", sieve_args.dx_min, "Minimum step, cm")->capture_default_str();
  sieve->add_option("--jobs", sieve_args.jobs, "Worker threads")->capture_default_str();
  sieve->add_option("--out", sieve_args.out, "Write the summary JSON here");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Order x tolerance table of single-star runs");
  sweep->add_option("--orders", sweep_args.orders, "Orders as A..B or a comma list")->required();
  sweep->add_option("--tols", sweep_args.tols, "Comma-separated tolerances")->capture_default_str();
  sweep->add_option("--pc", sweep_args.pc, "Central pressure, erg/cm^3")->capture_default_str();
  sweep->add_option("--ref-mass", sweep_args.ref_mass, "Reference mass, g");
  sweep->add_option("--ref-radius", sweep_args.ref_radius, "Reference radius, cm");
  sweep->add_option("--ref-order", sweep_args.ref_order,
                    "Order of the reference run when no reference is given")
      ->capture_default_str();
  sweep->add_option("--ref-tol", sweep_args.ref_tol, "Tolerance of the reference run")
      ->capture_default_str();
  sweep->add_option("--dx0", sweep_args.dx0, "Initial step, cm")->capture_default_str();
  sweep->add_option("--dxmin", sweep_args.dx_min, "Minimum step, cm")->capture_default_str();
  sweep->add_option("--jobs", sweep_args.jobs, "Worker threads")->capture_default_str();
  add_output_flags(sweep, sweep_args.output);

  std::string manifest_path;
  std::string replay_out;
  auto* replay = app.add_subcommand("replay", "Rerun the command recorded in a manifest");
  replay->add_option("manifest", manifest_path, "Manifest JSON file")->required();
  replay->add_option("--out", replay_out, "Write to this path instead of the recorded one");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << io::kToolVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsageError;
  }

  try {
    if (*poly) return cmd_poly(poly_args, args, out, err);
    if (*tov) return cmd_tov(tov_args, args, out, err);
    if (*sieve) return cmd_sieve(sieve_args, args, out, err);
    if (*sweep) return cmd_sweep(sweep_args, args, out, err);
    if (*replay) {
      std::ifstream is(manifest_path);
      if (!is) throw UsageError("cannot read manifest " + manifest_path);
      const json m = json::parse(is);
      auto recorded = m.at("args").get<std::vector<std::string>>();
      if (recorded.empty() || recorded.front() == "replay") {
        throw UsageError("manifest does not record a runnable command");
      }
      if (!replay_out.empty()) recorded = replace_out(std::move(recorded), replay_out);
      return run(recorded, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << '\n';
    return kUsageError;
  } catch (const json::exception& e) {
    err << "bad manifest: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kUsageError;
}

}  // namespace abm::cli
