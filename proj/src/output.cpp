#include "abm/io/output.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <chrono>
#include <ctime>

namespace abm::io {

using nlohmann::json;

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

void write_poly_csv(std::ostream& os, std::span<const poly::PolyRow> rows) {
  os << kPolyCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.i << ',' << format_real(r.x) << ',' << format_real(r.dx) << ',' << format_real(r.y)
       << ',' << format_real(r.epsilon_max) << ',' << format_real(r.y_exact) << ','
       << format_real(r.error) << '\n';
  }
}

std::string star_flags(const tov::StarStep& step, int order) {
  std::string out;
  auto add = [&out](std::string_view flag) {
    if (!out.empty()) out += '|';
    out += flag;
  };
  if (step.i > 0 && step.effective_order < order) add("bootstrap");
  if (step.at_min_step) add("min_step");
  if (step.surface_clamped) add("surface_clamped");
  if (step.terminal) add("terminal");
  return out;
}

void write_star_csv(std::ostream& os, std::span<const tov::StarStep> rows) {
  int order = 0;
  for (const auto& r : rows) order = std::max(order, r.effective_order);
  os << kStarCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.i << ',' << format_real(r.r) << ',' << format_real(r.dr) << ',' << format_real(r.m)
       << ',' << format_real(r.p) << ',' << format_real(r.epsilon_max) << ','
       << star_flags(r, order) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, std::span<const tov::SweepCell> cells) {
  os << kSweepCsvHeader << '\n';
  for (const auto& c : cells) {
    os << c.order << ',' << format_real(c.tolerance) << ',' << c.steps << ','
       << format_real(c.mass_msun) << ',' << format_real(c.radius_km) << ','
       << format_real(c.rel_dm) << ',' << format_real(c.rel_dr) << ',' << tov::to_string(c.status)
       << '\n';
  }
}

json to_json(const IntegratorConfig& c) {
  return json{{"order_ab", c.order_ab},
              {"order_am", c.order_ab + 1},
              {"target_correction", c.target_correction},
              {"dx_initial", c.dx_initial},
              {"dx_min", c.dx_min},
              {"growth_cap", c.growth_cap},
              {"mode", std::string(to_string(c.mode))},
              {"max_steps", c.max_steps}};
}

json to_json(const tov::PhysicalConstants& k) {
  return json{{"neutron_mass_g", k.neutron_mass},
              {"speed_of_light_cm_s", k.speed_of_light},
              {"planck_erg_s", k.planck},
              {"gravitational_cgs", k.gravitational},
              {"solar_mass_g", k.solar_mass}};
}

json poly_summary(const poly::PolyRun& run) {
  const auto& last = run.rows.back();
  return json{{"status", std::string(to_string(run.result.status))},
              {"message", run.result.message},
              {"steps", run.result.steps},
              {"derivative_evaluations", run.result.derivative_evaluations},
              {"x_final", last.x},
              {"y_final", last.y},
              {"y_exact", last.y_exact},
              {"error", last.error}};
}

json poly_rows_json(std::span<const poly::PolyRow> rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back(json{{"i", r.i},
                       {"x", r.x},
                       {"dx", r.dx},
                       {"y", r.y},
                       {"epsilon_max", r.epsilon_max},
                       {"y_exact", r.y_exact},
                       {"error", r.error}});
  }
  return out;
}

json star_summary(const tov::StarSolution& star, const tov::PhysicalConstants& k) {
  return json{{"status", std::string(tov::to_string(star.status))},
              {"message", star.message},
              {"P_central_erg_cm3", star.p_central},
              {"M_g", star.mass},
              {"M_msun", star.mass_msun(k)},
              {"R_cm", star.radius},
              {"R_km", star.radius_km()},
              {"steps", star.steps},
              {"derivative_evaluations", star.derivative_evaluations}};
}

json star_rows_json(std::span<const tov::StarStep> rows, int order) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back(json{{"i", r.i},
                       {"r_cm", r.r},
                       {"dr_cm", r.dr},
                       {"m_g", r.m},
                       {"P_erg_cm3", r.p},
                       {"epsilon_max", r.epsilon_max},
                       {"flags", star_flags(r, order)}});
  }
  return out;
}

json sieve_summary(const tov::SieveResult& r, const tov::PhysicalConstants& k) {
  return json{{"P_central_erg_cm3", r.p_central},
              {"M_g", r.mass},
              {"M_msun", r.mass / k.solar_mass},
              {"R_cm", r.radius},
              {"R_km", r.radius / tov::kCmPerKm},
              {"steps", r.steps},
              {"bracket_lo", r.bracket_lo},
              {"bracket_hi", r.bracket_hi},
              {"iterations", r.iterations},
              {"star_integrations", r.star_integrations}};
}

json sweep_rows_json(std::span<const tov::SweepCell> cells) {
  json out = json::array();
  for (const auto& c : cells) {
    out.push_back(json{{"order", c.order},
                       {"tol", c.tolerance},
                       {"steps", c.steps},
                       {"M_msun", c.mass_msun},
                       {"R_km", c.radius_km},
                       {"rel_dM", c.rel_dm},
                       {"rel_dR", c.rel_dr},
                       {"status", std::string(tov::to_string(c.status))}});
  }
  return out;
}

json make_manifest(std::string_view command, const std::vector<std::string>& args,
                   json resolved) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  return json{{"tool", std::string(kToolName)},
              {"version", std::string(kToolVersion)},
              {"command", std::string(command)},
              {"args", args},
              {"resolved", std::move(resolved)},
              {"timestamp", fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now))}};
}

}  // namespace abm::io
