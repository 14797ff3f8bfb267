#pragma once

#include <json.hpp>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "abm/integrator.hpp"
#include "abm/poly/problem.hpp"
#include "abm/tov/constants.hpp"
#include "abm/tov/search.hpp"
#include "abm/tov/star.hpp"

namespace abm::io {

inline constexpr std::string_view kToolName = "abm";
inline constexpr std::string_view kToolVersion = "1.0.0";

inline constexpr std::string_view kPolyCsvHeader = "i,x,dx,y,epsilon_max,y_exact,error";
inline constexpr std::string_view kStarCsvHeader = "i,r_cm,dr_cm,m_g,P_erg_cm3,epsilon_max,flags";
inline constexpr std::string_view kSweepCsvHeader =
    "order,tol,steps,M_msun,R_km,rel_dM,rel_dR,status";

/// 17 significant digits, enough to round-trip any double.
[[nodiscard]] std::string format_real(double v);

void write_poly_csv(std::ostream& os, std::span<const poly::PolyRow> rows);
void write_star_csv(std::ostream& os, std::span<const tov::StarStep> rows);
void write_sweep_csv(std::ostream& os, std::span<const tov::SweepCell> cells);

/// '|'-separated subset of bootstrap, min_step, surface_clamped, terminal.
[[nodiscard]] std::string star_flags(const tov::StarStep& step, int order);

[[nodiscard]] nlohmann::json to_json(const IntegratorConfig& config);
[[nodiscard]] nlohmann::json to_json(const tov::PhysicalConstants& k);
[[nodiscard]] nlohmann::json poly_summary(const poly::PolyRun& run);
[[nodiscard]] nlohmann::json poly_rows_json(std::span<const poly::PolyRow> rows);
[[nodiscard]] nlohmann::json star_summary(const tov::StarSolution& star,
                                          const tov::PhysicalConstants& k);
[[nodiscard]] nlohmann::json star_rows_json(std::span<const tov::StarStep> rows, int order);
[[nodiscard]] nlohmann::json sieve_summary(const tov::SieveResult& r,
                                           const tov::PhysicalConstants& k);
[[nodiscard]] nlohmann::json sweep_rows_json(std::span<const tov::SweepCell> cells);

/// Everything needed to rerun a command: its argument vector plus the fully
/// resolved configuration. The timestamp is informational only.
[[nodiscard]] nlohmann::json make_manifest(std::string_view command,
                                           const std::vector<std::string>& args,
                                           nlohmann::json resolved);

}  // namespace abm::io
