#include "abm/tov/search.hpp"

#include <omp.h>

#include <cmath>
#include <exception>
#include <stdexcept>

#include "abm/errors.hpp"

namespace abm::tov {

TernaryResult ternary_search_max(const PairObjective& f, double lo, double hi, double rel_tol,
                                 int max_iterations) {
  if (!(lo < hi)) throw ConfigError("ternary search: lower bound must be below upper bound");
  if (!(rel_tol > 0.0)) throw ConfigError("ternary search: tolerance must be positive");

  TernaryResult out;
  while (out.iterations < max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::abs(mid)) break;
    const double width = hi - lo;
    const double left = lo + width / 3.0;
    const double right = hi - width / 3.0;
    const auto [f_left, f_right] = f(left, right);
    out.evaluations += 2;
    if (f_left < f_right) {
      lo = left;
    } else {
      hi = right;
    }
    ++out.iterations;
  }
  out.lo = lo;
  out.hi = hi;
  out.argmax = 0.5 * (lo + hi);
  return out;
}

TernaryResult ternary_search_max(const std::function<double(double)>& f, double lo, double hi,
                                 double rel_tol, int max_iterations) {
  return ternary_search_max(
      [&f](double a, double b) { return std::array<double, 2>{f(a), f(b)}; }, lo, hi, rel_tol,
      max_iterations);
}

StarCache::StarCache(IntegratorConfig config, PhysicalConstants constants)
    : config_(config), constants_(constants) {
  config_.validate();
  constants_.validate();
}

StarSummary StarCache::get(double p_central) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(p_central); it != memo_.end()) return it->second;
  }
  const StarSolution star = integrate_star(p_central, config_, constants_, false);
  StarSummary s{star.mass, star.radius, star.steps, star.status, star.message};
  std::lock_guard lock(mutex_);
  ++integrations_;
  memo_.emplace(p_central, s);
  return s;
}

std::size_t StarCache::integrations() const {
  std::lock_guard lock(mutex_);
  return integrations_;
}

namespace {

double checked_mass(const StarSummary& s, double p_central) {
  if (s.status != StarStatus::Ok) {
    throw std::runtime_error("star with central pressure " + std::to_string(p_central) +
                             " failed: " + std::string(to_string(s.status)) + " " + s.message);
  }
  return s.mass;
}

}  // namespace

SieveResult trinary_sieve(double p_lo, double p_hi, const IntegratorConfig& config,
                          const PhysicalConstants& k, double bracket_tolerance, int jobs) {
  if (!(p_lo > 0.0) || !(p_lo < p_hi)) throw ConfigError("sieve: need 0 < lo < hi");
  StarCache cache(config, k);

  const int threads = jobs > 1 ? 2 : 1;
  auto probe_pair = [&](double a, double b) {
    std::array<double, 2> probes{a, b};
    std::array<double, 2> masses{};
    std::exception_ptr failure;
#pragma omp parallel for num_threads(threads) schedule(static)
    for (int idx = 0; idx < 2; ++idx) {
      try {
        masses[idx] = checked_mass(cache.get(probes[idx]), probes[idx]);
      } catch (...) {
#pragma omp critical(abm_sieve_failure)
        failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    return masses;
  };

  const TernaryResult t = ternary_search_max(probe_pair, p_lo, p_hi, bracket_tolerance);
  const StarSummary best = cache.get(t.argmax);
  checked_mass(best, t.argmax);

  SieveResult out;
  out.p_central = t.argmax;
  out.mass = best.mass;
  out.radius = best.radius;
  out.steps = best.steps;
  out.bracket_lo = t.lo;
  out.bracket_hi = t.hi;
  out.iterations = t.iterations;
  out.star_integrations = cache.integrations();
  return out;
}

SweepCell run_sweep_cell(const SweepRequest& req, int order, double tolerance) {
  SweepCell cell;
  cell.order = order;
  cell.tolerance = tolerance;
  try {
    IntegratorConfig cfg = req.base;
    cfg.order_ab = order;
    cfg.target_correction = tolerance;
    const StarSolution star = integrate_star(req.p_central, cfg, req.constants, false);
    cell.status = star.status;
    cell.message = star.message;
    cell.steps = star.steps;
    cell.mass_msun = star.mass_msun(req.constants);
    cell.radius_km = star.radius_km();
    cell.rel_dm = std::abs(star.mass - req.reference.mass) / req.reference.mass;
    cell.rel_dr = std::abs(star.radius - req.reference.radius) / req.reference.radius;
  } catch (const std::exception& e) {
    cell.status = StarStatus::Failed;
    cell.message = e.what();
  }
  return cell;
}

namespace {

void check_request(const SweepRequest& req) {
  if (req.orders.empty()) throw ConfigError("sweep: no orders given");
  if (req.tolerances.empty()) throw ConfigError("sweep: no tolerances given");
  if (!(req.reference.mass > 0.0) || !(req.reference.radius > 0.0)) {
    throw ConfigError("sweep: reference mass and radius must be positive");
  }
}

}  // namespace

std::vector<SweepCell> parameter_sweep_serial(const SweepRequest& req) {
  check_request(req);
  std::vector<SweepCell> cells;
  cells.reserve(req.orders.size() * req.tolerances.size());
  for (const int order : req.orders) {
    for (const double tol : req.tolerances) cells.push_back(run_sweep_cell(req, order, tol));
  }
  return cells;
}

std::vector<SweepCell> parameter_sweep(const SweepRequest& req, int jobs) {
  check_request(req);
  const std::size_t n_tol = req.tolerances.size();
  const auto total = static_cast<long>(req.orders.size() * n_tol);
  std::vector<SweepCell> cells(static_cast<std::size_t>(total));
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (long idx = 0; idx < total; ++idx) {
    const auto u = static_cast<std::size_t>(idx);
    cells[u] = run_sweep_cell(req, req.orders[u / n_tol], req.tolerances[u % n_tol]);
  }
  return cells;
}

}  // namespace abm::tov
