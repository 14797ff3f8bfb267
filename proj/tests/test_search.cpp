#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "abm/errors.hpp"
#include "abm/tov/search.hpp"

using namespace abm;
using namespace abm::tov;

TEST_CASE("ternary search finds the vertex of a parabola") {
  std::size_t calls = 0;
  auto f = [&calls](double x) {
    ++calls;
    return -(x - 2.0) * (x - 2.0);
  };
  const auto res = ternary_search_max(f, 0.0, 5.0, 1e-9);
  CHECK(res.argmax == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(res.hi - res.lo <= 1e-9 * 2.0 * (1 + 1e-6));
  CHECK(res.evaluations == calls);
  CHECK(res.evaluations == 2 * static_cast<std::size_t>(res.iterations));
  // Each iteration keeps two thirds of the bracket.
  CHECK(5.0 * std::pow(2.0 / 3.0, res.iterations) == doctest::Approx(res.hi - res.lo).epsilon(1e-9));
  CHECK(5.0 * std::pow(2.0 / 3.0, res.iterations - 1) > 1e-9 * 2.0);
}

TEST_CASE("ternary search handles a maximum at the bracket edge") {
  const auto res = ternary_search_max([](double x) { return x; }, 1.0, 2.0, 1e-8);
  CHECK(res.argmax == doctest::Approx(2.0).epsilon(1e-7));
  const auto pair = ternary_search_max(
      [](double a, double b) { return std::array<double, 2>{-std::abs(a - 1.5), -std::abs(b - 1.5)}; },
      1.0, 2.0, 1e-10);
  CHECK(pair.argmax == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("ternary search validates its bracket") {
  auto f = [](double x) { return x; };
  CHECK_THROWS((void)ternary_search_max(f, 2.0, 1.0, 1e-6));
  CHECK_THROWS((void)ternary_search_max(f, 1.0, 2.0, 0.0));
}

TEST_CASE("star cache integrates each central pressure once") {
  StarCache cache(default_star_config(4, 1e-4), {});
  const auto a = cache.get(2e35);
  const auto b = cache.get(2e35);
  CHECK(cache.integrations() == 1);
  CHECK(a.mass == b.mass);
  (void)cache.get(3e35);
  CHECK(cache.integrations() == 2);
  CHECK(a.status == StarStatus::Ok);
}

TEST_CASE("sieve on a loose configuration brackets the known maximum") {
  const auto res = trinary_sieve(1e35, 1e36, default_star_config(4, 1e-4), {}, 1e-3, 1);
  CHECK(res.bracket_hi - res.bracket_lo <= 1e-3 * res.p_central * (1 + 1e-9));
  CHECK(res.p_central == doctest::Approx(3.631382e35).epsilon(2e-2));
  CHECK(res.star_integrations <= 2 * static_cast<std::size_t>(res.iterations) + 1);
  const auto par = trinary_sieve(1e35, 1e36, default_star_config(4, 1e-4), {}, 1e-3, 2);
  CHECK(par.p_central == res.p_central);
  CHECK(par.mass == res.mass);
}

TEST_CASE("parallel sweep matches the serial reference") {
  SweepRequest req;
  req.orders = {3, 4, 5, 6};
  req.tolerances = {1e-2, 1e-4, 1e-6};
  req.p_central = 3.631382e35;
  req.base = default_star_config();
  const auto ref = integrate_star(req.p_central, default_star_config(8, 1e-8), {}, false);
  req.reference = {ref.mass, ref.radius};

  const auto serial = parameter_sweep_serial(req);
  REQUIRE(serial.size() == 12);
  for (const int jobs : {1, 2, 4}) {
    const auto par = parameter_sweep(req, jobs);
    REQUIRE(par.size() == serial.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      CHECK(par[i].order == serial[i].order);
      CHECK(par[i].tolerance == serial[i].tolerance);
      CHECK(par[i].steps == serial[i].steps);
      CHECK(par[i].mass_msun == serial[i].mass_msun);
      CHECK(par[i].radius_km == serial[i].radius_km);
      CHECK(par[i].status == serial[i].status);
    }
  }
  // Order-major layout, and tighter tolerance costs more steps.
  CHECK(serial[0].order == 3);
  CHECK(serial[1].tolerance == 1e-4);
  for (std::size_t o = 0; o < 4; ++o) {
    CHECK(serial[3 * o].steps < serial[3 * o + 2].steps);
    CHECK(std::abs(serial[3 * o + 2].rel_dm) < 1e-4);
  }
}

TEST_CASE("sweep records failing cells and rejects empty grids") {
  SweepRequest req;
  req.orders = {4};
  req.tolerances = {1e-4};
  req.p_central = 3.631382e35;
  req.base = default_star_config();
  req.base.max_steps = 3;
  req.reference = {1.4e33, 9.1e5};
  const auto cells = parameter_sweep(req, 2);
  REQUIRE(cells.size() == 1);
  CHECK_FALSE(cells[0].ok());
  CHECK(cells[0].status == StarStatus::MaxSteps);

  req.orders.clear();
  CHECK_THROWS_AS((void)parameter_sweep_serial(req), ConfigError);
}
