#include <doctest.h>

#include <cmath>
#include <numbers>

#include "abm/errors.hpp"
#include "abm/tov/eos.hpp"
#include "abm/tov/star.hpp"

using namespace abm;
using namespace abm::tov;

TEST_CASE("rates at the center and in the Newtonian limit") {
  const PhysicalConstants k;
  const auto center = tov_derivatives(0.0, 0.0, 1e35, k);
  CHECK(center.status == RateStatus::Ok);
  CHECK(center.dm_dr == 0.0);
  CHECK(center.dp_dr == 0.0);

  const double n = number_density(1e-3, k);
  const auto pt = eos_point(n, k);
  const double r = 1e5;
  const double m = 1e30;
  const double c2 = k.speed_of_light * k.speed_of_light;
  const auto rates = tov_derivatives(r, m, pt.pressure, k);
  REQUIRE(rates.status == RateStatus::Ok);
  CHECK(rates.dm_dr == doctest::Approx(4 * std::numbers::pi * r * r * pt.rho / c2).epsilon(1e-10));
  const double newtonian = -k.gravitational * m * (pt.rho / c2) / (r * r);
  CHECK(rates.dp_dr == doctest::Approx(newtonian).epsilon(1e-2));
  CHECK(rates.dp_dr < newtonian);  // GR corrections strengthen gravity
}

TEST_CASE("rates flag negative pressure and horizons") {
  const PhysicalConstants k;
  CHECK(tov_derivatives(1e5, 1e30, -1.0, k).status == RateStatus::NegativePressure);
  CHECK(tov_derivatives(1e5, 1e33, 1e30, k).status == RateStatus::Horizon);
  CHECK(compactness(0.0, 0.0, k) == 0.0);
  CHECK(compactness(1e5, 1e33, k) > 1.0);
}

TEST_CASE("star trajectory invariants") {
  const PhysicalConstants k;
  for (const double pc : {1e34, 3.631382e35, 2e36}) {
    CAPTURE(pc);
    const auto star = integrate_star(pc, default_star_config(6, 1e-7), k);
    REQUIRE(star.ok());
    const auto& t = star.trajectory;
    REQUIRE(t.size() == star.steps + 1);
    CHECK(t.front().r == 0.0);
    CHECK(t.front().p == pc);
    CHECK(star.derivative_evaluations == 2 * star.steps + 1);
    for (std::size_t i = 1; i < t.size(); ++i) {
      CHECK(t[i].r > t[i - 1].r);
      CHECK(t[i].m >= t[i - 1].m);
      CHECK(t[i].p < t[i - 1].p);
      CHECK(compactness(t[i].r, t[i].m, k) < 1.0);
      CHECK(t[i].terminal == (i + 1 == t.size()));
      if (i + 1 < t.size()) CHECK(t[i].p > 0.0);
    }
    CHECK(t.back().p <= 0.0);
    CHECK(star.mass == t.back().m);
    CHECK(star.radius == t.back().r);
    CHECK(star.mass_msun(k) > 0.1);
    CHECK(star.mass_msun(k) < 0.75);
  }
}

TEST_CASE("trajectory can be dropped without changing the result") {
  const auto full = integrate_star(1e35, default_star_config(5, 1e-6));
  const auto lean = integrate_star(1e35, default_star_config(5, 1e-6), {}, false);
  CHECK(lean.trajectory.empty());
  CHECK(lean.mass == full.mass);
  CHECK(lean.radius == full.radius);
  CHECK(lean.steps == full.steps);
}

TEST_CASE("invalid central pressure and step budget") {
  CHECK_THROWS_AS((void)integrate_star(0.0, default_star_config()), ConfigError);
  CHECK_THROWS_AS((void)integrate_star(-1e35, default_star_config()), ConfigError);
  auto cfg = default_star_config();
  cfg.max_steps = 5;
  const auto star = integrate_star(3.631382e35, cfg);
  CHECK(star.status == StarStatus::MaxSteps);
  CHECK(star.trajectory.size() == 6);
}
