#pragma once

// Test-only reference computations, independent of the library code paths.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace abm::testing {

__extension__ using i128 = __int128;

/// Exact rational with 128-bit parts; ample for Lagrange bases on a few
/// integer nodes.
class Rational {
 public:
  Rational(i128 num = 0, i128 den = 1) : num_(num), den_(den) { normalize(); }

  friend Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(Rational a, Rational b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(Rational a, Rational b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  [[nodiscard]] double to_double() const {
    return static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
  }

 private:
  static i128 gcd(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const i128 g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  i128 num_;
  i128 den_;
};

/// Exact integral over [0, upper] of each Lagrange basis polynomial through
/// integer `nodes`. Each basis is expanded directly as a product of
/// (t - t_k) / (t_j - t_k), with no synthetic division.
inline std::vector<Rational> exact_lagrange_weights(const std::vector<long>& nodes, long upper) {
  const std::size_t n = nodes.size();
  std::vector<Rational> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> poly{Rational(1)};
    for (std::size_t k = 0; k < n; ++k) {
      if (k == j) continue;
      const Rational denom(nodes[j] - nodes[k]);
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t p = 0; p < poly.size(); ++p) {
        next[p + 1] = next[p + 1] + poly[p] / denom;
        next[p] = next[p] - poly[p] * Rational(nodes[k]) / denom;
      }
      poly = std::move(next);
    }
    Rational integral(0);
    Rational power(upper);
    for (std::size_t p = 0; p < poly.size(); ++p) {
      integral = integral + poly[p] * power / Rational(static_cast<long>(p + 1));
      power = power * Rational(upper);
    }
    out.push_back(integral);
  }
  return out;
}

/// Classical fixed-step RK4 for y' = f(x, y), returning y at x_end.
inline std::vector<double> rk4(
    const std::function<void(double, const std::vector<double>&, std::vector<double>&)>& f,
    std::vector<double> y, double x0, double x_end, int steps) {
  const double h = (x_end - x0) / steps;
  const std::size_t d = y.size();
  std::vector<double> k1(d), k2(d), k3(d), k4(d), tmp(d);
  double x = x0;
  for (int s = 0; s < steps; ++s) {
    f(x, y, k1);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    f(x + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    f(x + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < d; ++i) tmp[i] = y[i] + h * k3[i];
    f(x + h, tmp, k4);
    for (std::size_t i = 0; i < d; ++i) y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    x = x0 + (s + 1) * h;
  }
  return y;
}

/// Relative difference with an absolute fallback near zero.
inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace abm::testing
