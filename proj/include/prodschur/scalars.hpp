#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

namespace prodschur {

/// Erdős–Ford constant 1 - (1 + ln ln 2)/ln 2 = 0.086071...
inline double delta() {
  const double l2 = std::log(2.0);
  return 1.0 - (1.0 + std::log(l2)) / l2;
}

inline void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("alpha must lie in (0, 1)");
}

/// f(alpha) = alpha^(1/delta) / (4 ln(1/alpha)^(3/(2 delta))), natural log.
inline double f_of_alpha(double alpha) {
  check_alpha(alpha);
  const double d = delta();
  // In log space: the numerator and denominator under- and overflow separately.
  const double log_f = std::log(alpha) / d - std::log(4.0) - (1.5 / d) * std::log(std::log(1.0 / alpha));
  return std::exp(log_f);
}

/// beta(alpha) = f / (1 + 2 f).
inline double beta_of_alpha(double alpha) {
  const double f = f_of_alpha(alpha);
  if (std::isinf(f)) return 0.5;
  return f / (1.0 + 2.0 * f);
}

/// The alpha in (0, 1) with f(alpha) = target. f is strictly increasing, so
/// Newton steps on ln f in ln(alpha) converge from any safeguarded start.
inline double alpha_for_f(double target) {
  if (!(target > 0.0) || std::isinf(target)) throw std::domain_error("alpha_for_f: target must be positive and finite");
  const double d = delta();
  const double log_target = std::log(target);
  auto g = [&](double t) {  // t = ln alpha < 0
    return t / d - std::log(4.0) - (1.5 / d) * std::log(-t) - log_target;
  };
  auto dg = [&](double t) { return 1.0 / d - (1.5 / d) / t; };
  double lo = -745.0;
  double hi = -std::numeric_limits<double>::min();
  double t = -0.7;
  for (int it = 0; it < 200; ++it) {
    const double v = g(t);
    if (v > 0) hi = t; else lo = t;
    double next = t - v / dg(t);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 1e-15 * std::abs(t)) {
      t = next;
      break;
    }
    t = next;
  }
  return std::exp(t);
}

/// The largest alpha admitted by the perturbed-threshold regime, f^{-1}(1/4),
/// where beta = 1/6.
inline double alpha_max() { return alpha_for_f(0.25); }

/// Parameters derived from alpha; y and z are filled once n is known.
struct AlphaParams {
  double alpha = 0;
  double f_alpha = 0;
  double beta_alpha = 0;
  std::optional<double> y;
  std::optional<double> z;

  static AlphaParams of(double alpha) {
    AlphaParams p;
    p.alpha = alpha;
    p.f_alpha = f_of_alpha(alpha);
    p.beta_alpha = p.f_alpha / (1.0 + 2.0 * p.f_alpha);
    return p;
  }

  AlphaParams with_n(double n) const {
    AlphaParams p = *this;
    p.y = std::pow(n, 0.5 - beta_alpha);
    p.z = std::pow(n, 0.5 + beta_alpha);
    return p;
  }
};

/// Snaps x to the nearest integer when within a relative 1e-9 of it, so that
/// values such as (10^6)^(1/3) behave as the exact integer they represent.
inline double snap_integral(double x) {
  const double r = std::round(x);
  return std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)) ? r : x;
}

}  // namespace prodschur
