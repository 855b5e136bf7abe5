#pragma once

// Explicit colourings and sets: the logarithmic product-free colouring, the
// mod-5 and (4n/11, 10n/11] colourings, the perturbed blocker set, the
// bounds on the product analogue of g(k, n), and a re-checker for all of them.

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "counting.hpp"
#include "scalars.hpp"
#include "solver.hpp"

namespace prodschur {

/// Every monochromatic triple of the system inside the colouring's ground
/// set; empty means the colouring is verified free.
inline std::vector<MonoTriple> verify_colouring_free(const Colouring& colouring, TripleSystem system) {
  std::vector<MonoTriple> out;
  for_each_mono_triple(colouring, system, [&](const MonoTriple& t) { out.push_back(t); });
  return out;
}

namespace detail {

// thresholds[j] = largest a with a^s <= n^j, for j in [0, s]; exact.
inline std::vector<Integer> log_index_thresholds(Integer n, int s) {
  using boost::multiprecision::cpp_int;
  std::vector<Integer> t(static_cast<std::size_t>(s) + 1, 1);
  for (int j = 1; j <= s; ++j) {
    const cpp_int bound = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(j));
    Integer lo = t[static_cast<std::size_t>(j - 1)];
    Integer hi = n;
    while (lo < hi) {
      const Integer mid = lo + (hi - lo + 1) / 2;
      if (boost::multiprecision::pow(cpp_int(mid), static_cast<unsigned>(s)) <= bound) lo = mid;
      else hi = mid - 1;
    }
    t[static_cast<std::size_t>(j)] = lo;
  }
  return t;
}

}  // namespace detail

/// Maps a in (n^(1/s), n] to ceil(s log_n a) - 1 in [1, s - 1] using exact
/// integer comparisons a^s <= n^j.
class LogIndex {
 public:
  LogIndex(Integer n, int s) : n_(n), s_(s), thresholds_(detail::log_index_thresholds(n, s)) {
    if (n < 2 || s < 1) throw std::invalid_argument("LogIndex requires n >= 2 and s >= 1");
  }

  /// First element of the ground interval (n^(1/s), n].
  Integer ground_lo() const { return thresholds_[1] + 1; }
  Integer n() const { return n_; }
  int s() const { return s_; }

  int operator()(Integer a) const {
    if (a < ground_lo() || a > n_) throw std::out_of_range("LogIndex: element outside (n^(1/s), n]");
    int j = 1;
    while (a > thresholds_[static_cast<std::size_t>(j)]) ++j;
    return j - 1;
  }

 private:
  Integer n_;
  int s_;
  std::vector<Integer> thresholds_;
};

/// Colours a in (n^(1/S'), n] with base(ceil(S' log_n a) - 1), where base is
/// a k-colouring of [1, S' - 1] with no monochromatic a + b = c or
/// a + b = c - 1. S' is read off the base colouring.
inline Colouring product_free_colouring(int k, Integer n, const Colouring& base) {
  if (base.k() != k) throw std::invalid_argument("product_free_colouring: base colouring has a different k");
  const auto& biv = base.interval();
  if (biv.lo() != 1 || base.ground_size() != biv.length()) {
    throw std::invalid_argument("product_free_colouring: base must colour all of [1, S' - 1]");
  }
  if (auto bad = has_mono_triple(base, TripleSystem::DoubleSum)) {
    throw std::invalid_argument("product_free_colouring: base has a monochromatic solution (" + std::to_string(bad->a) +
                                ", " + std::to_string(bad->b) + ", " + std::to_string(bad->c) + ")");
  }
  const int s = static_cast<int>(biv.hi()) + 1;
  const LogIndex index(n, s);
  if (index.ground_lo() > n) throw std::invalid_argument("product_free_colouring: ground interval is empty");
  Colouring out(Interval(index.ground_lo(), n), k);
  for (Integer a = index.ground_lo(); a <= n; ++a) out.set(a, base.colour_of(index(a)));
  return out;
}

/// Good DoubleSum colouring of [1, S'(k) - 1] from the exact solver.
inline Colouring double_sum_base_colouring(int k) {
  auto r = schur_number(k, TripleSystem::DoubleSum);
  if (!r.complete() || !r.witness) throw std::runtime_error("double_sum_base_colouring: search did not complete");
  return *r.witness;
}

struct GStarBounds {
  double lower = 0;
  double upper = 0;
  bool upper_condition_met = false;  // n > (2/eps)^(S(k)^2)
};

inline GStarBounds g_star_bounds(Integer n, double eps, KnownSchur values) {
  if (!(eps > 0 && eps < 1)) throw std::domain_error("eps must lie in (0, 1)");
  if (n < 2) throw std::invalid_argument("g_star_bounds requires n >= 2");
  const double nd = static_cast<double>(n);
  GStarBounds b;
  b.lower = nd - std::pow(nd, 1.0 / static_cast<double>(values.double_sum));
  b.upper = nd - (1.0 - eps) * std::pow(nd, 1.0 / static_cast<double>(values.sum));
  const double s = static_cast<double>(values.sum);
  b.upper_condition_met = std::log(nd) > s * s * std::log(2.0 / eps);
  return b;
}

/// Bounds n - n^(1/S'(k)) <= g*(k, n) <= n - (1 - eps) n^(1/S(k)), using the
/// tabulated S and S' for k <= 4.
inline GStarBounds g_star_bounds(int k, Integer n, double eps) {
  const auto values = known_schur(k);
  if (!values) throw std::invalid_argument("g_star_bounds: S(k) and S'(k) unknown for k = " + std::to_string(k));
  return g_star_bounds(n, eps, *values);
}

struct SubsetColouring {
  IntegerSubset set;
  Colouring colouring;
};

/// A = {a in [n] : 5 ∤ a}; a ≡ ±1 (mod 5) gets colour 1, a ≡ ±2 colour 2.
inline SubsetColouring mod5_colouring(Integer n) {
  if (n < 1) throw std::invalid_argument("mod5_colouring requires n >= 1");
  const Interval iv(1, n);
  IntegerSubset A(iv);
  Colouring col(iv, 2);
  for (Integer a = 1; a <= n; ++a) {
    const Integer r = a % 5;
    if (r == 0) {
      col.remove(a);
      continue;
    }
    A.insert(a);
    col.set(a, (r == 1 || r == 4) ? 1 : 2);
  }
  return {std::move(A), std::move(col)};
}

/// Colour 1 on (4n/11, 10n/11], colour 2 on the rest of [1, n].
inline Colouring eleven_interval_colouring(Integer n) {
  if (n < 11) throw std::invalid_argument("eleven_interval_colouring requires n >= 11");
  Colouring col(Interval(1, n), 2);
  for (Integer x = 1; x <= n; ++x) col.set(x, (11 * x > 4 * n && 11 * x <= 10 * n) ? 1 : 2);
  return col;
}

struct BlockerSet {
  IntegerSubset set;  // carried on [2, n]
  AlphaParams params;
  Integer lower_end = 0;  // ceil(n^(1 - 2 beta))
  Count removed = 0;      // members of [lower_end, n] with a divisor in (y, z)
  double size_ratio = 0;  // |C_n| / n
  double removed_ratio = 0;  // removed / (alpha n)
};

/// C_n = [n^(1 - 2 beta), n] minus H(n, (y, z)) for y = n^(1/2 - beta),
/// z = n^(1/2 + beta). `params` must carry beta; alpha only scales the report.
inline BlockerSet blocker_set_for_params(Integer n, AlphaParams params) {
  if (n < 4) throw std::invalid_argument("perturbed_blocker_set requires n >= 4");
  const double nd = static_cast<double>(n);
  const double beta = params.beta_alpha;
  // 2y <= z <= y^2  <=>  sqrt(2) <= n^beta <= n^(1/6)
  if (!(beta * std::log(nd) >= 0.5 * std::log(2.0) * (1 - 1e-12))) {
    throw std::domain_error("perturbed_blocker_set: sqrt(2) <= n^beta fails (2y <= z)");
  }
  if (!(beta <= 1.0 / 6.0 + 1e-12)) throw std::domain_error("perturbed_blocker_set: n^beta <= n^(1/6) fails (z <= y^2)");
  params = params.with_n(nd);
  BlockerSet out{IntegerSubset(Interval(2, n)), params};
  out.lower_end = std::max<Integer>(2, static_cast<Integer>(std::ceil(snap_integral(std::pow(nd, 1.0 - 2.0 * beta)))));
  const auto h = multiplication_table_set(n, *params.y, *params.z);
  for (Integer x = out.lower_end; x <= n; ++x) {
    if (h.contains(x)) ++out.removed;
    else out.set.insert(x);
  }
  out.size_ratio = static_cast<double>(out.set.size()) / nd;
  out.removed_ratio = params.alpha > 0 ? static_cast<double>(out.removed) / (params.alpha * nd) : 0.0;
  return out;
}

inline BlockerSet perturbed_blocker_set(Integer n, double alpha) {
  check_alpha(alpha);
  return blocker_set_for_params(n, AlphaParams::of(alpha));
}

/// Blocker set with beta fixed directly, bypassing alpha.
inline BlockerSet blocker_set_for_beta(Integer n, double beta) {
  AlphaParams p;
  p.beta_alpha = beta;
  p.f_alpha = beta / (1.0 - 2.0 * beta);
  return blocker_set_for_params(n, p);
}

}  // namespace prodschur
