#pragma once

// Exact enumeration and counting of product triples, monochromatic triples,
// divisor statistics, and the multiplication-table set H(n, (y, z)).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <new>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"
#include "scalars.hpp"

namespace prodschur {

struct TripleCount {
  Count total = 0;
  Count off_diagonal = 0;  // a < b
  Count diagonal = 0;      // a = b
};

/// Product triples ab = c with 2 <= a <= b and c <= n:
/// off-diagonal = sum_{a=2}^{floor(sqrt n)} (floor(n/a) - a), diagonal = floor(sqrt n) - 1.
inline TripleCount count_product_triples(Integer n) {
  if (n < 4) throw std::invalid_argument("count_product_triples requires n >= 4");
  const Integer r = integer_root(n, 2);
  TripleCount t;
  for (Integer a = 2; a <= r; ++a) t.off_diagonal += static_cast<Count>(n / a - a);
  t.diagonal = static_cast<Count>(r - 1);
  t.total = t.off_diagonal + t.diagonal;
  return t;
}

/// Calls fn(a, b, c) for each product triple 2 <= a <= b, ab = c <= n, ordered by (a, b).
template <class Fn>
void for_each_product_triple(Integer n, Fn&& fn) {
  for (Integer a = 2; a * a <= n; ++a)
    for (Integer b = a; a * b <= n; ++b) fn(a, b, a * b);
}

inline std::vector<std::array<Integer, 3>> enumerate_product_triples(Integer n) {
  std::vector<std::array<Integer, 3>> out;
  if (n < 4) return out;
  for_each_product_triple(n, [&](Integer a, Integer b, Integer c) { out.push_back({a, b, c}); });
  return out;
}

/// Calls fn(MonoTriple) for every monochromatic triple (a <= b) of the
/// system inside the colouring's ground set, ordered by (a, b, c).
template <class Fn>
void for_each_mono_triple(const Colouring& colouring, TripleSystem system, Fn&& fn) {
  const auto& iv = colouring.interval();
  const Integer hi = iv.hi();
  const auto& raw = colouring.raw();
  const Integer lo = iv.lo();
  auto col = [&](Integer x) -> int { return raw[static_cast<std::size_t>(x - lo)]; };
  if (system == TripleSystem::Product) {
    for (Integer a = lo; a * a <= hi; ++a) {
      const int ca = col(a);
      if (ca == 0) continue;
      for (Integer b = a; a * b <= hi; ++b) {
        if (col(b) != ca) continue;
        const Integer c = a * b;
        if (c >= lo && col(c) == ca) fn(MonoTriple{a, b, c, ca});
      }
    }
    return;
  }
  const bool dbl = system == TripleSystem::DoubleSum;
  for (Integer a = lo; 2 * a <= hi; ++a) {
    const int ca = col(a);
    if (ca == 0) continue;
    for (Integer b = a; a + b <= hi; ++b) {
      if (col(b) != ca) continue;
      if (col(a + b) == ca) fn(MonoTriple{a, b, a + b, ca});
      if (dbl && a + b + 1 <= hi && col(a + b + 1) == ca) fn(MonoTriple{a, b, a + b + 1, ca});
    }
  }
}

inline Count count_monochromatic(const Colouring& colouring, TripleSystem system) {
  Count n = 0;
  for_each_mono_triple(colouring, system, [&](const MonoTriple&) { ++n; });
  return n;
}

struct MonochromaticMinimum {
  Count count = 0;
  Colouring argmin;
};

/// Exact minimum number of monochromatic triples over all k-colourings of
/// [start, n], with the lexicographically least minimiser. Only colourings in
/// canonical colour order are visited; the lexicographically least
/// minimiser is always canonical.
inline MonochromaticMinimum min_monochromatic_bruteforce(Integer n, int k, TripleSystem system) {
  const Integer lo = ground_start(system);
  if (n < lo) throw std::invalid_argument("min_monochromatic_bruteforce: n below the ground start");
  if (k < 1 || k > 16) throw std::invalid_argument("min_monochromatic_bruteforce: k must be in [1, 16]");
  const auto m = static_cast<std::size_t>(n - lo + 1);
  if (static_cast<double>(m) * std::log2(static_cast<double>(std::max(k, 2))) > 34.0) {
    throw resource_guard_error("min_monochromatic_bruteforce: k^n exceeds the enumeration guard");
  }
  // pairs (a, b), a <= b, closing a triple at each c
  std::vector<std::vector<std::pair<Integer, Integer>>> closing(m);
  for (Integer a = lo; a <= n; ++a)
    for (Integer b = a; b <= n; ++b) {
      const Integer smallest = system == TripleSystem::Product ? a * b : a + b;
      if (smallest > n) break;
      for_each_completion(a, b, system, [&](Integer c) {
        if (c >= lo && c <= n) closing[static_cast<std::size_t>(std::max(c, b) - lo)].emplace_back(a, b);
      });
    }

  std::vector<int> colour(m, -1);
  std::vector<int> best_colour;
  Count best = std::numeric_limits<Count>::max();

  auto closes = [&](std::size_t pos, int c) {
    const Integer x = lo + static_cast<Integer>(pos);
    Count added = 0;
    // Each listed pair closes a triple whose largest element is x.
    for (auto [a, b] : closing[pos]) {
      const int ca = a == x ? c : colour[static_cast<std::size_t>(a - lo)];
      const int cb = b == x ? c : colour[static_cast<std::size_t>(b - lo)];
      if (ca == c && cb == c) ++added;
    }
    return added;
  };

  auto dfs = [&](auto& self, std::size_t pos, Count current, int used) -> void {
    if (current >= best) return;
    if (pos == m) {
      best = current;
      best_colour = colour;
      return;
    }
    const int top = std::min(used + 1, k);
    for (int c = 0; c < top; ++c) {
      colour[pos] = c;
      self(self, pos + 1, current + closes(pos, c), std::max(used, c + 1));
      colour[pos] = -1;
    }
  };
  dfs(dfs, 0, 0, 0);

  Colouring argmin(Interval(lo, n), k);
  for (std::size_t i = 0; i < m; ++i) argmin.set(lo + static_cast<Integer>(i), best_colour[i] + 1);
  return {best, std::move(argmin)};
}

/// Number of divisors of every integer in [0, n] (entry 0 unused) by a
/// linear smallest-prime-factor sieve.
inline std::vector<std::uint16_t> divisor_count_table(Integer n) {
  if (n < 1) throw std::invalid_argument("divisor_count_table requires n >= 1");
  if (n > 1'000'000'000) throw resource_guard_error("divisor_count_table: n > 10^9 exceeds the memory guard");
  try {
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<std::uint16_t> d(size, 0);
    std::vector<std::uint8_t> exponent(size, 0);  // exponent of the smallest prime factor
    std::vector<std::uint32_t> spf(size, 0);
    std::vector<std::uint32_t> primes;
    d[1] = 1;
    for (std::size_t i = 2; i < size; ++i) {
      if (spf[i] == 0) {
        spf[i] = static_cast<std::uint32_t>(i);
        primes.push_back(static_cast<std::uint32_t>(i));
        d[i] = 2;
        exponent[i] = 1;
      }
      for (std::uint32_t p : primes) {
        const std::size_t j = static_cast<std::size_t>(p) * i;
        if (p > spf[i] || j >= size) break;
        spf[j] = p;
        if (p == spf[i]) {
          exponent[j] = static_cast<std::uint8_t>(exponent[i] + 1);
          d[j] = static_cast<std::uint16_t>(d[i] / (exponent[i] + 1) * (exponent[i] + 2));
        } else {
          exponent[j] = 1;
          d[j] = static_cast<std::uint16_t>(d[i] * 2);
        }
      }
    }
    return d;
  } catch (const std::bad_alloc&) {
    throw resource_guard_error("divisor_count_table: allocation failed");
  }
}

struct DivisorMaximum {
  Count max = 0;
  Integer argmax = 0;  // smallest integer attaining max
};

inline DivisorMaximum max_divisor_count(Integer n) {
  if (n < 2) throw std::invalid_argument("max_divisor_count requires n >= 2");
  const auto d = divisor_count_table(n);
  DivisorMaximum out;
  for (Integer i = 1; i <= n; ++i) {
    if (d[static_cast<std::size_t>(i)] > out.max) {
      out.max = d[static_cast<std::size_t>(i)];
      out.argmax = i;
    }
  }
  return out;
}

/// Ordered triples (a, b, c) with a, b in A ∩ [2, floor(sqrt n)], c in A and
/// ab = c, where n is the top of A's interval.
inline Count supersaturation_count(const IntegerSubset& A) {
  const Integer n = A.interval().hi();
  const Integer r = integer_root(n, 2);
  std::vector<Integer> small;
  A.for_each_in(2, r, [&](Integer a) { small.push_back(a); });
  Count count = 0;
  for (Integer a : small)
    for (Integer b : small)
      if (A.contains(a * b)) ++count;
  return count;
}

/// Integer divisors strictly inside (y, z).
inline std::pair<Integer, Integer> open_integer_range(double y, double z) {
  const auto first = static_cast<Integer>(std::floor(snap_integral(y))) + 1;
  const auto last = static_cast<Integer>(std::ceil(snap_integral(z))) - 1;
  return {first, last};
}

/// H(n, (y, z)): integers x in [1, n] with a divisor d, y < d < z.
inline IntegerSubset multiplication_table_set(Integer n, double y, double z) {
  if (n < 1) throw std::invalid_argument("multiplication_table_set requires n >= 1");
  if (!(z > y)) throw std::domain_error("multiplication table interval requires y < z");
  IntegerSubset h(Interval(1, n));
  auto [first, last] = open_integer_range(y, z);
  first = std::max<Integer>(first, 1);
  last = std::min(last, n);
  for (Integer d = first; d <= last; ++d)
    for (Integer x = d; x <= n; x += d) h.insert(x);
  return h;
}

struct FordEstimate {
  Count exact = 0;
  bool preconditions_met = false;
  std::optional<double> u;
  std::optional<double> theta_form;  // n u^delta (ln(2/u))^{-3/2}
  std::optional<double> ratio;       // exact / theta_form
};

/// Preconditions under which the Θ-form for |H(n, (y, z))| applies:
/// n >= 10^5, 100 <= y <= z - 1, y <= sqrt(n), 2y <= z <= y^2.
inline bool ford_preconditions(Integer n, double y, double z) {
  const double nd = static_cast<double>(n);
  return n >= 100'000 && y >= 100 && y <= z - 1 && y <= std::sqrt(nd) && 2 * y <= z && z <= y * y;
}

inline FordEstimate multiplication_table_count(Integer n, double y, double z) {
  if (!(y > 0)) throw std::domain_error("multiplication_table_count requires y > 0");
  FordEstimate est;
  est.exact = multiplication_table_set(n, y, z).size();
  est.preconditions_met = ford_preconditions(n, y, z);
  if (est.preconditions_met) {
    const double u = std::log(z) / std::log(y) - 1.0;
    est.u = u;
    est.theta_form = static_cast<double>(n) * std::pow(u, delta()) * std::pow(std::log(2.0 / u), -1.5);
    est.ratio = static_cast<double>(est.exact) / *est.theta_form;
  }
  return est;
}

/// P_c: factorisations c = ab with a, b in [2, n] and a <= b.
inline std::vector<std::pair<Integer, Integer>> representation_set(Integer c, Integer n) {
  if (c < 2 || c > n) throw std::invalid_argument("representation_set requires 2 <= c <= n");
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer a = 2; a * a <= c; ++a)
    if (c % a == 0) out.emplace_back(a, c / a);
  return out;
}

}  // namespace prodschur
