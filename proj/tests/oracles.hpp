#pragma once

// Brute-force reference implementations used only by the tests. Each one
// takes the most direct route to its answer and shares no code path with the
// library function it checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "prodschur/core.hpp"

namespace oracle {

using prodschur::Colouring;
using prodschur::Integer;
using prodschur::TripleSystem;

inline bool equation(Integer a, Integer b, Integer c, TripleSystem s) {
  if (s == TripleSystem::Sum) return a + b == c;
  if (s == TripleSystem::DoubleSum) return a + b == c || a + b + 1 == c;
  return a * b == c;
}

// Every ordered (a, b) and every c of the ground set; keeps the least
// (min(a,b), max(a,b), c).
inline std::optional<std::array<Integer, 4>> mono_triple(const Colouring& col, TripleSystem s) {
  const auto g = col.ground().members();
  std::optional<std::array<Integer, 4>> best;
  for (Integer a : g)
    for (Integer b : g)
      for (Integer c : g) {
        if (!equation(a, b, c, s)) continue;
        const int ca = col.colour_of(a);
        if (col.colour_of(b) != ca || col.colour_of(c) != ca) continue;
        std::array<Integer, 4> t{std::min(a, b), std::max(a, b), c, ca};
        if (!best || t < *best) best = t;
      }
  return best;
}

inline std::uint64_t count_mono(const Colouring& col, TripleSystem s) {
  const auto g = col.ground().members();
  std::uint64_t n = 0;
  for (Integer a : g)
    for (Integer b : g)
      if (a <= b)
        for (Integer c : g)
          if (equation(a, b, c, s) && col.colour_of(a) == col.colour_of(b) && col.colour_of(b) == col.colour_of(c))
            ++n;
  return n;
}

// Does some assignment of k colours to `elems` avoid every monochromatic
// triple? Plain k^m odometer, no pruning, no symmetry breaking.
inline bool naive_good_colouring_exists(const std::vector<Integer>& elems, int k, TripleSystem s) {
  const std::size_t m = elems.size();
  std::vector<int> colour(m, 0);
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        if (equation(elems[i], elems[j], elems[l], s)) triples.push_back({i, j, l});
  while (true) {
    bool ok = true;
    for (auto& t : triples)
      if (colour[t[0]] == colour[t[1]] && colour[t[1]] == colour[t[2]]) {
        ok = false;
        break;
      }
    if (ok) return true;
    std::size_t i = 0;
    while (i < m && ++colour[i] == k) colour[i++] = 0;
    if (i == m) return false;
  }
}

// Minimum over all k^m colourings of the number of monochromatic triples (a <= b).
inline std::uint64_t naive_min_mono(Integer lo, Integer hi, int k, TripleSystem s) {
  std::vector<Integer> elems;
  for (Integer x = lo; x <= hi; ++x) elems.push_back(x);
  const std::size_t m = elems.size();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        if (equation(elems[i], elems[j], elems[l], s)) triples.push_back({i, j, l});
  std::vector<int> colour(m, 0);
  std::uint64_t best = ~std::uint64_t{0};
  while (true) {
    std::uint64_t cnt = 0;
    for (auto& t : triples)
      if (colour[t[0]] == colour[t[1]] && colour[t[1]] == colour[t[2]]) ++cnt;
    best = std::min(best, cnt);
    std::size_t i = 0;
    while (i < m && ++colour[i] == k) colour[i++] = 0;
    if (i == m) return best;
  }
}

// Unordered product pairs 2 <= a < b with ab <= n, scanning all of [2, n]^2.
inline std::uint64_t off_diagonal_pairs(Integer n) {
  std::uint64_t count = 0;
  for (Integer a = 2; a <= n; ++a)
    for (Integer b = a + 1; b <= n && a * b <= n; ++b) ++count;
  return count;
}

inline std::uint64_t divisor_count(Integer x) {
  std::uint64_t d = 0;
  for (Integer i = 1; i <= x; ++i)
    if (x % i == 0) ++d;
  return d;
}

// Trial division: does x have a divisor d with y < d < z?
inline bool has_divisor_in(Integer x, double y, double z) {
  auto inside = [&](Integer d) { return static_cast<double>(d) > y && static_cast<double>(d) < z; };
  for (Integer d = 1; d * d <= x; ++d)
    if (x % d == 0 && (inside(d) || inside(x / d))) return true;
  return false;
}

// All ordered pairs of members, stopping a row once ab passes the largest member.
inline bool contains_product_triple(std::vector<Integer> elems) {
  std::sort(elems.begin(), elems.end());
  const std::set<Integer> s(elems.begin(), elems.end());
  for (Integer a : elems)
    for (Integer b : elems) {
      if (a < 2 || b < 2) continue;
      if (a * b > elems.back()) break;
      if (s.count(a * b)) return true;
    }
  return false;
}

// f^{-1}(target) by bisection on (0, 1), evaluating f directly in linear space.
inline double bisect_alpha(double target) {
  const double l2 = std::log(2.0);
  const double d = 1.0 - (1.0 + std::log(l2)) / l2;
  auto f = [&](double a) { return std::pow(a, 1.0 / d) / (4.0 * std::pow(std::log(1.0 / a), 3.0 / (2.0 * d))); };
  double lo = 1e-6;
  double hi = 1.0 - 1e-12;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
