#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prodschur {

using Integer = std::int64_t;
using Count = std::uint64_t;

/// Thrown when a request would exceed a configured size or memory guard.
class resource_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed integer interval [lo, hi] with 1 <= lo <= hi.
class Interval {
 public:
  Interval(Integer lo, Integer hi) : lo_(lo), hi_(hi) {
    if (lo < 1 || hi < lo) {
      throw std::invalid_argument("Interval requires 1 <= lo <= hi, got [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    }
  }

  Integer lo() const noexcept { return lo_; }
  Integer hi() const noexcept { return hi_; }
  Count length() const noexcept { return static_cast<Count>(hi_ - lo_ + 1); }
  bool contains(Integer x) const noexcept { return x >= lo_ && x <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Integer lo_;
  Integer hi_;
};

/// A subset of an integer interval stored as a dense bit indicator.
///
/// Membership is O(1); iteration over members skips empty 64-bit words, so
/// sparse random samples over [2, 10^7] are cheap to walk.
class IntegerSubset {
 public:
  explicit IntegerSubset(Interval interval) : interval_(interval), words_((interval.length() + 63) / 64, 0) {}

  static IntegerSubset full(Interval interval) {
    IntegerSubset s(interval);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim_tail();
    s.size_ = interval.length();
    return s;
  }

  template <class Range>
  static IntegerSubset of(Interval interval, const Range& members) {
    IntegerSubset s(interval);
    for (Integer m : members) s.insert(m);
    return s;
  }

  static IntegerSubset of(Interval interval, std::initializer_list<Integer> members) {
    return of<std::initializer_list<Integer>>(interval, members);
  }

  const Interval& interval() const noexcept { return interval_; }
  Count size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Integer x) const noexcept {
    if (!interval_.contains(x)) return false;
    const auto off = static_cast<std::uint64_t>(x - interval_.lo());
    return (words_[off >> 6] >> (off & 63)) & 1u;
  }

  void insert(Integer x) {
    check_in_range(x);
    const auto off = static_cast<std::uint64_t>(x - interval_.lo());
    auto& w = words_[off >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (off & 63);
    if (!(w & bit)) {
      w |= bit;
      ++size_;
    }
  }

  void erase(Integer x) {
    if (!interval_.contains(x)) return;
    const auto off = static_cast<std::uint64_t>(x - interval_.lo());
    auto& w = words_[off >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (off & 63);
    if (w & bit) {
      w &= ~bit;
      --size_;
    }
  }

  /// Smallest member >= x, or nullopt.
  std::optional<Integer> next_member(Integer x) const noexcept {
    if (x > interval_.hi()) return std::nullopt;
    if (x < interval_.lo()) x = interval_.lo();
    auto off = static_cast<std::uint64_t>(x - interval_.lo());
    std::size_t wi = off >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (off & 63));
    while (true) {
      if (w != 0) {
        const auto pos = (wi << 6) + static_cast<std::uint64_t>(std::countr_zero(w));
        return interval_.lo() + static_cast<Integer>(pos);
      }
      if (++wi == words_.size()) return std::nullopt;
      w = words_[wi];
    }
  }

  /// Calls fn(m) for every member m in [from, to], ascending.
  template <class Fn>
  void for_each_in(Integer from, Integer to, Fn&& fn) const {
    from = std::max(from, interval_.lo());
    to = std::min(to, interval_.hi());
    if (from > to) return;
    const auto first = static_cast<std::uint64_t>(from - interval_.lo());
    const auto last = static_cast<std::uint64_t>(to - interval_.lo());
    for (std::size_t wi = first >> 6; wi <= (last >> 6); ++wi) {
      std::uint64_t w = words_[wi];
      if (wi == (first >> 6)) w &= ~std::uint64_t{0} << (first & 63);
      if (wi == (last >> 6) && (last & 63) != 63) w &= (std::uint64_t{1} << ((last & 63) + 1)) - 1;
      while (w != 0) {
        const auto pos = (wi << 6) + static_cast<std::uint64_t>(std::countr_zero(w));
        fn(interval_.lo() + static_cast<Integer>(pos));
        w &= w - 1;
      }
    }
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each_in(interval_.lo(), interval_.hi(), std::forward<Fn>(fn));
  }

  std::vector<Integer> members() const {
    std::vector<Integer> out;
    out.reserve(size_);
    for_each([&](Integer m) { out.push_back(m); });
    return out;
  }

  /// Union with another subset; the result lives on the hull of both intervals.
  IntegerSubset united(const IntegerSubset& other) const {
    const Interval hull(std::min(interval_.lo(), other.interval_.lo()), std::max(interval_.hi(), other.interval_.hi()));
    if (hull == interval_ && other.interval_ == interval_) {
      IntegerSubset out = *this;
      out.size_ = 0;
      for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i] |= other.words_[i];
        out.size_ += static_cast<Count>(std::popcount(out.words_[i]));
      }
      return out;
    }
    IntegerSubset out(hull);
    for_each([&](Integer m) { out.insert(m); });
    other.for_each([&](Integer m) { out.insert(m); });
    return out;
  }

  friend bool operator==(const IntegerSubset& a, const IntegerSubset& b) {
    return a.interval_ == b.interval_ && a.words_ == b.words_;
  }

 private:
  void check_in_range(Integer x) const {
    if (!interval_.contains(x)) {
      throw std::out_of_range("element " + std::to_string(x) + " outside [" + std::to_string(interval_.lo()) + ", " +
                              std::to_string(interval_.hi()) + "]");
    }
  }

  void trim_tail() {
    const auto rem = interval_.length() & 63;
    if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  Interval interval_;
  std::vector<std::uint64_t> words_;
  Count size_ = 0;
};

using Colour = std::uint8_t;

/// A k-colouring of a ground set. Colours are 1..k; 0 marks a non-member of
/// the ground set within the carrier interval.
class Colouring {
 public:
  static constexpr int max_colours = 255;

  Colouring(Interval interval, int k) : interval_(interval), k_(k), colour_(interval.length(), 0) {
    if (k < 1 || k > max_colours) throw std::invalid_argument("colour count must be in [1, 255]");
  }

  /// Every element of `ground` gets colour 1 until assigned otherwise.
  Colouring(const IntegerSubset& ground, int k) : Colouring(ground.interval(), k) {
    ground.for_each([&](Integer m) { colour_[index(m)] = 1; });
  }

  const Interval& interval() const noexcept { return interval_; }
  int k() const noexcept { return k_; }

  bool in_ground(Integer x) const noexcept { return interval_.contains(x) && colour_[index(x)] != 0; }

  /// Colour of x in 1..k, or 0 if x is not in the ground set.
  Colour colour_of(Integer x) const noexcept { return interval_.contains(x) ? colour_[index(x)] : Colour{0}; }

  void set(Integer x, int c) {
    if (!interval_.contains(x)) throw std::out_of_range("element " + std::to_string(x) + " outside colouring interval");
    if (c < 1 || c > k_) throw std::invalid_argument("colour " + std::to_string(c) + " outside [1, k]");
    colour_[index(x)] = static_cast<Colour>(c);
  }

  void remove(Integer x) {
    if (interval_.contains(x)) colour_[index(x)] = 0;
  }

  IntegerSubset ground() const {
    IntegerSubset g(interval_);
    for (Integer x = interval_.lo(); x <= interval_.hi(); ++x)
      if (colour_[index(x)] != 0) g.insert(x);
    return g;
  }

  IntegerSubset colour_class(int c) const {
    IntegerSubset g(interval_);
    for (Integer x = interval_.lo(); x <= interval_.hi(); ++x)
      if (colour_[index(x)] == c) g.insert(x);
    return g;
  }

  Count ground_size() const noexcept {
    return static_cast<Count>(std::count_if(colour_.begin(), colour_.end(), [](Colour c) { return c != 0; }));
  }

  /// Raw per-position colours, position i holding element interval().lo() + i.
  const std::vector<Colour>& raw() const noexcept { return colour_; }

  friend bool operator==(const Colouring&, const Colouring&) = default;

 private:
  std::size_t index(Integer x) const noexcept { return static_cast<std::size_t>(x - interval_.lo()); }

  Interval interval_;
  int k_;
  std::vector<Colour> colour_;
};

enum class TripleSystem { Sum, DoubleSum, Product };

inline std::string_view to_string(TripleSystem s) {
  switch (s) {
    case TripleSystem::Sum: return "sum";
    case TripleSystem::DoubleSum: return "double-sum";
    case TripleSystem::Product: return "product";
  }
  return "?";
}

inline TripleSystem parse_system(std::string_view s) {
  if (s == "sum") return TripleSystem::Sum;
  if (s == "double-sum" || s == "doublesum") return TripleSystem::DoubleSum;
  if (s == "product") return TripleSystem::Product;
  throw std::invalid_argument("unknown triple system '" + std::string(s) + "' (expected sum, double-sum or product)");
}

/// Default ground set for a system on [n]: [1,n] for the additive systems and
/// [2,n] for products.
inline Integer ground_start(TripleSystem s) { return s == TripleSystem::Product ? 2 : 1; }

struct MonoTriple {
  Integer a;
  Integer b;
  Integer c;
  int colour;
  friend bool operator==(const MonoTriple&, const MonoTriple&) = default;
};

struct SolverOutcome {
  Integer value = 0;
  Colouring witness;
  Count nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
};

struct ExperimentRecord {
  Integer n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  Count trials = 0;
  Count successes = 0;
  std::map<std::string, std::string> extra;

  double frequency() const noexcept { return trials == 0 ? 0.0 : static_cast<double>(successes) / trials; }
};

inline bool triple_satisfied(Integer a, Integer b, Integer c, TripleSystem system) noexcept {
  switch (system) {
    case TripleSystem::Sum: return a + b == c;
    case TripleSystem::DoubleSum: return a + b == c || a + b == c - 1;
    case TripleSystem::Product: return a * b == c;
  }
  return false;
}

/// For a pair a <= b, the third elements c with triple_satisfied(a, b, c).
/// Calls fn(c) for each, ascending.
template <class Fn>
void for_each_completion(Integer a, Integer b, TripleSystem system, Fn&& fn) {
  switch (system) {
    case TripleSystem::Sum: fn(a + b); break;
    case TripleSystem::DoubleSum:
      fn(a + b);
      fn(a + b + 1);
      break;
    case TripleSystem::Product: fn(a * b); break;
  }
}

/// Lexicographically least (by (a, b), then c) monochromatic triple with
/// a <= b, or nullopt.
inline std::optional<MonoTriple> has_mono_triple(const Colouring& colouring, TripleSystem system) {
  const auto& iv = colouring.interval();
  for (Integer a = iv.lo(); a <= iv.hi(); ++a) {
    const int ca = colouring.colour_of(a);
    if (ca == 0) continue;
    // Smallest completion of (a, a) already exceeds hi once it passes the interval.
    const Integer min_c = system == TripleSystem::Product ? a * a : 2 * a;
    if (min_c > iv.hi()) break;
    for (Integer b = a; b <= iv.hi(); ++b) {
      const Integer smallest = system == TripleSystem::Product ? a * b : a + b;
      if (smallest > iv.hi()) break;
      if (colouring.colour_of(b) != ca) continue;
      std::optional<MonoTriple> hit;
      for_each_completion(a, b, system, [&](Integer c) {
        if (!hit && colouring.colour_of(c) == ca) hit = MonoTriple{a, b, c, ca};
      });
      if (hit) return hit;
    }
  }
  return std::nullopt;
}

/// floor(n^(1/k)) computed exactly.
inline Integer integer_root(Integer n, int k) {
  if (n < 0 || k < 1) throw std::invalid_argument("integer_root requires n >= 0 and k >= 1");
  if (k == 1 || n < 2) return n;
  auto pow_le = [&](Integer r) {
    // r^k <= n without overflow
    Integer acc = 1;
    for (int i = 0; i < k; ++i) {
      if (acc > n / r) return false;
      acc *= r;
    }
    return acc <= n;
  };
  auto r = static_cast<Integer>(std::pow(static_cast<long double>(n), 1.0L / k));
  r = std::max<Integer>(r, 1);
  while (r > 1 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

}  // namespace prodschur
