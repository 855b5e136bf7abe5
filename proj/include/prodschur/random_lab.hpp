#pragma once

// Seeded Monte Carlo experiments on random and randomly perturbed subsets of
// [2, n]: product-triple thresholds, the two-copy split, |A^2 ∩ [2, n]|, and
// the product graph used for the perturbed upper bound.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "core.hpp"
#include "parallel.hpp"
#include "scalars.hpp"

namespace prodschur {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Key for the stream (master, i, j); distinct index pairs give unrelated keys.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t i, std::uint64_t j = 0) noexcept {
  return mix64(mix64(mix64(master) ^ (i + 0x632BE59BD9B4E019ULL)) ^ (j + 0x8CB92BA72F3D8DD7ULL));
}

/// Counter-based generator: output i is a hash of (key, i). Streams for
/// different keys are independent and need no shared state.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) noexcept : key_(mix64(key)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix64(key_ ^ mix64(counter_++)); }

  /// Uniform double in (0, 1].
  double uniform_open0() noexcept { return (static_cast<double>((*this)() >> 11) + 1.0) * 0x1.0p-53; }

  std::uint64_t position() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// [2, n]_p: each element of [2, n] independently with probability p,
/// drawn by geometric skipping. Fully determined by (n, p, seed).
inline IntegerSubset sample_random_subset(Integer n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_random_subset requires n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("sample_random_subset: p must lie in [0, 1]");
  const Interval iv(2, n);
  if (p == 1.0) return IntegerSubset::full(iv);
  IntegerSubset out(iv);
  if (p == 0.0) return out;
  CounterRng rng(seed);
  const double log_q = std::log1p(-p);
  Integer x = 1;
  while (true) {
    const double gap = std::floor(std::log(rng.uniform_open0()) / log_q);
    if (gap >= static_cast<double>(n - x)) break;
    x += 1 + static_cast<Integer>(gap);
    if (x > n) break;
    out.insert(x);
  }
  return out;
}

/// A product triple a <= b, ab = c with a, b, c in A (a >= 2, c <= hi), the
/// lexicographically least by (a, b), or nullopt.
inline std::optional<std::array<Integer, 3>> find_product_triple(const IntegerSubset& A) {
  const Integer n = A.interval().hi();
  const Integer r = integer_root(n, 2);
  for (auto a = A.next_member(2); a && *a <= r; a = A.next_member(*a + 1)) {
    const Integer top = n / *a;
    for (auto b = A.next_member(*a); b && *b <= top; b = A.next_member(*b + 1)) {
      if (A.contains(*a * *b)) return std::array<Integer, 3>{*a, *b, *a * *b};
    }
  }
  return std::nullopt;
}

inline bool contains_product_triple(const IntegerSubset& A) { return find_product_triple(A).has_value(); }

/// Exact number of product triples (a <= b, ab = c, all in A, a >= 2).
inline Count count_product_triples_in(const IntegerSubset& A) {
  const Integer n = A.interval().hi();
  const Integer r = integer_root(n, 2);
  Count count = 0;
  A.for_each_in(2, r, [&](Integer a) {
    A.for_each_in(a, n / a, [&](Integer b) {
      if (A.contains(a * b)) ++count;
    });
  });
  return count;
}

struct TwoCopySplit {
  double p1;
  double p2;
};

/// p1 = p2 = 1 - sqrt(1 - p), so that (1 - p1)(1 - p2) = 1 - p.
inline TwoCopySplit two_copy_split(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("two_copy_split: p must lie in [0, 1]");
  const double q = -std::expm1(0.5 * std::log1p(-p));
  return {q, q};
}

/// |{ab : a, b in A, a, b >= 2, ab <= n}| as a set.
inline Count square_set_count(const IntegerSubset& A, Integer n) {
  if (n < 1) throw std::invalid_argument("square_set_count requires n >= 1");
  IntegerSubset products(Interval(1, n));
  const Integer r = integer_root(n, 2);
  A.for_each_in(2, r, [&](Integer a) { A.for_each_in(a, n / a, [&](Integer b) { products.insert(a * b); }); });
  return products.size();
}

/// max_c |P_c ∩ (A × A)|: the most factorisations c = ab (2 <= a <= b, both
/// in A) shared by a single c <= n.
inline Count max_representations(const IntegerSubset& A, Integer n) {
  std::vector<std::uint16_t> reps(static_cast<std::size_t>(n) + 1, 0);
  Count best = 0;
  const Integer r = integer_root(n, 2);
  A.for_each_in(2, r, [&](Integer a) {
    A.for_each_in(a, n / a, [&](Integer b) {
      auto& v = reps[static_cast<std::size_t>(a * b)];
      ++v;
      best = std::max<Count>(best, v);
    });
  });
  return best;
}

enum class ProbabilityRule { RandomThreshold, Perturbed };

struct SweepPlan {
  Integer n = 0;
  std::vector<double> multipliers;
  ProbabilityRule rule = ProbabilityRule::RandomThreshold;
  double alpha = 0;  // Perturbed only
  Count trials = 0;
  std::uint64_t master_seed = 0;
  unsigned workers = 0;  // 0: worker_count()

  void validate() const {
    if (n < 4) throw std::invalid_argument("sweep requires n >= 4");
    if (multipliers.empty()) throw std::invalid_argument("sweep requires at least one multiplier");
    for (double c : multipliers)
      if (!(c > 0) || std::isinf(c)) throw std::invalid_argument("multipliers must be positive and finite");
    if (trials == 0) throw std::invalid_argument("sweep requires trials >= 1");
    if (rule == ProbabilityRule::Perturbed) check_alpha(alpha);
  }
};

/// (n ln n)^(-1/3).
inline double random_threshold_scale(Integer n) {
  const double nd = static_cast<double>(n);
  return std::pow(nd * std::log(nd), -1.0 / 3.0);
}

/// n^(-1/2 + beta).
inline double perturbed_scale(Integer n, double beta) { return std::pow(static_cast<double>(n), -0.5 + beta); }

inline std::string format_real(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

namespace detail {

// Success count of `trials` independent trials, trial t seeded from
// (master, index, t); independent of the worker count.
template <class Trial>
Count run_trials(Count trials, std::uint64_t master, std::uint64_t index, unsigned workers, Trial&& trial) {
  std::vector<std::uint8_t> hit(trials, 0);
  parallel_for(trials, workers == 0 ? worker_count() : workers,
               [&](std::size_t t) { hit[t] = trial(derive_seed(master, index, t)) ? 1 : 0; });
  return static_cast<Count>(std::count(hit.begin(), hit.end(), std::uint8_t{1}));
}

inline ExperimentRecord make_record(Integer n, double c, double raw_p, Count trials, std::uint64_t seed) {
  ExperimentRecord rec;
  rec.n = n;
  rec.p = std::min(raw_p, 1.0);
  rec.seed = seed;
  rec.trials = trials;
  rec.extra["c"] = format_real(c);
  rec.extra["p_unclamped"] = format_real(raw_p);
  rec.extra["clamped"] = raw_p > 1.0 ? "1" : "0";
  return rec;
}

}  // namespace detail

/// C ∪ [2, n]_p contains a product triple; C is left untouched.
inline bool perturbed_trial(const IntegerSubset& C, Integer n, double p, std::uint64_t seed) {
  const auto R = sample_random_subset(n, p, seed);
  return contains_product_triple(C.united(R));
}

/// For each multiplier c, `trials` samples at p = c (n ln n)^(-1/3)
/// (RandomThreshold) or p = c alpha^-1 n^(-1/2 + beta(alpha)) against the
/// blocker set (Perturbed). Success means a product triple is present.
inline std::vector<ExperimentRecord> threshold_sweep(const SweepPlan& plan) {
  plan.validate();
  std::vector<ExperimentRecord> out;
  std::optional<BlockerSet> blocker;
  double scale = random_threshold_scale(plan.n);
  if (plan.rule == ProbabilityRule::Perturbed) {
    blocker = perturbed_blocker_set(plan.n, plan.alpha);
    scale = perturbed_scale(plan.n, blocker->params.beta_alpha) / plan.alpha;
  }
  for (std::size_t ci = 0; ci < plan.multipliers.size(); ++ci) {
    const double c = plan.multipliers[ci];
    auto rec = detail::make_record(plan.n, c, c * scale, plan.trials, plan.master_seed);
    const double p = rec.p;
    if (blocker) {
      rec.successes = detail::run_trials(plan.trials, plan.master_seed, ci, plan.workers, [&](std::uint64_t s) {
        return perturbed_trial(blocker->set, plan.n, p, s);
      });
      rec.extra["alpha"] = format_real(plan.alpha);
      rec.extra["beta_alpha"] = format_real(blocker->params.beta_alpha);
      rec.extra["blocker_size"] = std::to_string(blocker->set.size());
    } else {
      rec.successes = detail::run_trials(plan.trials, plan.master_seed, ci, plan.workers, [&](std::uint64_t s) {
        return contains_product_triple(sample_random_subset(plan.n, p, s));
      });
    }
    out.push_back(std::move(rec));
  }
  return out;
}

/// Sweep over p = c n^(-1/2 + beta(alpha)) against C = perturbed_blocker_set(n, alpha).
inline std::vector<ExperimentRecord> perturbed_sweep(Integer n, double alpha, const std::vector<double>& multipliers,
                                                     Count trials, std::uint64_t master_seed, unsigned workers = 0) {
  if (multipliers.empty()) throw std::invalid_argument("perturbed_sweep requires at least one multiplier");
  if (trials == 0) throw std::invalid_argument("perturbed_sweep requires trials >= 1");
  const auto blocker = perturbed_blocker_set(n, alpha);
  const double scale = perturbed_scale(n, blocker.params.beta_alpha);
  std::vector<ExperimentRecord> out;
  for (std::size_t ci = 0; ci < multipliers.size(); ++ci) {
    const double c = multipliers[ci];
    if (!(c > 0) || std::isinf(c)) throw std::invalid_argument("multipliers must be positive and finite");
    auto rec = detail::make_record(n, c, c * scale, trials, master_seed);
    const double p = rec.p;
    rec.successes = detail::run_trials(trials, master_seed, ci, workers,
                                       [&](std::uint64_t s) { return perturbed_trial(blocker.set, n, p, s); });
    rec.extra["alpha"] = format_real(alpha);
    rec.extra["beta_alpha"] = format_real(blocker.params.beta_alpha);
    rec.extra["blocker_size"] = std::to_string(blocker.set.size());
    rec.extra["size_ratio"] = format_real(blocker.size_ratio);
    out.push_back(std::move(rec));
  }
  return out;
}

struct DegreeStructure {
  Integer vertex_hi = 1;  // vertices are [2, vertex_hi]
  Count vertices = 0;
  Count edges = 0;
  double avg_degree = 0;  // 2 e(G) / v(G)
  IntegerSubset X;        // vertices of degree > avg_degree / 2
  Count x_size = 0;
};

/// Product graph on [2, floor(n^(1/2 + beta))] with an edge {a, b}, a < b,
/// whenever ab ∈ C'. Degrees come from scanning the multiples of each vertex;
/// the graph itself is never stored. Checks |X| >= d/2, which holds for every
/// simple graph.
inline DegreeStructure degree_structure(const IntegerSubset& Cprime, Integer n, double beta) {
  if (n < 4) throw std::invalid_argument("degree_structure requires n >= 4");
  const double top = snap_integral(std::pow(static_cast<double>(n), 0.5 + beta));
  const Integer vhi = std::min<Integer>(n, static_cast<Integer>(std::floor(top)));
  if (vhi < 2) throw std::invalid_argument("degree_structure: empty vertex set");
  DegreeStructure out{vhi, static_cast<Count>(vhi - 1), 0, 0, IntegerSubset(Interval(2, vhi)), 0};
  std::vector<Count> deg(static_cast<std::size_t>(vhi) + 1, 0);
  for (Integer a = 2; a <= vhi && a * (a + 1) <= n; ++a) {
    const Integer bmax = std::min(vhi, n / a);
    for (Integer b = a + 1; b <= bmax; ++b) {
      if (Cprime.contains(a * b)) {
        ++deg[static_cast<std::size_t>(a)];
        ++deg[static_cast<std::size_t>(b)];
        ++out.edges;
      }
    }
  }
  out.avg_degree = 2.0 * static_cast<double>(out.edges) / static_cast<double>(out.vertices);
  for (Integer v = 2; v <= vhi; ++v)
    if (static_cast<double>(deg[static_cast<std::size_t>(v)]) > out.avg_degree / 2) out.X.insert(v);
  out.x_size = out.X.size();
  if (static_cast<double>(out.x_size) < out.avg_degree / 2) {
    throw std::logic_error("degree_structure: |X| >= d/2 violated");
  }
  return out;
}

/// Multiplicative midpoint p at which the success frequency first crosses
/// 1/2, interpolated linearly in (ln p, frequency); records must be sorted by
/// p. nullopt when the frequencies never cross.
inline std::optional<double> crossing_probability(const std::vector<ExperimentRecord>& records) {
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double f0 = records[i - 1].frequency();
    const double f1 = records[i].frequency();
    if (f0 < 0.5 && f1 >= 0.5) {
      const double l0 = std::log(records[i - 1].p);
      const double l1 = std::log(records[i].p);
      const double t = f1 == f0 ? 0.5 : (0.5 - f0) / (f1 - f0);
      return std::exp(l0 + t * (l1 - l0));
    }
  }
  return std::nullopt;
}

struct MonotonicityReport {
  std::size_t inversions = 0;
  double max_drop = 0;  // largest f[i] - f[i+1] over inversions
};

/// Adjacent decreases of the frequency column.
inline MonotonicityReport monotonicity(const std::vector<ExperimentRecord>& records) {
  MonotonicityReport r;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const double drop = records[i - 1].frequency() - records[i].frequency();
    if (drop > 0) {
      ++r.inversions;
      r.max_drop = std::max(r.max_drop, drop);
    }
  }
  return r;
}

}  // namespace prodschur
