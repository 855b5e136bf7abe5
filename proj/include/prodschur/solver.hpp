#pragma once

// Exact search for colourings of integer sets that avoid monochromatic
// triples, Schur-type numbers, and small extremal subset problems.

#include <array>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "parallel.hpp"

namespace prodschur {

enum class SearchStatus { found, absent, inconclusive };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::absent: return "absent";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct SearchConfig {
  int k = 1;
  TripleSystem system = TripleSystem::Sum;
  Integer max_n = 126;
  bool symmetry_breaking = true;
  std::optional<Count> node_limit;
  // Subtrees below this depth are searched independently (and concurrently).
  // Results, including node counts, do not depend on the worker count.
  std::size_t split_depth = 8;
  unsigned workers = 0;  // 0: worker_count()
  // Searches for k > 4 are refused unless this is set.
  bool allow_large_k = false;

  void validate() const {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (max_n < 1) throw std::invalid_argument("max_n must be >= 1");
  }
};

struct ColouringSearch {
  SearchStatus status = SearchStatus::absent;
  std::optional<Colouring> colouring;
  Count nodes = 0;
};

struct SchurNumberResult {
  SearchStatus status = SearchStatus::inconclusive;  // found: value is exact
  // Exact value when complete; otherwise a proven lower bound.
  Integer value = 0;
  std::optional<Colouring> witness;  // good colouring of [start, value - 1]
  Count nodes = 0;
  std::chrono::duration<double> elapsed{};
  std::string stop_reason;

  bool complete() const noexcept { return status == SearchStatus::found; }

  SolverOutcome outcome() const {
    if (!complete() || !witness) throw std::logic_error("search did not complete: " + stop_reason);
    return SolverOutcome{value, *witness, nodes, elapsed};
  }
};

namespace detail {

struct Prefix {
  std::vector<int> colours;
  int used = 0;
};

// Shared outcome of one engine run.
struct RunStats {
  Count nodes = 0;
  bool limited = false;
  bool ceiling = false;
  bool found = false;
  std::size_t best = 0;  // deepest fully coloured prefix length
  std::vector<int> witness;
  std::vector<Prefix> prefixes;
};

// Additive systems on integers below the bit width of Mask. Each colour keeps
// a class mask and a mask of elements for which that colour is forbidden;
// adding x to class c forbids c on x + y (and x + y + 1) for y in the class,
// which is one shift of the class mask.
template <class Mask, int MaxK = 16>
class AdditiveEngine {
 public:
  static constexpr int width = sizeof(Mask) * 8;

  AdditiveEngine(std::vector<Integer> order, int k, bool double_sum, bool symmetry, bool incremental,
                 std::optional<Count> limit)
      : order_(std::move(order)), k_(k), double_sum_(double_sum), symmetry_(symmetry), incremental_(incremental),
        limit_(limit.value_or(std::numeric_limits<Count>::max())) {
    assign_.assign(order_.size(), -1);
    if (incremental_) {
      target_ = std::min<std::size_t>(1, order_.size());
      for (std::size_t i = 0; i < target_; ++i) upto_ |= bit(order_[i]);
    } else {
      target_ = order_.size();
      for (Integer x : order_) upto_ |= bit(x);
    }
  }

  void collect_at(std::size_t depth) { collect_ = depth; }

  bool replay(const Prefix& prefix) {
    for (std::size_t pos = 0; pos < prefix.colours.size(); ++pos) {
      const int c = prefix.colours[pos];
      const Mask xb = bit(order_[pos]);
      if (forb_[c] & xb) return false;
      apply(c, order_[pos]);
      assign_[pos] = c;
    }
    if (incremental_) set_target(prefix.colours.size());
    return true;
  }

  void run(std::size_t pos, int used) { dfs(pos, used); }

  RunStats& stats() { return stats_; }

 private:
  static Mask bit(Integer x) { return Mask{1} << x; }

  void set_target(std::size_t t) {
    while (target_ < t && target_ < order_.size()) upto_ |= bit(order_[target_++]);
  }

  void apply(int c, Integer x) {
    cls_[c] |= bit(x);
    Mask f = cls_[c] << x;
    if (double_sum_) f |= cls_[c] << (x + 1);
    forb_[c] |= f;
  }

  bool dfs(std::size_t pos, int used) {
    if (pos == target_) {
      if (pos > stats_.best || stats_.witness.empty()) {
        stats_.best = pos;
        stats_.witness.assign(assign_.begin(), assign_.begin() + static_cast<std::ptrdiff_t>(pos));
      }
      if (!incremental_) {
        stats_.found = true;
        return true;
      }
      if (target_ == order_.size()) {
        stats_.ceiling = true;
        return true;
      }
      upto_ |= bit(order_[target_++]);
    }
    if (collect_ && pos == *collect_) {
      stats_.prefixes.push_back(Prefix{std::vector<int>(assign_.begin(), assign_.begin() + static_cast<std::ptrdiff_t>(pos)), used});
      return false;
    }
    const Integer x = order_[pos];
    const Mask xb = bit(x);
    const Mask above = ~((xb << 1) - 1);
    const int top = symmetry_ ? std::min(used + 1, k_) : k_;
    for (int c = 0; c < top; ++c) {
      if (forb_[c] & xb) continue;
      if (++stats_.nodes > limit_) {
        stats_.limited = true;
        return true;
      }
      const Mask old_cls = cls_[c];
      const Mask old_forb = forb_[c];
      apply(c, x);
      Mask wiped = forb_[0];
      for (int j = 1; j < k_; ++j) wiped &= forb_[j];
      if ((wiped & upto_ & above) == 0) {
        assign_[pos] = c;
        if (dfs(pos + 1, std::max(used, c + 1))) return true;
        assign_[pos] = -1;
      }
      cls_[c] = old_cls;
      forb_[c] = old_forb;
    }
    return false;
  }

  std::vector<Integer> order_;
  int k_;
  bool double_sum_;
  bool symmetry_;
  bool incremental_;
  Count limit_;
  std::array<Mask, MaxK> cls_{};
  std::array<Mask, MaxK> forb_{};
  Mask upto_ = 0;
  std::size_t target_ = 0;
  std::vector<int> assign_;
  std::optional<std::size_t> collect_;
  RunStats stats_;
};

// Any system on any ground set: explicit triple lists with per-element
// forbidden-colour masks and a trail for undo.
class GenericEngine {
 public:
  GenericEngine(std::vector<Integer> order, int k, TripleSystem system, bool symmetry, bool incremental,
                std::optional<Count> limit)
      : order_(std::move(order)), k_(k), symmetry_(symmetry), incremental_(incremental),
        limit_(limit.value_or(std::numeric_limits<Count>::max())) {
    if (k_ > 32) throw std::invalid_argument("generic search supports at most 32 colours");
    full_ = k_ == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << k_) - 1);
    build_triples(system);
    assign_.assign(order_.size(), -1);
    forb_.assign(order_.size(), 0);
    target_ = incremental_ ? std::min<std::size_t>(1, order_.size()) : order_.size();
  }

  void collect_at(std::size_t depth) { collect_ = depth; }

  bool replay(const Prefix& prefix) {
    for (std::size_t pos = 0; pos < prefix.colours.size(); ++pos) {
      const int c = prefix.colours[pos];
      if ((forb_[pos] >> c) & 1u) return false;
      if (!try_assign(pos, c)) return false;
    }
    if (incremental_) target_ = std::max(target_, std::min(prefix.colours.size(), order_.size()));
    return true;
  }

  void run(std::size_t pos, int used) { dfs(pos, used); }

  RunStats& stats() { return stats_; }

 private:
  struct Triple {
    std::array<int, 3> m{};
    int size = 0;
  };

  void build_triples(TripleSystem system) {
    incident_.assign(order_.size(), {});
    if (order_.empty()) return;
    const Integer lo = order_.front();
    const Integer hi = order_.back();
    std::vector<int> index_of(static_cast<std::size_t>(hi - lo + 1), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) index_of[static_cast<std::size_t>(order_[i] - lo)] = static_cast<int>(i);
    auto idx = [&](Integer v) -> int {
      if (v < lo || v > hi) return -1;
      return index_of[static_cast<std::size_t>(v - lo)];
    };
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const Integer a = order_[i];
      for (std::size_t j = i; j < order_.size(); ++j) {
        const Integer b = order_[j];
        const Integer smallest = system == TripleSystem::Product ? a * b : a + b;
        if (smallest > hi) break;
        for_each_completion(a, b, system, [&](Integer c) {
          const int ci = idx(c);
          if (ci < 0) return;
          Triple t;
          for (int v : {static_cast<int>(i), static_cast<int>(j), ci}) {
            if (std::find(t.m.begin(), t.m.begin() + t.size, v) == t.m.begin() + t.size) t.m[t.size++] = v;
          }
          const int id = static_cast<int>(triples_.size());
          triples_.push_back(t);
          for (int s = 0; s < t.size; ++s) incident_[static_cast<std::size_t>(t.m[s])].push_back(id);
        });
      }
    }
  }

  bool try_assign(std::size_t pos, int c) {
    assign_[pos] = c;
    for (int id : incident_[pos]) {
      const Triple& t = triples_[static_cast<std::size_t>(id)];
      int pending = -1;
      int n_pending = 0;
      bool all_c = true;
      for (int s = 0; s < t.size; ++s) {
        const int v = assign_[static_cast<std::size_t>(t.m[s])];
        if (v == -1) {
          ++n_pending;
          pending = t.m[s];
        } else if (v != c) {
          all_c = false;
          break;
        }
      }
      if (!all_c || n_pending > 1) continue;
      if (n_pending == 0) return false;
      auto& f = forb_[static_cast<std::size_t>(pending)];
      const std::uint32_t cb = std::uint32_t{1} << c;
      if (!(f & cb)) {
        trail_.emplace_back(pending, f);
        f |= cb;
        if (f == full_ && static_cast<std::size_t>(pending) < target_) return false;
      }
    }
    return true;
  }

  void undo(std::size_t pos, std::size_t mark) {
    while (trail_.size() > mark) {
      forb_[static_cast<std::size_t>(trail_.back().first)] = trail_.back().second;
      trail_.pop_back();
    }
    assign_[pos] = -1;
  }

  bool dfs(std::size_t pos, int used) {
    if (pos == target_) {
      if (pos > stats_.best || stats_.witness.empty()) {
        stats_.best = pos;
        stats_.witness.assign(assign_.begin(), assign_.begin() + static_cast<std::ptrdiff_t>(pos));
      }
      if (!incremental_) {
        stats_.found = true;
        return true;
      }
      if (target_ == order_.size()) {
        stats_.ceiling = true;
        return true;
      }
      ++target_;
    }
    if (collect_ && pos == *collect_) {
      stats_.prefixes.push_back(Prefix{std::vector<int>(assign_.begin(), assign_.begin() + static_cast<std::ptrdiff_t>(pos)), used});
      return false;
    }
    const int top = symmetry_ ? std::min(used + 1, k_) : k_;
    for (int c = 0; c < top; ++c) {
      if ((forb_[pos] >> c) & 1u) continue;
      if (++stats_.nodes > limit_) {
        stats_.limited = true;
        return true;
      }
      const std::size_t mark = trail_.size();
      if (try_assign(pos, c) && dfs(pos + 1, std::max(used, c + 1))) return true;
      undo(pos, mark);
    }
    return false;
  }

  std::vector<Integer> order_;
  int k_;
  bool symmetry_;
  bool incremental_;
  Count limit_;
  std::uint32_t full_ = 0;
  std::vector<Triple> triples_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> assign_;
  std::vector<std::uint32_t> forb_;
  std::vector<std::pair<int, std::uint32_t>> trail_;
  std::size_t target_ = 0;
  std::optional<std::size_t> collect_;
  RunStats stats_;
};

// Splits the tree at a fixed depth and searches the subtrees independently.
// Merging keeps the deepest result and, among equals, the earliest subtree,
// which reproduces the sequential depth-first order.
template <class MakeEngine>
RunStats split_search(MakeEngine make, std::size_t split_depth, bool incremental, std::optional<Count> node_limit,
                      unsigned workers) {
  auto head = make(node_limit);
  if (split_depth > 0) head.collect_at(split_depth);
  head.run(0, 0);
  RunStats merged = std::move(head.stats());
  if (split_depth == 0 || merged.limited || merged.found || merged.ceiling || merged.prefixes.empty()) {
    merged.prefixes.clear();
    return merged;
  }
  auto prefixes = std::move(merged.prefixes);
  merged.prefixes.clear();
  // The head run stopped at the split depth, so its `found` flag refers only
  // to targets shallower than the split.
  std::vector<RunStats> parts(prefixes.size());
  auto run_part = [&](std::size_t i, std::optional<Count> limit) {
    auto engine = make(limit);
    if (!engine.replay(prefixes[i])) throw std::logic_error("prefix replay failed");
    engine.run(prefixes[i].colours.size(), prefixes[i].used);
    parts[i] = std::move(engine.stats());
  };

  std::size_t stop_at = prefixes.size();
  if (node_limit) {
    Count remaining = *node_limit - std::min(*node_limit, merged.nodes);
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      run_part(i, remaining);
      remaining -= std::min(remaining, parts[i].nodes);
      if (parts[i].limited || parts[i].ceiling || (!incremental && parts[i].found)) {
        stop_at = i + 1;
        break;
      }
    }
  } else if (!incremental) {
    // First colouring in subtree order wins; run in chunks so later subtrees
    // are skipped once an earlier one succeeds.
    const std::size_t chunk = std::max<std::size_t>(workers, 1) * 4;
    for (std::size_t begin = 0; begin < prefixes.size() && stop_at == prefixes.size(); begin += chunk) {
      const std::size_t end = std::min(prefixes.size(), begin + chunk);
      parallel_for(end - begin, workers, [&](std::size_t j) { run_part(begin + j, std::nullopt); });
      for (std::size_t i = begin; i < end; ++i) {
        if (parts[i].found) {
          stop_at = i + 1;
          break;
        }
      }
    }
  } else {
    parallel_for(prefixes.size(), workers, [&](std::size_t i) { run_part(i, std::nullopt); });
  }

  for (std::size_t i = 0; i < stop_at; ++i) {
    auto& p = parts[i];
    merged.nodes += p.nodes;
    merged.limited = merged.limited || p.limited;
    merged.ceiling = merged.ceiling || p.ceiling;
    if (!incremental) {
      if (p.found) {
        merged.found = true;
        merged.best = p.best;
        merged.witness = std::move(p.witness);
      }
    } else if (p.best > merged.best) {
      merged.best = p.best;
      merged.witness = std::move(p.witness);
    }
  }
  return merged;
}

inline unsigned resolve_workers(unsigned w) { return w == 0 ? worker_count() : w; }

inline Colouring to_colouring(const std::vector<Integer>& order, const std::vector<int>& colours, std::size_t count,
                              int k) {
  Colouring out(Interval(order.front(), order[count - 1]), k);
  for (std::size_t i = 0; i < count; ++i) out.set(order[i], colours[i] + 1);
  return out;
}

// Runs the right engine for the system and range. Additive systems below 127
// use the shift-mask engine.
inline RunStats run_search(const std::vector<Integer>& order, int k, TripleSystem system, bool symmetry,
                           bool incremental, std::optional<Count> limit, std::size_t split_depth, unsigned workers) {
  const bool additive = system != TripleSystem::Product;
  const Integer top = order.empty() ? 0 : order.back();
  if (additive && k <= 16 && top <= 62) {
    auto make = [&](std::optional<Count> l) {
      return AdditiveEngine<std::uint64_t>(order, k, system == TripleSystem::DoubleSum, symmetry, incremental, l);
    };
    return split_search(make, split_depth, incremental, limit, workers);
  }
  if (additive && k <= 16 && top <= 126) {
    auto make = [&](std::optional<Count> l) {
      return AdditiveEngine<unsigned __int128>(order, k, system == TripleSystem::DoubleSum, symmetry, incremental, l);
    };
    return split_search(make, split_depth, incremental, limit, workers);
  }
  auto make = [&](std::optional<Count> l) { return GenericEngine(order, k, system, symmetry, incremental, l); };
  return split_search(make, split_depth, incremental, limit, workers);
}

}  // namespace detail

/// Searches for a k-colouring of `ground` with no monochromatic triple.
/// `absent` is a certificate of nonexistence; hitting the node limit yields
/// `inconclusive`.
inline ColouringSearch exists_good_colouring(const IntegerSubset& ground, int k, TripleSystem system,
                                             const SearchConfig& config = {}) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const auto order = ground.members();
  if (order.empty()) {
    // The empty colouring is trivially good; represent it on the carrier interval.
    Colouring empty(ground.interval(), k);
    for (Integer x = ground.interval().lo(); x <= ground.interval().hi(); ++x) empty.remove(x);
    return {SearchStatus::found, empty, 0};
  }
  const auto split = std::min(config.split_depth, order.size());
  auto stats = detail::run_search(order, k, system, config.symmetry_breaking, false, config.node_limit,
                                  split < order.size() ? split : 0, detail::resolve_workers(config.workers));
  ColouringSearch out;
  out.nodes = stats.nodes;
  if (stats.found) {
    Colouring c(ground.interval(), k);
    for (Integer x = ground.interval().lo(); x <= ground.interval().hi(); ++x) c.remove(x);
    for (std::size_t i = 0; i < order.size(); ++i) c.set(order[i], stats.witness[i] + 1);
    if (has_mono_triple(c, system)) throw std::logic_error("search produced an invalid colouring");
    out.status = SearchStatus::found;
    out.colouring = std::move(c);
  } else {
    out.status = stats.limited ? SearchStatus::inconclusive : SearchStatus::absent;
  }
  return out;
}

/// Least n such that every k-colouring of [start, n] has a monochromatic
/// triple, where start is 1 for the additive systems and 2 for products.
/// One depth-first pass extends good colourings of [start, m] to m + 1 and
/// raises the target each time a deeper colouring appears.
inline SchurNumberResult schur_number(int k, TripleSystem system, SearchConfig config = {}) {
  config.k = k;
  config.system = system;
  config.validate();
  if (k > 4 && !config.allow_large_k) {
    throw resource_guard_error("exact Schur-type numbers for k > 4 are beyond desk scale (set allow_large_k)");
  }
  const auto t0 = std::chrono::steady_clock::now();
  const Integer start = ground_start(system);
  if (config.max_n < start) throw std::invalid_argument("max_n below the ground start");
  std::vector<Integer> order;
  for (Integer x = start; x <= config.max_n; ++x) order.push_back(x);
  auto stats = detail::run_search(order, k, system, config.symmetry_breaking, true, config.node_limit,
                                  std::min(config.split_depth, order.size()), detail::resolve_workers(config.workers));
  SchurNumberResult out;
  out.nodes = stats.nodes;
  out.value = start + static_cast<Integer>(stats.best);
  if (stats.best > 0) {
    out.witness = detail::to_colouring(order, stats.witness, stats.best, k);
    if (has_mono_triple(*out.witness, system)) throw std::logic_error("search produced an invalid witness");
  }
  if (stats.limited) {
    out.status = SearchStatus::inconclusive;
    out.stop_reason = "node limit reached";
  } else if (stats.ceiling) {
    out.status = SearchStatus::inconclusive;
    out.stop_reason = "search ceiling max_n reached";
    out.value = config.max_n + 1;
  } else {
    out.status = SearchStatus::found;
  }
  out.elapsed = std::chrono::steady_clock::now() - t0;
  return out;
}

struct SchurBounds {
  Integer lower;
  Integer upper;
};

/// Classical bounds (3^k + 1)/2 <= S(k) <= floor(k! e), evaluated in exact
/// integer arithmetic: floor(k! e) = sum_{j<=k} k!/j! because the tail of the
/// series stays below 1.
inline SchurBounds schur_bounds(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (k > 20) throw std::overflow_error("schur_bounds: k! e exceeds 64-bit range for k > 20");
  Integer pow3 = 1;
  for (int i = 0; i < k; ++i) pow3 *= 3;
  Integer upper = 0;
  Integer term = 1;  // k!/j! for j = k down to 0
  for (int j = k; j >= 0; --j) {
    upper += term;
    term *= j;
  }
  return {(pow3 + 2) / 2, upper};
}

struct KnownSchur {
  Integer sum;         // S(k)
  Integer double_sum;  // S'(k)
};

/// Tabulated S(k) and S'(k) for k <= 4.
inline std::optional<KnownSchur> known_schur(int k) {
  static constexpr std::array<KnownSchur, 4> table{{{2, 2}, {5, 5}, {14, 14}, {45, 41}}};
  if (k < 1 || k > 4) return std::nullopt;
  return table[static_cast<std::size_t>(k - 1)];
}

/// True iff every k-colouring of A has a monochromatic triple. Throws
/// when the search is inconclusive.
inline bool is_k_schur(const IntegerSubset& A, int k, TripleSystem system, const SearchConfig& config = {}) {
  const auto r = exists_good_colouring(A, k, system, config);
  if (r.status == SearchStatus::inconclusive) throw resource_guard_error("is_k_schur: search inconclusive");
  return r.status == SearchStatus::absent;
}

struct ExtremalSubset {
  Count size = 0;
  IntegerSubset subset;
  Colouring colouring;
};

namespace detail {

// Branch and bound over include-with-colour / exclude decisions. Including is
// tried before excluding, so the first maximum found has the
// lexicographically greatest indicator vector.
class MaxSubsetSearch {
 public:
  MaxSubsetSearch(Integer lo, Integer hi, int k, TripleSystem system) : lo_(lo), hi_(hi), k_(k) {
    const auto m = static_cast<std::size_t>(hi - lo + 1);
    state_.assign(m, unset);
    // Triples whose largest element is x, indexed by x: pairs (a, b) with a <= b.
    closing_.assign(m, {});
    for (Integer a = lo; a <= hi; ++a) {
      for (Integer b = a; b <= hi; ++b) {
        const Integer smallest = system == TripleSystem::Product ? a * b : a + b;
        if (smallest > hi) break;
        for_each_completion(a, b, system, [&](Integer c) {
          if (c >= lo && c <= hi) closing_[static_cast<std::size_t>(std::max(c, b) - lo)].push_back({a, b, c});
        });
      }
    }
  }

  void run() { dfs(0, 0, 0); }

  Count best() const { return best_; }
  const std::vector<int>& best_state() const { return best_state_; }

 private:
  static constexpr int unset = -2;
  static constexpr int excluded = -1;

  int& at(Integer x) { return state_[static_cast<std::size_t>(x - lo_)]; }

  // Triple check when the largest element of some triples gets coloured c.
  bool closes_mono(Integer x, int c) {
    for (const auto& t : closing_[static_cast<std::size_t>(x - lo_)]) {
      bool mono = true;
      for (Integer v : t) {
        const int s = v == x ? c : at(v);
        if (s != c) {
          mono = false;
          break;
        }
      }
      if (mono) return true;
    }
    return false;
  }

  void dfs(std::size_t pos, Count included, int used) {
    const auto m = state_.size();
    if (included + (m - pos) <= best_ && !best_state_.empty()) return;
    if (pos == m) {
      best_ = included;
      best_state_ = state_;
      return;
    }
    const Integer x = lo_ + static_cast<Integer>(pos);
    const int top = std::min(used + 1, k_);
    for (int c = 0; c < top; ++c) {
      if (closes_mono(x, c)) continue;
      at(x) = c;
      dfs(pos + 1, included + 1, std::max(used, c + 1));
      at(x) = unset;
      if (included + (m - pos) <= best_) return;
    }
    at(x) = excluded;
    dfs(pos + 1, included, used);
    at(x) = unset;
  }

  Integer lo_;
  Integer hi_;
  int k_;
  std::vector<int> state_;
  std::vector<std::vector<std::array<Integer, 3>>> closing_;
  Count best_ = 0;
  std::vector<int> best_state_;
};

}  // namespace detail

/// Largest subset of [1,n] (additive) or [2,n] (product) that admits a good
/// k-colouring, with the colouring as witness.
inline ExtremalSubset max_non_schur_subset(Integer n, int k, TripleSystem system) {
  if (k < 1 || k > 16) throw std::invalid_argument("max_non_schur_subset: k must be in [1, 16]");
  const Integer lo = ground_start(system);
  if (n < lo) throw std::invalid_argument("max_non_schur_subset: n below the ground start");
  if (n - lo + 1 > 40) throw resource_guard_error("max_non_schur_subset: brute force limited to 40 elements");
  detail::MaxSubsetSearch search(lo, n, k, system);
  search.run();
  const Interval iv(lo, n);
  IntegerSubset subset(iv);
  Colouring colouring(iv, k);
  const auto& st = search.best_state();
  for (Integer x = lo; x <= n; ++x) {
    const int s = st[static_cast<std::size_t>(x - lo)];
    if (s >= 0) {
      subset.insert(x);
      colouring.set(x, s + 1);
    } else {
      colouring.remove(x);
    }
  }
  if (has_mono_triple(colouring, system)) throw std::logic_error("max_non_schur_subset produced an invalid witness");
  return {search.best(), std::move(subset), std::move(colouring)};
}

/// Smallest k-Schur subset of [start, n], scanning sizes upward and subsets
/// in lexicographic order within a size; nullopt if [start, n] itself is not
/// k-Schur.
inline std::optional<IntegerSubset> min_schur_subset(Integer n, int k, TripleSystem system,
                                                     Count max_candidates = 20'000'000) {
  const Integer lo = ground_start(system);
  if (n < lo) throw std::invalid_argument("min_schur_subset: n below the ground start");
  const Interval iv(lo, n);
  if (!is_k_schur(IntegerSubset::full(iv), k, system)) return std::nullopt;
  const auto m = static_cast<std::size_t>(n - lo + 1);
  SearchConfig cfg;
  cfg.split_depth = 0;
  cfg.workers = 1;
  Count examined = 0;
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      if (++examined > max_candidates) throw resource_guard_error("min_schur_subset: candidate limit exceeded");
      IntegerSubset A(iv);
      for (auto i : pick) A.insert(lo + static_cast<Integer>(i));
      if (is_k_schur(A, k, system, cfg)) return A;
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace prodschur
