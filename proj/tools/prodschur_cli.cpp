// Command-line front end. Exit codes: 0 success, 1 usage or validation
// error, 2 inconclusive search, 3 resource guard tripped.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "prodschur/prodschur.hpp"

using namespace prodschur;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_inconclusive = 2;
constexpr int exit_guard = 3;

struct Options {
  // shared
  std::string manifest;
  std::string out;
  std::uint64_t seed = 1;
  // schur / gstar / construct / count
  int k = 1;
  std::string system = "sum";
  Integer n = 0;
  Integer max_n = 126;
  std::optional<Count> node_limit;
  bool no_symmetry = false;
  bool allow_large_k = false;
  double eps = 0.5;
  bool exact = false;
  std::string name;
  std::string what;
  double alpha = 0;
  double y = 0;
  double z = 0;
  std::string input;
  // sweeps
  std::vector<double> multipliers;
  Count trials = 100;
  std::string rule = "random";
};

// Writes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

Colouring load_colouring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  return read_colouring(in);
}

void print_violations(std::ostream& os, const std::vector<MonoTriple>& v) {
  os << "violations " << v.size() << '\n';
  for (std::size_t i = 0; i < std::min<std::size_t>(v.size(), 10); ++i)
    os << "  " << v[i].a << ' ' << v[i].b << ' ' << v[i].c << " colour " << v[i].colour << '\n';
}

int cmd_schur(const Options& o) {
  SearchConfig cfg;
  cfg.max_n = o.max_n;
  cfg.node_limit = o.node_limit;
  cfg.symmetry_breaking = !o.no_symmetry;
  cfg.allow_large_k = o.allow_large_k;
  const auto sys = parse_system(o.system);
  const auto r = schur_number(o.k, sys, cfg);
  std::cout << "system " << to_string(sys) << '\n'
            << "k " << o.k << '\n'
            << "status " << to_string(r.status) << '\n'
            << (r.complete() ? "value " : "lower_bound ") << r.value << '\n'
            << "nodes " << r.nodes << '\n'
            << "elapsed_s " << csv_real(r.elapsed.count()) << '\n';
  if (!r.complete()) std::cout << "stop_reason " << r.stop_reason << '\n';
  if (!o.out.empty() && r.witness) {
    Sink sink(o.out);
    write_colouring(sink.os(), *r.witness);
  }
  return r.complete() ? exit_ok : exit_inconclusive;
}

int cmd_gstar(const Options& o) {
  const auto b = g_star_bounds(o.k, o.n, o.eps);
  std::cout << "k " << o.k << "\nn " << o.n << "\neps " << csv_real(o.eps) << '\n'
            << "lower " << csv_real(b.lower) << '\n'
            << "upper " << csv_real(b.upper) << '\n'
            << "upper_condition_met " << (b.upper_condition_met ? "true" : "false") << '\n';
  if (o.exact) {
    // The two readings of g*: the largest non-k-Schur subset of [2, n] and
    // the smallest k-Schur one.
    const auto largest = max_non_schur_subset(o.n, o.k, TripleSystem::Product);
    std::cout << "largest_non_schur_subset " << largest.size << '\n';
    const auto smallest = min_schur_subset(o.n, o.k, TripleSystem::Product);
    if (smallest) std::cout << "smallest_schur_subset " << smallest->size() << '\n';
    else std::cout << "smallest_schur_subset none\n";
  }
  return exit_ok;
}

int cmd_construct(const Options& o) {
  Sink sink(o.out);
  std::ostream& report = o.out.empty() ? std::cerr : std::cout;
  if (o.name == "log-product") {
    const auto c = product_free_colouring(o.k, o.n, double_sum_base_colouring(o.k));
    write_colouring(sink.os(), c);
    report << "construction log-product\nk " << o.k << "\nn " << o.n << "\nground [" << c.interval().lo() << ", "
           << o.n << "]\n";
    print_violations(report, verify_colouring_free(c, TripleSystem::Product));
  } else if (o.name == "mod5") {
    const auto m = mod5_colouring(o.n);
    write_colouring(sink.os(), m.colouring);
    report << "construction mod5\nn " << o.n << "\nsize " << m.set.size() << '\n';
    print_violations(report, verify_colouring_free(m.colouring, TripleSystem::Sum));
  } else if (o.name == "eleven") {
    const auto c = eleven_interval_colouring(o.n);
    write_colouring(sink.os(), c);
    const double nd = static_cast<double>(o.n);
    report << "construction eleven\nn " << o.n << "\nmonochromatic " << count_monochromatic(c, TripleSystem::Sum)
           << "\nreference_n2_over_22 " << csv_real(nd * nd / 22.0) << '\n';
  } else if (o.name == "blocker") {
    const double alpha = o.alpha > 0 ? o.alpha : alpha_max();
    const auto b = perturbed_blocker_set(o.n, alpha);
    write_subset(sink.os(), b.set);
    report << "construction blocker\nn " << o.n << "\nalpha " << csv_real(alpha) << "\nbeta_alpha "
           << csv_real(b.params.beta_alpha) << "\ny " << csv_real(*b.params.y) << "\nz " << csv_real(*b.params.z)
           << "\nlower_end " << b.lower_end << "\nsize " << b.set.size() << "\nsize_ratio " << csv_real(b.size_ratio)
           << "\nremoved " << b.removed << "\nremoved_over_alpha_n " << csv_real(b.removed_ratio) << '\n'
           << "product_triple " << (contains_product_triple(b.set) ? "present" : "absent") << '\n';
  } else {
    throw std::invalid_argument("unknown construction '" + o.name + "' (log-product, mod5, eleven, blocker)");
  }
  return exit_ok;
}

int cmd_count(const Options& o) {
  const double nd = static_cast<double>(o.n);
  if (o.what == "triples") {
    const auto t = count_product_triples(o.n);
    const double ref = 0.5 * nd * std::log(nd);
    std::cout << "n " << o.n << "\noff_diagonal " << t.off_diagonal << "\ndiagonal " << t.diagonal << "\ntotal "
              << t.total << "\nreference_half_n_ln_n " << csv_real(ref) << "\nratio " << csv_real(t.total / ref)
              << '\n';
  } else if (o.what == "mono") {
    const auto sys = parse_system(o.system);
    if (!o.input.empty()) {
      const auto c = load_colouring(o.input);
      std::cout << "system " << to_string(sys) << "\nmonochromatic " << count_monochromatic(c, sys) << '\n';
    } else {
      const auto m = min_monochromatic_bruteforce(o.n, o.k, sys);
      std::cout << "system " << to_string(sys) << "\nn " << o.n << "\nk " << o.k << "\nminimum " << m.count << '\n';
      if (sys == TripleSystem::Product) std::cout << "reference_n_cube_root " << csv_real(std::cbrt(nd)) << '\n';
    }
  } else if (o.what == "divisors") {
    const auto d = max_divisor_count(o.n);
    const double scale = std::log(nd) / std::log(std::log(nd));
    std::cout << "n " << o.n << "\nmax " << d.max << "\nargmax " << d.argmax << "\nreference_ln_n_over_ln_ln_n "
              << csv_real(scale) << "\nlog_ratio " << csv_real(std::log(static_cast<double>(d.max)) / scale)
              << '\n';
  } else if (o.what == "table") {
    const auto e = multiplication_table_count(o.n, o.y, o.z);
    std::cout << "n " << o.n << "\ny " << csv_real(o.y) << "\nz " << csv_real(o.z) << "\nexact " << e.exact
              << "\npreconditions_met " << (e.preconditions_met ? "true" : "false") << '\n';
    if (e.preconditions_met)
      std::cout << "u " << csv_real(*e.u) << "\ntheta_form " << csv_real(*e.theta_form) << "\nratio "
                << csv_real(*e.ratio) << '\n';
  } else if (o.what == "supersat") {
    IntegerSubset A = IntegerSubset::full(Interval(2, std::max<Integer>(o.n, 2)));
    if (!o.input.empty()) A = load_colouring(o.input).ground();
    const Integer top = A.interval().hi();
    std::cout << "n " << top << "\nsize " << A.size() << "\nsupersaturation " << supersaturation_count(A)
              << "\nreference_n_over_8 " << csv_real(static_cast<double>(top) / 8.0) << '\n';
  } else {
    throw std::invalid_argument("unknown count '" + o.what + "' (triples, mono, divisors, table, supersat)");
  }
  return exit_ok;
}

void write_sweep(const Options& o, const std::vector<ExperimentRecord>& records, bool perturbed) {
  Sink sink(o.out);
  auto& os = sink.os();
  os << "n,c,p,trials,successes,frequency";
  if (perturbed) os << ",alpha,beta_alpha,blocker_size";
  os << '\n';
  for (const auto& r : records) {
    os << r.n << ',' << r.extra.at("c") << ',' << csv_real(r.p) << ',' << r.trials << ',' << r.successes << ','
       << csv_real(r.frequency());
    if (perturbed) os << ',' << r.extra.at("alpha") << ',' << r.extra.at("beta_alpha") << ',' << r.extra.at("blocker_size");
    os << '\n';
    if (r.extra.at("clamped") == "1")
      std::cerr << "note: p clamped to 1 at c=" << r.extra.at("c") << " (unclamped " << r.extra.at("p_unclamped") << ")\n";
  }
}

int cmd_threshold(const Options& o) {
  SweepPlan plan;
  plan.n = o.n;
  plan.multipliers = o.multipliers;
  plan.trials = o.trials;
  plan.master_seed = o.seed;
  if (o.rule == "perturbed") {
    plan.rule = ProbabilityRule::Perturbed;
    plan.alpha = o.alpha > 0 ? o.alpha : alpha_max();
  } else if (o.rule != "random") {
    throw std::invalid_argument("unknown rule '" + o.rule + "' (random, perturbed)");
  }
  write_sweep(o, threshold_sweep(plan), plan.rule == ProbabilityRule::Perturbed);
  return exit_ok;
}

int cmd_perturbed(const Options& o) {
  const double alpha = o.alpha > 0 ? o.alpha : alpha_max();
  write_sweep(o, perturbed_sweep(o.n, alpha, o.multipliers, o.trials, o.seed), true);
  return exit_ok;
}

void write_manifest(const Options& o, int argc, char** argv, double wall) {
  std::string command_line;
  std::string config;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) command_line += ' ';
    command_line += argv[i];
    const std::string arg = argv[i];
    if (arg == "--manifest") {
      ++i;
      continue;
    }
    if (i > 0) config += arg + '\x1f';
  }
  nlohmann::ordered_json j;
  j["command_line"] = command_line;
  j["config_digest"] = hex64(fnv1a64(config));
  j["seed"] = o.seed;
  j["tool_version"] = tool_version;
  j["wall_time_s"] = wall;
  std::ofstream f(o.manifest);
  if (!f) throw std::invalid_argument("cannot open manifest file '" + o.manifest + "'");
  f << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Schur-type numbers, product-free constructions and random product-triple experiments"};
  app.set_version_flag("--version", tool_version);
  app.require_subcommand(1);
  app.add_option("--manifest", o.manifest, "Write a JSON run manifest to this path");

  auto* schur = app.add_subcommand("schur", "Exact Schur-type number S(k) for a triple system");
  schur->add_option("--k", o.k, "Number of colours")->required()->check(CLI::Range(1, 32));
  schur->add_option("--system", o.system, "sum, double-sum or product");
  schur->add_option("--max-n", o.max_n, "Search ceiling");
  schur->add_option("--node-limit", o.node_limit, "Stop after this many search nodes");
  schur->add_flag("--no-symmetry", o.no_symmetry, "Disable colour-permutation symmetry breaking");
  schur->add_flag("--allow-large-k", o.allow_large_k, "Permit k > 4");
  schur->add_option("--out", o.out, "Write the witness colouring here");

  auto* gstar = app.add_subcommand("gstar", "Bounds on g*(k, n) and their validity flag");
  gstar->add_option("--k", o.k)->required();
  gstar->add_option("--n", o.n)->required();
  gstar->add_option("--eps", o.eps);
  gstar->add_flag("--exact", o.exact, "Also compute both exact readings by brute force (tiny n)");

  auto* construct = app.add_subcommand("construct", "Build and verify a colouring or set");
  construct->add_option("--name", o.name, "log-product, mod5, eleven or blocker")->required();
  construct->add_option("--n", o.n)->required();
  construct->add_option("--k", o.k);
  construct->add_option("--alpha", o.alpha, "Blocker alpha (default f^-1(1/4))");
  construct->add_option("--out", o.out, "Write the colouring here (report goes to stdout)");

  auto* count = app.add_subcommand("count", "Exact counts with asymptotic reference values");
  count->add_option("--what", o.what, "triples, mono, divisors, table or supersat")->required();
  count->add_option("--n", o.n);
  count->add_option("--k", o.k);
  count->add_option("--system", o.system);
  count->add_option("--y", o.y);
  count->add_option("--z", o.z);
  count->add_option("--input", o.input, "Colouring or set file");

  auto* threshold = app.add_subcommand("threshold", "Random-threshold sweep (CSV)");
  threshold->add_option("--n", o.n)->required();
  threshold->add_option("--c", o.multipliers, "Multipliers")->required()->delimiter(',');
  threshold->add_option("--trials", o.trials);
  threshold->add_option("--seed", o.seed);
  threshold->add_option("--rule", o.rule, "random or perturbed");
  threshold->add_option("--alpha", o.alpha);
  threshold->add_option("--out", o.out);

  auto* perturbed = app.add_subcommand("perturbed", "Perturbed sweep against the blocker set (CSV)");
  perturbed->add_option("--n", o.n)->required();
  perturbed->add_option("--alpha", o.alpha, "Default f^-1(1/4)");
  perturbed->add_option("--c", o.multipliers)->required()->delimiter(',');
  perturbed->add_option("--trials", o.trials);
  perturbed->add_option("--seed", o.seed);
  perturbed->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int code = exit_ok;
  try {
    if (*schur) code = cmd_schur(o);
    else if (*gstar) code = cmd_gstar(o);
    else if (*construct) code = cmd_construct(o);
    else if (*count) code = cmd_count(o);
    else if (*threshold) code = cmd_threshold(o);
    else if (*perturbed) code = cmd_perturbed(o);
    if (!o.manifest.empty()) {
      write_manifest(o, argc, argv, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
  } catch (const resource_guard_error& e) {
    std::cerr << "resource guard: " << e.what() << '\n';
    return exit_guard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return code;
}
