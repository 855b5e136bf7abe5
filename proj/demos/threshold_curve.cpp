// Success frequency of [2, n]_p containing a product triple as p runs over
// multiples of (n ln n)^(-1/3); writes CSV to stdout.

#include <cstdlib>
#include <iostream>

#include "prodschur/prodschur.hpp"

using namespace prodschur;

int main(int argc, char** argv) {
  SweepPlan plan;
  plan.n = argc > 1 ? std::atoll(argv[1]) : 100'000;
  plan.trials = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 100;
  plan.master_seed = 2024;
  for (double c = 0.05; c < 25; c *= 1.6) plan.multipliers.push_back(c);
  const auto records = threshold_sweep(plan);
  std::cout << "c,p,frequency\n";
  for (const auto& r : records) std::cout << r.extra.at("c") << ',' << csv_real(r.p) << ',' << csv_real(r.frequency()) << '\n';
  if (auto x = crossing_probability(records))
    std::cerr << "p at frequency 1/2: " << *x << " = " << *x / random_threshold_scale(plan.n) << " (n ln n)^(-1/3)\n";
}
