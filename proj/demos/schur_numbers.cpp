// Prints S(k) and S'(k) for k <= 3 (k = 4 with --full), the classical
// bounds, and a witness colouring for the largest value found.

#include <cstdio>
#include <cstring>
#include <iostream>
#include <string>

#include "prodschur/prodschur.hpp"

using namespace prodschur;

int main(int argc, char** argv) {
  const int top = (argc > 1 && std::strcmp(argv[1], "--full") == 0) ? 4 : 3;
  std::printf("%2s %5s %6s %12s %10s\n", "k", "S(k)", "S'(k)", "bounds", "nodes(S)");
  SchurNumberResult last;
  for (int k = 1; k <= top; ++k) {
    const auto s = schur_number(k, TripleSystem::Sum);
    const auto d = schur_number(k, TripleSystem::DoubleSum);
    const auto b = schur_bounds(k);
    const std::string bounds = "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
    std::printf("%2d %5lld %6lld %12s %10llu\n", k, static_cast<long long>(s.value), static_cast<long long>(d.value),
                bounds.c_str(), static_cast<unsigned long long>(s.nodes));
    std::fflush(stdout);
    last = s;
  }
  std::cout << "\nwitness for S(" << top << ") - 1:\n";
  for (int c = 1; c <= top; ++c) {
    std::cout << "  colour " << c << ':';
    last.witness->colour_class(c).for_each([](Integer x) { std::cout << ' ' << x; });
    std::cout << '\n';
  }
  const auto p = product_free_colouring(2, 100'000, double_sum_base_colouring(2));
  std::cout << "\nproduct-free 2-colouring of [" << p.interval().lo() << ", 100000]: "
            << verify_colouring_free(p, TripleSystem::Product).size() << " violations\n";
}
