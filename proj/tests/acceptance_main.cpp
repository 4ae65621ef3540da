#include <cstdlib>
#include <iostream>

#include "bcforge/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  auto results = bcforge::run_acceptance(seed);
  std::cout << bcforge::format_acceptance(results);
  for (const auto& r : results) {
    if (!r.pass) return 1;
  }
  return 0;
}
