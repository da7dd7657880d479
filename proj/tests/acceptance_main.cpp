// Acceptance suite: one line per criterion, exit 0 iff everything passed.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "wigner/acceptance.hpp"

int main(int argc, char** argv) {
  unsigned seed = 42;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      seed = static_cast<unsigned>(std::strtoul(argv[i + 1], nullptr, 10));

  const auto results = wigner::acceptance::run_all(seed);
  for (const auto& r : results)
    std::printf("%s\n", wigner::acceptance::format_line(r).c_str());

  const bool ok = wigner::acceptance::all_pass(results);
  std::printf("%zu criteria, %s\n", results.size(), ok ? "all passed" : "FAILURES");
  return ok ? 0 : 1;
}
