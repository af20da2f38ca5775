// Acceptance harness: runs the headline checks and prints one PASS/FAIL line
// per criterion. Exit status 0 only if every requested criterion passed.
// Usage: acceptance [--claim N]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <vector>

#include "phasequant/reproduce.hpp"

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--claim") == 0 && i + 1 < argc) {
      only = std::atoi(argv[i + 1]);
      ++i;
    } else {
      std::fprintf(stderr, "usage: %s [--claim N]\n", argv[0]);
      return 2;
    }
  }

  std::vector<int> ids;
  if (only > 0) {
    ids.push_back(only);
  } else {
    for (const auto& info : phasequant::reproduce::claim_registry()) ids.push_back(info.id);
  }

  int failures = 0;
  for (int id : ids) {
    try {
      const auto res = phasequant::reproduce::run_claim(id);
      std::printf("[%s] criterion %2d (%s): %s\n", res.pass ? "PASS" : "FAIL", res.id,
                  res.slug.c_str(), res.details.c_str());
      for (const auto& [name, value] : res.values)
        std::printf("         %s = %.15g\n", name.c_str(), value);
      if (!res.pass) ++failures;
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion %2d: unexpected error: %s\n", id, e.what());
      ++failures;
    }
  }
  if (ids.size() > 1)
    std::printf("%d/%d criteria passed\n", static_cast<int>(ids.size()) - failures,
                static_cast<int>(ids.size()));
  return failures == 0 ? 0 : 1;
}
