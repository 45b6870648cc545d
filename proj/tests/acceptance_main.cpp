// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <cstdlib>

#include "rank2/acceptance.hpp"

int main(int argc, char** argv) {
  rank2::acceptance::Options opt;
  int failed = 0;
  for (int id = 1; id <= static_cast<int>(rank2::acceptance::criteria().size()); ++id) {
    if (argc > 1 && std::atoi(argv[1]) != id) continue;
    const auto r = rank2::acceptance::run(id, opt);
    std::printf("[%s] criterion %2d: %s (%.2fs, budget %.0fs) %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds, r.budget_seconds, r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d criteria failed\n", failed);
  return failed ? 1 : 0;
}
