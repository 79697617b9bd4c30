// One line per acceptance criterion; exit status is nonzero if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "verify/verify.hpp"

int main(int argc, char** argv) {
  kwise::verify::SuiteOptions options;
  if (argc > 1) options.threads = std::atoi(argv[1]);
  if (options.threads < 1) options.threads = 1;
  int failed = 0;
  for (int id : kwise::verify::criterion_ids()) {
    const auto r = kwise::verify::run_criterion(id, options);
    const bool in_time = r.limit_seconds <= 0 || r.seconds <= r.limit_seconds;
    const bool ok = r.passed && in_time;
    if (!ok) ++failed;
    std::string limit = r.limit_seconds > 0 ? " (limit " + std::to_string(static_cast<int>(r.limit_seconds)) + " s)" : "";
    std::printf("criterion %2d %s  %-32s %8.2f s%s  %s%s\n", id, ok ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                limit.c_str(), r.detail.c_str(), in_time ? "" : " [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, kwise::verify::criterion_ids().size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
