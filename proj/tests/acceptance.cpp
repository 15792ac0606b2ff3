// Runs every acceptance criterion once and prints one line per criterion.
// Exit status is nonzero if any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "sglue/suite.hpp"

int main(int argc, char** argv) {
  int corpus_max = 7;
  if (argc > 1) corpus_max = std::atoi(argv[1]);
  const auto opt = sglue::suite_options_from_env(corpus_max);
  const auto corpus = sglue::build_corpus(opt);
  int failed = 0;
  for (const auto& [id, f] : sglue::criteria()) {
    const auto r = sglue::run_criterion(id, f, corpus);
    std::cout << sglue::format_result(r) << std::endl;
    if (!r.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
