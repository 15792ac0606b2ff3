#pragma once

#include <string>
#include <vector>

namespace sglue {

/// Outcome of an exhaustive property check: empty means everything held.
struct Report {
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  void fail(std::string what) { failures.push_back(std::move(what)); }
  void expect(bool cond, std::string what) {
    if (!cond) fail(std::move(what));
  }
};

}  // namespace sglue
