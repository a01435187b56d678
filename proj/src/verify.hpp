#pragma once
// Self-contained invariant battery behind the `verify` CLI subcommand.
// Each check is independent; `quick` trims instance sizes and sample
// counts to a few seconds total.

#include <string>
#include <vector>

namespace hextile {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(bool quick);

}  // namespace hextile
