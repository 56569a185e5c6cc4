#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewpoly::cli {

/// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kMalformed = 2;

/// Runs one batch verb. `args` excludes the program name. The job is read
/// from --job <path> or else from `in`; the JSON result goes to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

struct SelftestCase {
  std::string name;
  bool passed;
  std::string detail;
};

/// The built-in example suite behind the `selftest` verb.
std::vector<SelftestCase> selftest();

}  // namespace skewpoly::cli
