#pragma once

#include "sav132/enumeration.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sav132 {

/// The first disagreement a check found.
struct Mismatch {
  int n = 0;
  std::optional<int> k;
  std::string expected;
  std::string got;

  std::string to_string() const;
};

struct CheckResult {
  std::string name;
  std::string detail;  // what was compared, e.g. "n <= 12"
  std::optional<Mismatch> failure;

  bool passed() const { return !failure; }
};

struct VerifyOptions {
  int n_max = 12;
  int order = 64;
  EnumerationOptions enumeration;
};

/// Cross-checks every closed form and generating function against the brute
/// force table and constructive families up to n_max. `table` must cover n_max.
std::vector<CheckResult> verify_all(const ClassTable& table, const VerifyOptions& options);

/// One line per check plus a summary line. Deterministic for a given input.
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace sav132
