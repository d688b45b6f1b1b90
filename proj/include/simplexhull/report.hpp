#pragma once

// Outcome of one CLI command: tabular rows plus pass/fail verdicts, with a
// digest of the inputs so that runs can be compared.

#include <string>
#include <string_view>
#include <vector>

namespace simplexhull {

struct Verdict {
  std::string name;
  bool pass = false;
  double measured = 0;
  double expected = 0;
  double tolerance = 0;
  std::string detail;
  int group = 0;  ///< numbered check this verdict belongs to; 0 when ungrouped
};

struct RunReport {
  std::string command;
  std::string inputs_digest;  ///< 16 hex digits
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<Verdict> verdicts;

  /// Throws InputError when a verdict has a non-finite measured or expected value.
  void add(Verdict v);
  bool all_pass() const;

  std::string rows_csv() const;
  std::string verdicts_csv() const;
  std::string to_json() const;
};

/// 64-bit FNV-1a of `text` as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view text);

}  // namespace simplexhull
