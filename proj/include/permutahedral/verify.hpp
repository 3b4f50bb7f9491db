#pragma once

#include <functional>
#include <string>
#include <vector>

namespace permutahedral {

struct Check {
  std::string identity;
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  bool ok() const { return failed == 0; }
};

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::vector<Check> checks;

  bool ok() const;
  std::string str() const;
};

/// symmetries, cyclic-sum, methods, mixed-eulerian, vexillary, lukasiewicz, tables.
const std::vector<std::string>& suite_names();

/// Runs one suite exhaustively up to size n ("all" runs every suite).
/// data_dir holds the golden table CSVs used by the "tables" suite.
std::vector<SuiteReport> run_suite(const std::string& name, int n, int threads = 1, const std::string& data_dir = "");

/// Calls body(i) for i in [0, count) on up to `threads` threads.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace permutahedral
