#ifndef FAMSW_SELFTEST_HPP
#define FAMSW_SELFTEST_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace famsw::selftest {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // instance count on success, first failure otherwise
  double seconds = 0;
};

struct Options {
  std::uint64_t seed = 20240611;
  int property_instances = 200;
};

/// Runs every acceptance criterion in order.
std::vector<CriterionResult> run_all(const Options& options = {});

/// "PASS  3  obstruction ranks ... (0.012 s)"
std::string format_line(const CriterionResult& r);

/// Prints one line per criterion and a summary; returns true when all pass.
bool run_and_print(std::ostream& out, const Options& options = {});

}  // namespace famsw::selftest

#endif  // FAMSW_SELFTEST_HPP
