#ifndef FAMSW_CLI_JOBS_HPP
#define FAMSW_CLI_JOBS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "famsw/cli/report.hpp"
#include "famsw/cli/scenario.hpp"
#include "famsw/expression.hpp"

namespace famsw::cli {

struct RunOptions {
  unsigned jobs = 1;
  bool strict = false;
  int max_degree = -1;  // drop class terms above this degree in output
};

/// Typed access to one sweep instance of a job.
class JobContext {
 public:
  JobContext(const Scenario& scenario, const Job& job, const OJson& instance, const RunOptions& options,
             std::vector<std::string>& warnings);

  const Scenario& scenario() const { return scenario_; }
  bool has(std::string_view key) const;
  int integer(std::string_view key) const;
  int integer(std::string_view key, int fallback) const;
  Rational rational(std::string_view key) const;
  Rational rational(std::string_view key, const Rational& fallback) const;
  std::string string(std::string_view key, std::string_view fallback) const;
  /// Array of integers or a comma-separated string.
  std::vector<int> integers(std::string_view key) const;
  std::vector<Rational> rationals(std::string_view key) const;

  const NamedSpace& space(std::string_view key, std::string_view fallback) const;
  GradedClass expression(const Space& space, std::string_view key, std::string_view fallback) const;
  BundleClass bundle(const NamedSpace& base, std::string_view key, std::string_view fallback) const;
  /// Each element of an array of bundle references.
  std::vector<BundleClass> bundles(const NamedSpace& base, std::string_view key) const;
  bool is_list(std::string_view key) const;

  /// Expression parameters: the job's "params" object plus swept keys.
  const Parameters& parameters() const { return params_; }

  std::string render(const GradedClass& c) const;
  void warn(std::string message) const;

 private:
  const OJson& required(std::string_view key) const;
  std::string field(std::string_view key) const;

  const Scenario& scenario_;
  const Job& job_;
  const OJson& instance_;
  const RunOptions& options_;
  std::vector<std::string>& warnings_;
  Parameters params_;
};

struct CommandSpec {
  std::string name;
  std::vector<std::string> sweepable;    // keys whose array values are ranges
  std::vector<std::string> space_keys;   // keys naming spaces
  std::vector<std::string> bundle_keys;  // keys holding bundle references
  std::function<OJson(const JobContext&)> run;
};

const std::vector<CommandSpec>& commands();
/// nullptr for unknown commands.
const CommandSpec* find_command(std::string_view name);

/// Runs every job, in parallel over sweep instances when options.jobs > 1.
/// Results come back in declaration order. A failing instance marks its job
/// as errored; with options.strict, jobs not yet finished are skipped.
Report run_batch(const Scenario& scenario, const RunOptions& options = {});

}  // namespace famsw::cli

#endif  // FAMSW_CLI_JOBS_HPP
