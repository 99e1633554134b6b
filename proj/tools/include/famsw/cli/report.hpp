#ifndef FAMSW_CLI_REPORT_HPP
#define FAMSW_CLI_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "famsw/cli/scenario.hpp"

namespace famsw::cli {

/// One sweep instance: the swept parameter values and the result fields.
/// Values are exact rational strings, booleans, integers, or lists of
/// strings; never floating point.
struct Row {
  OJson params = OJson::object();
  OJson values = OJson::object();
};

struct JobReport {
  std::size_t index = 0;
  OJson job;
  std::string status = "ok";  // ok | error | skipped
  std::vector<Row> results;
  std::vector<std::string> warnings;
  std::string error;
  double seconds = 0;
};

struct Report {
  std::string version = "1";
  std::vector<JobReport> jobs;

  bool ok() const;
};

enum class Format { Table, Json, Csv };

Format parse_format(std::string_view s);

struct RenderOptions {
  Format format = Format::Table;
  /// Adds "~"-prefixed decimal approximations next to non-integer values.
  bool decimal = false;
  /// Adds per-job wall time outside the results block.
  bool timing = false;
};

std::string render(const Report& report, const RenderOptions& options = {});
OJson to_json(const Report& report, const RenderOptions& options = {});

/// Table/CSV cell text of a value; lists are joined with "; ".
std::string cell_text(const OJson& value);

/// Inverse of the JSON rendering (approximations and timing are dropped).
Report parse_report(std::string_view json_text);

}  // namespace famsw::cli

#endif  // FAMSW_CLI_REPORT_HPP
