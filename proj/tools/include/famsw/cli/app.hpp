#ifndef FAMSW_CLI_APP_HPP
#define FAMSW_CLI_APP_HPP

#include <iosfwd>

namespace famsw::cli {

/// Exit codes: 0 ok, 1 a job failed, 2 parse or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitJobFailure = 1;
inline constexpr int kExitUsage = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace famsw::cli

#endif  // FAMSW_CLI_APP_HPP
