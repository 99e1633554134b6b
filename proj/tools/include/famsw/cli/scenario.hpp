#ifndef FAMSW_CLI_SCENARIO_HPP
#define FAMSW_CLI_SCENARIO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "famsw/bundles.hpp"
#include "famsw/expression.hpp"
#include "famsw/surfaces.hpp"

namespace famsw::cli {

using OJson = nlohmann::ordered_json;

/// A named base. Surfaces keep their numerical data so surface-only jobs
/// (severi, todd-genus) can use it.
struct NamedSpace {
  Space space;
  std::optional<SurfaceData> surface;
  BundleClass tangent;  // padded to rank 2 for point and torus bases
};

/// One job with its sweep expanded: `instances[k]` is the job object with
/// every swept key replaced by a concrete value.
struct Job {
  std::size_t index = 0;
  std::string cmd;
  OJson spec;
  std::vector<std::string> sweep_keys;
  std::vector<OJson> instances;
};

struct Scenario {
  std::string version = "1";
  std::map<std::string, NamedSpace, std::less<>> spaces;
  std::map<std::string, BundleClass, std::less<>> bundles;
  std::vector<Job> jobs;

  /// Declared or builtin space; UnknownName otherwise.
  const NamedSpace& space(std::string_view name) const;
};

/// Builtin bases: point, cp2, k3 (class C with C^2 = 0), torus (q = 1),
/// torus2 (q = 2).
std::optional<NamedSpace> builtin_space(std::string_view name);

/// A space declaration: surface data, {"torus": q}, or a SpaceModel
/// document. `path` prefixes error messages.
NamedSpace space_from_declaration(const OJson& j, const std::string& path);

/// Parses and validates a scenario document. Malformed input raises
/// ParseError naming the offending field; references to undeclared spaces
/// or bundles raise UnknownName.
Scenario load_scenario(std::string_view text, std::string_view origin = "<scenario>");
Scenario load_scenario_file(const std::filesystem::path& path);

/// Expands a job object into sweep instances. Keys under "sweep" and array
/// values of the command's sweepable keys are ranges [lo, hi] or
/// [lo, hi, step | "odd" | "even"]; {"values": [...]} lists values.
Job expand_job(const OJson& spec, std::size_t index, const std::string& path);

/// Bundle reference: a declared name, "tangent", "trivial" / "trivial:r",
/// "line:<expr>", or an inline {"rank", "chern"} object.
BundleClass resolve_bundle(const Scenario& s, const NamedSpace& base, const OJson& ref,
                           const Parameters& params, const std::string& path);

}  // namespace famsw::cli

#endif  // FAMSW_CLI_SCENARIO_HPP
