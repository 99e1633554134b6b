#include "famsw/cli/scenario.hpp"

#include <fstream>
#include <sstream>

#include "famsw/cli/jobs.hpp"
#include "famsw/errors.hpp"
#include "famsw/expression.hpp"
#include "famsw/serialization.hpp"

namespace famsw::cli {
namespace {

constexpr std::size_t kMaxSweepSize = 100000;

[[noreturn]] void parse_error(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::ParseError, path + ": " + why);
}

// Re-raises core errors with the scenario path prepended.
template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.message());
  } catch (const nlohmann::json::exception& e) {
    parse_error(path, e.what());
  }
}

Json plain(const OJson& j) { return Json::parse(j.dump()); }

int as_int(const OJson& j, const std::string& path) {
  if (!j.is_number_integer()) parse_error(path, "expected an integer, got " + j.dump());
  return j.get<int>();
}

std::vector<OJson> range_values(const OJson& r, const std::string& path) {
  std::vector<OJson> out;
  if (r.is_object()) {
    if (!r.contains("values") || !r["values"].is_array() || r["values"].empty()) {
      parse_error(path, "expected {\"values\": [...]} with at least one value");
    }
    for (const auto& v : r["values"]) out.push_back(v);
    return out;
  }
  if (!r.is_array() || r.size() < 2 || r.size() > 3) {
    parse_error(path, "a range is [lo, hi] or [lo, hi, step|\"odd\"|\"even\"]");
  }
  const int lo = as_int(r[0], path + "[0]");
  const int hi = as_int(r[1], path + "[1]");
  if (lo > hi) parse_error(path, "empty range " + std::to_string(lo) + ".." + std::to_string(hi));
  int step = 1;
  int parity = -1;  // -1: any, 0: even, 1: odd
  if (r.size() == 3) {
    if (r[2].is_string()) {
      const std::string p = r[2].get<std::string>();
      if (p == "odd") parity = 1;
      else if (p == "even") parity = 0;
      else parse_error(path + "[2]", "expected \"odd\", \"even\" or a positive step");
    } else {
      step = as_int(r[2], path + "[2]");
      if (step <= 0) parse_error(path + "[2]", "step must be positive");
    }
  }
  if ((static_cast<long long>(hi) - lo) / step + 1 > static_cast<long long>(kMaxSweepSize)) {
    parse_error(path, "range too large");
  }
  for (int v = lo; v <= hi; v += step) {
    if (parity >= 0 && ((v % 2) + 2) % 2 != parity) continue;
    out.emplace_back(v);
  }
  if (out.empty()) parse_error(path, "range selects no values");
  return out;
}

void check_names(const Scenario& s, const Job& job, const CommandSpec& cmd, const std::string& path) {
  for (const std::string& key : cmd.space_keys) {
    if (job.spec.contains(key)) {
      if (!job.spec[key].is_string()) parse_error(path + "." + key, "expected a space name");
      (void)s.space(job.spec[key].get<std::string>());
    }
  }
  for (const std::string& key : cmd.bundle_keys) {
    if (!job.spec.contains(key)) continue;
    const OJson& ref = job.spec[key];
    std::vector<OJson> refs;
    if (ref.is_array()) refs.assign(ref.begin(), ref.end());
    else refs.push_back(ref);
    for (const OJson& r : refs) {
      if (r.is_object()) continue;
      if (!r.is_string()) parse_error(path + "." + key, "expected a bundle reference");
      const std::string name = r.get<std::string>();
      if (name == "tangent" || name == "trivial" || name.rfind("trivial:", 0) == 0 ||
          name.rfind("line:", 0) == 0 || s.bundles.count(name)) {
        continue;
      }
      throw Error(ErrorCode::UnknownName, path + "." + key + ": undeclared bundle '" + name + "'");
    }
  }
}

}  // namespace

const NamedSpace& Scenario::space(std::string_view name) const {
  if (auto it = spaces.find(name); it != spaces.end()) return it->second;
  throw Error(ErrorCode::UnknownName, "undeclared space '" + std::string(name) + "'");
}

std::optional<NamedSpace> builtin_space(std::string_view name) {
  auto surface = [](SurfaceData d) {
    SurfaceModel m = surface_model(d);
    return NamedSpace{m.space, std::move(d), m.tangent};
  };
  auto torus = [](int q) {
    Space t = torus_model(q);
    return NamedSpace{t, std::nullopt, BundleClass::trivial(t, std::max(2, q))};
  };
  if (name == "point") return NamedSpace{point_space(), std::nullopt, BundleClass::trivial(point_space(), 2)};
  if (name == "cp2") return surface(cp2_data());
  if (name == "k3") return surface(k3_data(0));
  if (name == "torus") return torus(1);
  if (name == "torus2") return torus(2);
  return std::nullopt;
}

NamedSpace space_from_declaration(const OJson& j, const std::string& path) {
  if (!j.is_object()) parse_error(path, "expected an object");
  return at_path(path, [&] {
    if (j.contains("torus")) {
      const int q = as_int(j["torus"], path + ".torus");
      if (q < 0) parse_error(path + ".torus", "q must be nonnegative");
      Space t = torus_model(q);
      return NamedSpace{t, std::nullopt, BundleClass::trivial(t, std::max(2, q))};
    }
    if (j.contains("basis")) {
      SurfaceData d = surface_from_json(plain(j));
      SurfaceModel m = surface_model(d);
      return NamedSpace{m.space, std::move(d), m.tangent};
    }
    if (j.contains("generators")) {
      Space s = space_from_json(plain(j));
      return NamedSpace{s, std::nullopt, BundleClass::trivial(s, std::max(2, s->complex_dimension()))};
    }
    parse_error(path, "expected surface data, {\"torus\": q}, or a space model");
  });
}

Job expand_job(const OJson& spec, std::size_t index, const std::string& path) {
  if (!spec.is_object()) parse_error(path, "expected a job object");
  if (!spec.contains("cmd") || !spec["cmd"].is_string()) parse_error(path + ".cmd", "missing command");
  Job job;
  job.index = index;
  job.cmd = spec["cmd"].get<std::string>();
  job.spec = spec;
  const CommandSpec* cmd = find_command(job.cmd);
  if (!cmd) throw Error(ErrorCode::UnknownName, path + ".cmd: unknown command '" + job.cmd + "'");

  std::vector<std::pair<std::string, std::vector<OJson>>> axes;
  if (spec.contains("sweep")) {
    if (!spec["sweep"].is_object()) parse_error(path + ".sweep", "expected an object");
    for (const auto& [key, r] : spec["sweep"].items()) {
      axes.emplace_back(key, range_values(r, path + ".sweep." + key));
    }
  }
  for (const std::string& key : cmd->sweepable) {
    if (spec.contains(key) && (spec[key].is_array() || spec[key].is_object())) {
      for (const auto& a : axes) {
        if (a.first == key) parse_error(path + "." + key, "swept twice");
      }
      axes.emplace_back(key, range_values(spec[key], path + "." + key));
    }
  }
  std::size_t total = 1;
  for (const auto& a : axes) {
    total *= a.second.size();
    if (total > kMaxSweepSize) parse_error(path, "sweep has more than " + std::to_string(kMaxSweepSize) + " instances");
  }
  for (const auto& a : axes) job.sweep_keys.push_back(a.first);

  // Cartesian product, first axis slowest.
  std::vector<std::size_t> pos(axes.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    OJson inst = spec;
    inst.erase("sweep");
    for (std::size_t a = 0; a < axes.size(); ++a) inst[axes[a].first] = axes[a].second[pos[a]];
    job.instances.push_back(std::move(inst));
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++pos[a] < axes[a].second.size()) break;
      pos[a] = 0;
    }
  }
  return job;
}

Scenario load_scenario(std::string_view text, std::string_view origin) {
  const std::string where(origin);
  OJson doc;
  try {
    doc = OJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, where + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) parse_error(where, "top level must be an object");
  Scenario s;
  if (!doc.contains("version")) parse_error(where + ".version", "missing");
  if (!doc["version"].is_string() || doc["version"].get<std::string>() != "1") {
    parse_error(where + ".version", "unsupported version " + doc["version"].dump() + ", expected \"1\"");
  }
  for (const char* name : {"point", "cp2", "k3", "torus", "torus2"}) s.spaces.emplace(name, *builtin_space(name));

  if (doc.contains("spaces")) {
    if (!doc["spaces"].is_object()) parse_error("spaces", "expected an object");
    for (const auto& [name, decl] : doc["spaces"].items()) {
      s.spaces.insert_or_assign(name, space_from_declaration(decl, "spaces." + name));
    }
  }
  if (doc.contains("bundles")) {
    if (!doc["bundles"].is_object()) parse_error("bundles", "expected an object");
    for (const auto& [name, decl] : doc["bundles"].items()) {
      const std::string path = "bundles." + name;
      if (!decl.is_object() || !decl.contains("space") || !decl["space"].is_string()) {
        parse_error(path + ".space", "bundle declarations name their space");
      }
      const NamedSpace& base = at_path(path + ".space", [&]() -> const NamedSpace& {
        return s.space(decl["space"].get<std::string>());
      });
      OJson body = decl;
      body.erase("space");
      s.bundles.insert_or_assign(name, resolve_bundle(s, base, body, {}, path));
    }
  }
  if (!doc.contains("jobs") || !doc["jobs"].is_array()) parse_error("jobs", "expected an array of jobs");
  for (std::size_t i = 0; i < doc["jobs"].size(); ++i) {
    const std::string path = "jobs[" + std::to_string(i) + "]";
    Job job = expand_job(doc["jobs"][i], i, path);
    check_names(s, job, *find_command(job.cmd), path);
    s.jobs.push_back(std::move(job));
  }
  return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_scenario(buf.str(), path.string());
}

BundleClass resolve_bundle(const Scenario& s, const NamedSpace& base, const OJson& ref,
                           const Parameters& params, const std::string& path) {
  return at_path(path, [&]() -> BundleClass {
    if (ref.is_object()) return bundle_from_json(base.space, plain(ref), params);
    if (!ref.is_string()) parse_error(path, "expected a bundle reference");
    const std::string name = ref.get<std::string>();
    if (name == "tangent") return base.tangent;
    if (name == "trivial") return BundleClass::trivial(base.space, 2);
    if (name.rfind("trivial:", 0) == 0) {
      const Rational r = parse_rational(name.substr(8));
      if (!is_integer(r) || r < 0) parse_error(path, "trivial rank must be a nonnegative integer");
      return BundleClass::trivial(base.space, static_cast<int>(r.get_num().get_si()));
    }
    if (name.rfind("line:", 0) == 0) return BundleClass::line(parse_class(base.space, name.substr(5), params));
    auto it = s.bundles.find(name);
    if (it == s.bundles.end()) throw Error(ErrorCode::UnknownName, "undeclared bundle '" + name + "'");
    if (it->second.ambient() != base.space) {
      throw Error(ErrorCode::AmbientMismatch, "bundle '" + name + "' lives over a different space");
    }
    return it->second;
  });
}

}  // namespace famsw::cli
