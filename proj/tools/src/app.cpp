#include "famsw/cli/app.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "famsw/cli/jobs.hpp"
#include "famsw/cli/report.hpp"
#include "famsw/cli/scenario.hpp"
#include "famsw/errors.hpp"
#include "famsw/selftest.hpp"

namespace famsw::cli {
namespace {

struct GlobalFlags {
  std::string format = "table";
  bool decimal = false;
  bool timing = false;
  unsigned jobs = 1;
  bool strict = false;
  int max_degree = -1;
};

// "lo..hi", "lo..hi:odd", "lo..hi:2" become sweep ranges; anything else
// stays a string.
OJson flag_value(const std::string& text) {
  static const std::regex range(R"(^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*(?::\s*(odd|even|\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, range)) return text;
  OJson r = OJson::array({std::stoi(m[1]), std::stoi(m[2])});
  if (m[3].matched) {
    const std::string s = m[3];
    if (s == "odd" || s == "even") r.push_back(s);
    else r.push_back(std::stoi(s));
  }
  return r;
}

// Flags of one subcommand, copied into the job object under their names.
class JobFlags {
 public:
  JobFlags(CLI::App* app, std::string cmd) : app_(app), cmd_(std::move(cmd)) {}

  JobFlags& add(const std::string& key, const std::string& help, bool required = false) {
    auto* opt = app_->add_option("--" + key, values_[key], help);
    if (required) opt->required();
    return *this;
  }

  OJson spec() const {
    OJson j = OJson::object();
    j["cmd"] = cmd_;
    for (const auto& [k, v] : values_) {
      if (app_->count("--" + k) > 0) j[k] = flag_value(v);
    }
    return j;
  }

  CLI::App* app() const { return app_; }

 private:
  CLI::App* app_;
  std::string cmd_;
  std::map<std::string, std::string> values_;
};

std::vector<std::pair<std::string, std::string>> split_assignments(const std::vector<std::string>& items,
                                                                   const std::string& flag) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorCode::ParseError, flag + ": expected name=value, got '" + item + "'");
    }
    out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const Report& report, const GlobalFlags& g, std::ostream& out) {
  out << render(report, {parse_format(g.format), g.decimal, g.timing});
  return report.ok() ? kExitOk : kExitJobFailure;
}

int run_scenario(const Scenario& s, const GlobalFlags& g, std::ostream& out) {
  RunOptions o;
  o.jobs = g.jobs;
  o.strict = g.strict;
  o.max_degree = g.max_degree;
  return emit(run_batch(s, o), g, out);
}

int run_selftest(const GlobalFlags& g, std::ostream& out) {
  const auto results = selftest::run_all();
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (g.format == "json") {
    OJson j = OJson::array();
    for (const auto& r : results) {
      OJson row = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
      if (g.timing) row["seconds"] = r.seconds;
      j.push_back(row);
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) out << selftest::format_line(r) << "\n";
    int passed = 0;
    for (const auto& r : results) passed += r.passed ? 1 : 0;
    out << passed << "/" << results.size() << " criteria passed\n";
  }
  return ok ? kExitOk : kExitJobFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chern-class engine for family blowup formulas", "famsw"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--decimal", g.decimal, "Append marked decimal approximations");
  app.add_flag("--timing", g.timing, "Include per-job wall time");
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps")->check(CLI::Range(1u, 256u));
  app.add_flag("--strict", g.strict, "Abort the batch on the first job error");
  app.add_option("--max-degree", g.max_degree, "Drop class terms above this degree in output");

  std::vector<std::string> params;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--param", params, "Expression parameter name=value (repeatable)");
  };

  // space show
  auto* space = app.add_subcommand("space", "Inspect cohomology models")->require_subcommand(1);
  auto* space_show = space->add_subcommand("show", "Generators, Betti numbers and basis of a space");
  std::string space_name = "cp2";
  std::string space_file;
  space_show->add_option("name", space_name, "Builtin or file-declared space");
  space_show->add_option("--file", space_file, "JSON space declaration");

  // bundle chern
  auto* bundle = app.add_subcommand("bundle", "Bundle calculus")->require_subcommand(1);
  auto* bundle_chern = bundle->add_subcommand("chern", "Chern, Todd and Segre classes of a bundle");
  JobFlags bundle_flags(bundle_chern, "bundle-chern");
  bundle_flags.add("space", "Base space").add("sym", "Take the k-th symmetric power").add("twist", "Tensor with a line");
  std::string bundle_ref;
  int bundle_rank = -1;
  std::vector<std::string> bundle_chern_items;
  bool bundle_dual = false;
  bundle_chern->add_option("--bundle", bundle_ref, "Bundle reference (tangent, trivial:r, line:<expr>)");
  bundle_chern->add_option("--rank", bundle_rank, "Rank of an inline bundle");
  bundle_chern->add_option("--chern", bundle_chern_items, "Chern class i=expr of an inline bundle");
  bundle_chern->add_flag("--dual", bundle_dual, "Dualize first");
  add_params(bundle_chern);

  // blowup expand / crosscheck
  auto* blowup = app.add_subcommand("blowup", "Family blowup formula")->require_subcommand(1);
  std::vector<std::unique_ptr<JobFlags>> blowup_flags;
  for (const auto& [name, cmd, help] :
       std::vector<std::tuple<std::string, std::string, std::string>>{
           {"expand", "expand", "Expand the blowup formula into its summands"},
           {"crosscheck", "grr-check", "Compare ch(W_m) with the fiber integral"},
           {"obstruction", "obstruction", "Rank and Chern classes of the obstruction bundle"}}) {
    auto* sub = blowup->add_subcommand(name, help);
    auto flags = std::make_unique<JobFlags>(sub, cmd);
    flags->add("base", "Base space (default cp2)")
        .add("Ns", "Normal bundle of the section (default tangent)")
        .add("l0", "c_1 of the determinant line on the section")
        .add("m", "Coefficient of E; a range lo..hi[:odd] sweeps", true)
        .add("variant", "smooth or algebraic")
        .add("eta", "Insertion class")
        .add("E", "c_1 of E on the section (algebraic variant)");
    add_params(sub);
    blowup_flags.push_back(std::move(flags));
  }

  auto* dims = app.add_subcommand("dims", "Expected dimensions and the blowup drop");
  JobFlags dims_flags(dims, "dims");
  dims_flags.add("C2", "C.C", true).add("CK", "C.K", true).add("K2", "K.K").add("chi", "Euler characteristic");
  dims_flags.add("sigma", "Signature").add("pg", "Geometric genus").add("q", "Irregularity");
  dims_flags.add("fbd", "Formal base dimension").add("dimB", "Real dimension of the base");
  dims_flags.add("m", "Blowup coefficient").add("kind", "spin-c, gromov-taubes, family or algebraic-family");

  auto* exist = app.add_subcommand("exist", "Existence test for curves with multiple points");
  JobFlags exist_flags(exist, "exist");
  exist_flags.add("C2", "C.C", true).add("CK", "C.K", true).add("mult", "Multiplicities, comma separated", true);

  auto* asw = app.add_subcommand("asw", "Kuranishi-model invariant over P(V)");
  JobFlags asw_flags(asw, "asw");
  asw_flags.add("base", "Base space (default point)").add("V", "Kernel bundle").add("W", "Cokernel bundle");
  asw_flags.add("d", "Power of xi", true).add("eta", "Insertion class").add("odd", "Odd torus generators, 1-based");
  add_params(asw);

  auto* severi = app.add_subcommand("severi", "One-point blowup factor for a multiple point");
  JobFlags severi_flags(severi, "severi");
  severi_flags.add("surface", "Surface (default cp2)").add("C", "Coordinates of C, comma separated", true);
  severi_flags.add("p", "Multiplicity", true);
  add_params(severi);

  auto* upoly = app.add_subcommand("universal-poly", "Universal polynomial for multiplicity p");
  JobFlags upoly_flags(upoly, "universal-poly");
  upoly_flags.add("p", "Multiplicity; a range sweeps", true);

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_path;
  run->add_option("file", scenario_path, "Scenario JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*selftest_cmd) return run_selftest(g, out);
    if (*run) return run_scenario(load_scenario_file(scenario_path), g, out);

    OJson doc = {{"version", "1"}, {"spaces", OJson::object()}, {"jobs", OJson::array()}};
    OJson job;
    const OJson param_obj = [&] {
      OJson p = OJson::object();
      for (const auto& [k, v] : split_assignments(params, "--param")) p[k] = v;
      return p;
    }();

    if (*space_show) {
      job = {{"cmd", "space-show"}, {"space", space_name}};
      if (!space_file.empty()) {
        OJson decl;
        try {
          decl = OJson::parse(read_file(space_file));
        } catch (const nlohmann::json::parse_error& e) {
          throw Error(ErrorCode::ParseError, space_file + ": " + e.what());
        }
        doc["spaces"][space_name] = decl;
      }
    } else if (*bundle_chern) {
      job = bundle_flags.spec();
      if (bundle_dual) job["dual"] = "true";
      if (!bundle_chern_items.empty() || bundle_rank >= 0) {
        if (bundle_rank < 0) throw Error(ErrorCode::ParseError, "--rank is required with --chern");
        OJson chern = OJson::object();
        for (const auto& [k, v] : split_assignments(bundle_chern_items, "--chern")) chern[k] = v;
        job["bundle"] = {{"rank", bundle_rank}, {"chern", chern}};
      } else if (!bundle_ref.empty()) {
        job["bundle"] = bundle_ref;
      }
    } else {
      for (const auto& f : blowup_flags) {
        if (*f->app()) job = f->spec();
      }
      for (const JobFlags* f : {&dims_flags, &exist_flags, &asw_flags, &severi_flags, &upoly_flags}) {
        if (*f->app()) job = f->spec();
      }
    }
    if (!param_obj.empty()) job["params"] = param_obj;
    doc["jobs"].push_back(job);
    return run_scenario(load_scenario(doc.dump(), "<arguments>"), g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownName ? kExitUsage : kExitJobFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitJobFailure;
  }
}

}  // namespace famsw::cli
