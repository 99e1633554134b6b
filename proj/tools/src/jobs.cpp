#include "famsw/cli/jobs.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "famsw/applications.hpp"
#include "famsw/blowup.hpp"
#include "famsw/errors.hpp"
#include "famsw/kuranishi.hpp"
#include "famsw/serialization.hpp"

namespace famsw::cli {
namespace {

std::string str(const Rational& r) { return to_string(r); }

int to_int(const Rational& r, const std::string& field) {
  if (!is_integer(r) || !r.get_num().fits_sint_p()) {
    throw Error(ErrorCode::ParseError, field + ": expected an integer, got " + str(r));
  }
  return static_cast<int>(r.get_num().get_si());
}

Variant parse_variant(const std::string& s) {
  if (s == "smooth") return Variant::Smooth;
  if (s == "algebraic") return Variant::Algebraic;
  throw Error(ErrorCode::ParseError, "variant: expected smooth or algebraic, got '" + s + "'");
}

FamilyBlowupScenario scenario_of(const JobContext& c) {
  const NamedSpace& base = c.space("base", "cp2");
  FamilyBlowupScenario s(base.space, c.expression(base.space, "l0", "0"), c.bundle(base, "Ns", "tangent"),
                         c.integer("m"), parse_variant(c.string("variant", "smooth")));
  s.insertion = c.expression(base.space, "eta", "1");
  if (c.has("E")) s.exceptional_restriction = BundleClass::line(c.expression(base.space, "E", "0"));
  return s;
}

OJson string_list(const std::vector<std::string>& v) { return OJson(v); }

OJson chern_list(const JobContext& c, const BundleClass& e) {
  std::vector<std::string> out;
  for (const GradedClass& ci : e.chern_classes()) out.push_back(c.render(ci));
  return string_list(out);
}

OJson run_nodal(const JobContext& c) { return {{"count", str(nodal_cp2(c.integer("d")))}}; }

OJson run_k3(const JobContext& c) {
  c.warn("sign of the count depends on the chamber; reported with ASW(point) = +1");
  return {{"count", str(k3_twistor_count(c.rational("C2", 0)))}};
}

OJson run_severi(const JobContext& c) {
  const NamedSpace& s = c.space("surface", "cp2");
  if (!s.surface) throw Error(ErrorCode::JobError, "severi needs surface data");
  const Rational v = severi_one_point(*s.surface, c.rationals("C"), c.integer("p"));
  return {{"value", str(v)}};
}

OJson run_universal(const JobContext& c) {
  const UniversalPolynomial u = universal_poly(c.integer("p"));
  OJson coeffs = OJson::object();
  std::string poly;
  for (const auto& [name, v] : u.named_coefficients()) {
    coeffs[name] = str(v);
    poly += (poly.empty() ? "" : " + ") + (v == 1 ? name : str(v) + "*" + name);
  }
  if (poly.empty()) poly = "0";
  if (!u.verified) c.warn("off-grid verification failed");
  return {{"poly", poly}, {"coefficients", coeffs}, {"verified", u.verified}};
}

OJson run_todd(const JobContext& c) {
  const NamedSpace& s = c.space("surface", "cp2");
  if (!s.surface) throw Error(ErrorCode::JobError, "todd-genus needs surface data");
  const Rational defect = noether_defect(*s.surface);
  if (defect != 0) c.warn("Noether's formula fails by " + str(defect) + "; the data is formal");
  return {{"todd", str(todd_genus(*s.surface))}, {"noether_defect", str(defect)}};
}

OJson run_grr(const JobContext& c) {
  const CrosscheckReport r = grr_crosscheck(scenario_of(c));
  return {{"equal", r.equal}, {"rank", r.rank}, {"lhs", c.render(r.lhs)}, {"rhs", c.render(r.rhs)}};
}

BundleClass obstruction_of(const FamilyBlowupScenario& s) {
  if (s.variant == Variant::Smooth) return obstruction_smooth(s);
  if (!s.exceptional_restriction) throw Error(ErrorCode::JobError, "the algebraic variant needs E");
  return obstruction_algebraic(s, *s.exceptional_restriction);
}

OJson run_expand(const JobContext& c) {
  const FamilyBlowupScenario s = scenario_of(c);
  std::vector<std::string> terms;
  for (const ExpansionTerm& t : expand_formula(s)) {
    terms.push_back("i=" + std::to_string(t.index) + ": " + c.render(t.insertion) + " (deg " +
                    std::to_string(t.degree) + ")");
  }
  return {{"rank", obstruction_of(s).rank()}, {"terms", string_list(terms)}};
}

OJson run_obstruction(const JobContext& c) {
  const BundleClass w = obstruction_of(scenario_of(c));
  return {{"rank", w.rank()}, {"chern", c.render(w.total_chern())}, {"ch", c.render(chern_character(w))}};
}

DimensionData dimension_data(const JobContext& c) {
  DimensionData d;
  d.c2_number = c.rational("C2");
  d.ck = c.rational("CK");
  d.chi = c.rational("chi", 0);
  d.sigma = c.rational("sigma", 0);
  // K^2 = 2 chi + 3 sigma on an almost complex surface.
  d.k2 = c.rational("K2", 2 * d.chi + 3 * d.sigma);
  d.pg = c.integer("pg", 0);
  d.q = c.integer("q", 0);
  d.fbd = c.integer("fbd", 0);
  d.dim_b = c.integer("dimB", 0);
  return d;
}

OJson run_dims(const JobContext& c) {
  const DimensionData d = dimension_data(c);
  OJson out = OJson::object();
  std::vector<DimensionKind> kinds = {DimensionKind::SpinC, DimensionKind::GromovTaubes, DimensionKind::Family,
                                      DimensionKind::AlgebraicFamily};
  if (c.has("kind")) kinds = {parse_dimension_kind(c.string("kind", ""))};
  for (DimensionKind k : kinds) out[std::string(to_string(k))] = str(sw_dimension(d, k));
  if (c.has("m")) {
    const int m = c.integer("m");
    out["blown_up_family"] = str(sw_dimension(blowup_dimension_data(d, m), DimensionKind::Family));
    out["drop"] = str(family_dimension_drop(d, m));
  }
  return out;
}

OJson run_exist(const JobContext& c) {
  const Rational c2 = c.rational("C2");
  const Rational ck = c.rational("CK");
  const std::vector<int> mult = c.integers("mult");
  return {{"exists", existence_check(c2, ck, mult)}, {"slack", str(existence_slack(c2, ck, mult))}};
}

OJson run_asw(const JobContext& c) {
  const NamedSpace& base = c.space("base", "point");
  const BundleClass v = c.bundle(base, "V", "trivial:2");
  const BundleClass w = c.bundle(base, "W", "trivial:1");
  const int d = c.integer("d");
  if (c.has("odd")) {
    const TorusAswResult r = asw_with_torus_insertions(v, w, d, c.integers("odd"));
    for (const std::string& warning : r.warnings) c.warn(warning);
    return {{"value", str(r.value)}};
  }
  return {{"value", str(asw_evaluate(KuranishiData(v, w, d, c.expression(base.space, "eta", "1"))))}};
}

OJson run_canonical(const JobContext& c) {
  const NamedSpace& base = c.space("base", "cp2");
  const std::vector<int> mult = c.integers("mult");
  std::vector<BundleClass> tangents;
  if (c.has("N") && c.is_list("N")) {
    tangents = c.bundles(base, "N");
  } else {
    tangents.assign(mult.size(), c.bundle(base, "N", "tangent"));
  }
  const BundleClass e = BundleClass::line(c.expression(base.space, "E", "0"));
  const CanonicalObstruction o = canonical_obstruction(mult, tangents, e);
  std::vector<std::string> factors;
  for (const BundleClass& f : o.factors) factors.push_back(c.render(f.total_chern()));
  return {{"rank", o.rank}, {"chern", c.render(o.total.total_chern())}, {"factors", string_list(factors)}};
}

OJson run_space_show(const JobContext& c) {
  const NamedSpace& s = c.space("space", "cp2");
  std::vector<std::string> gens;
  for (const Generator& g : s.space->generators()) {
    gens.push_back(g.name + ":" + std::to_string(g.degree) + (g.parity == Parity::Odd ? ":odd" : ":even"));
  }
  std::vector<std::string> basis;
  for (const Monomial& m : s.space->basis()) basis.push_back(s.space->format(m));
  return {{"dim", s.space->complex_dimension()},
          {"generators", string_list(gens)},
          {"betti", s.space->betti_numbers()},
          {"basis", string_list(basis)},
          {"tangent_chern", c.render(s.tangent.total_chern())}};
}

OJson run_bundle_chern(const JobContext& c) {
  const NamedSpace& s = c.space("space", "cp2");
  BundleClass e = c.bundle(s, "bundle", "tangent");
  if (c.has("dual") && c.string("dual", "false") == "true") e = dual(e);
  if (c.has("sym")) e = sym_power(e, c.integer("sym"));
  if (c.has("twist")) e = tensor_line(e, BundleClass::line(c.expression(s.space, "twist", "0")));
  return {{"rank", e.rank()},
          {"c", chern_list(c, e)},
          {"total", c.render(e.total_chern())},
          {"ch", c.render(chern_character(e))},
          {"todd", c.render(todd(e))},
          {"segre", c.render(segre(e))}};
}

}  // namespace

JobContext::JobContext(const Scenario& scenario, const Job& job, const OJson& instance, const RunOptions& options,
                       std::vector<std::string>& warnings)
    : scenario_(scenario), job_(job), instance_(instance), options_(options), warnings_(warnings) {
  if (instance_.contains("params")) {
    const OJson& p = instance_["params"];
    if (!p.is_object()) throw Error(ErrorCode::ParseError, field("params") + ": expected an object");
    for (const auto& [k, v] : p.items()) params_[k] = rational_from_json(Json::parse(v.dump()), field("params." + k));
  }
  for (const std::string& k : job_.sweep_keys) params_[k] = rational(k);
}

std::string JobContext::field(std::string_view key) const {
  return "jobs[" + std::to_string(job_.index) + "]." + std::string(key);
}

bool JobContext::has(std::string_view key) const { return instance_.contains(std::string(key)); }

const OJson& JobContext::required(std::string_view key) const {
  const std::string k(key);
  if (!instance_.contains(k)) throw Error(ErrorCode::ParseError, field(key) + ": missing");
  return instance_[k];
}

Rational JobContext::rational(std::string_view key) const {
  const OJson& v = required(key);
  if (v.is_string()) {
    // Plain rationals first; otherwise a constant expression in the parameters.
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error&) {
    }
    try {
      const GradedClass g = parse_class(point_space(), v.get<std::string>(), params_);
      return g.constant_term();
    } catch (const Error& e) {
      throw Error(e.code(), field(key) + ": " + e.message());
    }
  }
  return rational_from_json(Json::parse(v.dump()), field(key));
}

Rational JobContext::rational(std::string_view key, const Rational& fallback) const {
  return has(key) ? rational(key) : fallback;
}

int JobContext::integer(std::string_view key) const { return to_int(rational(key), field(key)); }

int JobContext::integer(std::string_view key, int fallback) const { return has(key) ? integer(key) : fallback; }

std::string JobContext::string(std::string_view key, std::string_view fallback) const {
  if (!has(key)) return std::string(fallback);
  const OJson& v = required(key);
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::vector<Rational> JobContext::rationals(std::string_view key) const {
  const OJson& v = required(key);
  std::vector<OJson> items;
  if (v.is_array()) {
    items.assign(v.begin(), v.end());
  } else if (v.is_string()) {
    std::stringstream ss(v.get<std::string>());
    std::string part;
    while (std::getline(ss, part, ',')) items.emplace_back(part);
  } else {
    items.push_back(v);
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string f = field(key) + "[" + std::to_string(i) + "]";
    if (items[i].is_string()) {
      try {
        out.push_back(parse_class(point_space(), items[i].get<std::string>(), params_).constant_term());
      } catch (const Error& e) {
        throw Error(e.code(), f + ": " + e.message());
      }
    } else {
      out.push_back(rational_from_json(Json::parse(items[i].dump()), f));
    }
  }
  return out;
}

std::vector<int> JobContext::integers(std::string_view key) const {
  std::vector<int> out;
  for (const Rational& r : rationals(key)) out.push_back(to_int(r, field(key)));
  return out;
}

const NamedSpace& JobContext::space(std::string_view key, std::string_view fallback) const {
  return scenario_.space(has(key) ? string(key, fallback) : std::string(fallback));
}

GradedClass JobContext::expression(const Space& space, std::string_view key, std::string_view fallback) const {
  const std::string text = has(key) ? string(key, fallback) : std::string(fallback);
  try {
    return parse_class(space, text, params_);
  } catch (const Error& e) {
    throw Error(e.code(), field(key) + ": " + e.message());
  }
}

BundleClass JobContext::bundle(const NamedSpace& base, std::string_view key, std::string_view fallback) const {
  const OJson ref = has(key) ? required(key) : OJson(std::string(fallback));
  return resolve_bundle(scenario_, base, ref, params_, field(key));
}

bool JobContext::is_list(std::string_view key) const { return has(key) && required(key).is_array(); }

std::vector<BundleClass> JobContext::bundles(const NamedSpace& base, std::string_view key) const {
  std::vector<BundleClass> out;
  const OJson& refs = required(key);
  for (std::size_t i = 0; i < refs.size(); ++i) {
    out.push_back(resolve_bundle(scenario_, base, refs[i], params_, field(key) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string JobContext::render(const GradedClass& c) const {
  if (options_.max_degree < 0) return c.to_string();
  Terms kept;
  for (const auto& [m, coeff] : c.terms()) {
    if (c.ambient()->degree(m) <= options_.max_degree) kept.emplace(m, coeff);
  }
  return format_terms(*c.ambient(), kept);
}

void JobContext::warn(std::string message) const {
  if (std::find(warnings_.begin(), warnings_.end(), message) == warnings_.end()) {
    warnings_.push_back(std::move(message));
  }
}

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> table = {
      {"nodal-cp2", {"d"}, {}, {}, run_nodal},
      {"k3-count", {"C2"}, {}, {}, run_k3},
      {"severi", {"p"}, {"surface"}, {}, run_severi},
      {"universal-poly", {"p"}, {}, {}, run_universal},
      {"todd-genus", {}, {"surface"}, {}, run_todd},
      {"grr-check", {"m"}, {"base"}, {"Ns"}, run_grr},
      {"expand", {"m"}, {"base"}, {"Ns"}, run_expand},
      {"obstruction", {"m"}, {"base"}, {"Ns"}, run_obstruction},
      {"dims", {"m", "fbd"}, {}, {}, run_dims},
      {"exist", {}, {}, {}, run_exist},
      {"asw", {"d"}, {"base"}, {"V", "W"}, run_asw},
      {"canonical-obstruction", {}, {"base"}, {"N"}, run_canonical},
      {"space-show", {}, {"space"}, {}, run_space_show},
      {"bundle-chern", {"sym"}, {"space"}, {"bundle"}, run_bundle_chern},
  };
  return table;
}

const CommandSpec* find_command(std::string_view name) {
  for (const CommandSpec& c : commands()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Report run_batch(const Scenario& scenario, const RunOptions& options) {
  struct Slot {
    std::optional<Row> row;
    std::vector<std::string> warnings;
    std::string error;
    bool done = false;
    double seconds = 0;
  };
  struct Task {
    std::size_t job;
    std::size_t instance;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<Slot>> slots(scenario.jobs.size());
  for (std::size_t j = 0; j < scenario.jobs.size(); ++j) {
    slots[j].resize(scenario.jobs[j].instances.size());
    for (std::size_t k = 0; k < scenario.jobs[j].instances.size(); ++k) tasks.push_back({j, k});
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  auto worker = [&] {
    for (;;) {
      if (abort.load()) return;
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      const Job& job = scenario.jobs[tasks[t].job];
      const OJson& inst = job.instances[tasks[t].instance];
      Slot& slot = slots[tasks[t].job][tasks[t].instance];
      const auto start = std::chrono::steady_clock::now();
      try {
        const JobContext ctx(scenario, job, inst, options, slot.warnings);
        Row row;
        for (const std::string& k : job.sweep_keys) row.params[k] = inst[k];
        row.values = find_command(job.cmd)->run(ctx);
        slot.row = std::move(row);
      } catch (const std::exception& e) {
        slot.error = e.what();
        if (options.strict) abort.store(true);
      }
      slot.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      slot.done = true;
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }

  Report report;
  for (std::size_t j = 0; j < scenario.jobs.size(); ++j) {
    JobReport jr;
    jr.index = scenario.jobs[j].index;
    jr.job = scenario.jobs[j].spec;
    bool skipped = false;
    for (std::size_t k = 0; k < slots[j].size(); ++k) {
      Slot& s = slots[j][k];
      jr.seconds += s.seconds;
      if (!s.done) {
        skipped = true;
        continue;
      }
      for (std::string& w : s.warnings) {
        if (std::find(jr.warnings.begin(), jr.warnings.end(), w) == jr.warnings.end()) jr.warnings.push_back(std::move(w));
      }
      if (!s.error.empty()) {
        if (jr.error.empty()) {
          jr.error = s.error;
          if (!scenario.jobs[j].sweep_keys.empty()) {
            std::string at;
            for (const std::string& key : scenario.jobs[j].sweep_keys) {
              at += (at.empty() ? "" : ", ") + key + "=" + cell_text(scenario.jobs[j].instances[k][key]);
            }
            jr.error += " (at " + at + ")";
          }
        }
        jr.status = "error";
        continue;
      }
      jr.results.push_back(std::move(*s.row));
    }
    if (skipped && jr.status == "ok") jr.status = "skipped";
    report.jobs.push_back(std::move(jr));
  }
  return report;
}

}  // namespace famsw::cli
