#include "famsw/serialization.hpp"

#include "famsw/errors.hpp"

namespace famsw {

namespace {

[[noreturn]] void field_error(std::string_view field, const std::string& why) {
  throw Error(ErrorCode::ParseError, std::string(field) + ": " + why);
}

const Json& require(const Json& j, const char* key, std::string_view field) {
  if (!j.is_object() || !j.contains(key)) field_error(field, std::string("missing \"") + key + "\"");
  return j.at(key);
}

int int_from_json(const Json& j, std::string_view field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<int>();
}

std::string string_from_json(const Json& j, std::string_view field) {
  if (!j.is_string()) field_error(field, "expected a string");
  return j.get<std::string>();
}

// A single monomial with its coefficient, e.g. "t2*t1" -> (t1*t2, -1).
std::pair<Monomial, Rational> single_monomial(const std::vector<Generator>& gens, const std::string& text,
                                              std::string_view field) {
  Terms t = parse_terms(gens, text);
  if (t.size() != 1) field_error(field, "'" + text + "' is not a single monomial");
  return *t.begin();
}

}  // namespace

Rational rational_from_json(const Json& j, std::string_view field) {
  if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<unsigned long long>()), 10));
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>()), 10));
  if (!j.is_string()) field_error(field, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    field_error(field, e.message());
  }
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Json space_to_json(const SpaceModel& space) {
  Json gens = Json::array();
  for (const auto& g : space.generators()) {
    gens.push_back({{"name", g.name}, {"degree", g.degree}, {"parity", g.parity == Parity::Odd ? "odd" : "even"}});
  }
  Json rules = Json::array();
  for (const auto& r : space.rules()) {
    rules.push_back({{"lhs", space.format(r.lhs)}, {"rhs", format_terms(space, r.rhs)}});
  }
  Json integrals = Json::object();
  for (const auto& [m, v] : space.integrals()) integrals[space.format(m)] = rational_to_json(v);
  Json out{{"generators", gens}, {"rules", rules}, {"dim", space.complex_dimension()}, {"integrals", integrals}};
  if (!space.truncations().empty()) {
    Json tr = Json::array();
    for (const auto& t : space.truncations()) {
      Json names = Json::array();
      for (auto g : t.generators) names.push_back(space.generators()[g].name);
      tr.push_back({{"generators", names}, {"max_degree", t.max_degree}});
    }
    out["truncations"] = tr;
  }
  return out;
}

Space space_from_json(const Json& j) {
  std::vector<Generator> gens;
  const Json& gj = require(j, "generators", "space");
  if (!gj.is_array()) field_error("space.generators", "expected an array");
  for (std::size_t i = 0; i < gj.size(); ++i) {
    std::string f = "space.generators[" + std::to_string(i) + "]";
    Generator g;
    g.name = string_from_json(require(gj[i], "name", f), f + ".name");
    g.degree = int_from_json(require(gj[i], "degree", f), f + ".degree");
    std::string parity = gj[i].contains("parity") ? string_from_json(gj[i]["parity"], f + ".parity") : "even";
    if (parity != "even" && parity != "odd") field_error(f + ".parity", "expected \"even\" or \"odd\"");
    g.parity = parity == "odd" ? Parity::Odd : Parity::Even;
    gens.push_back(std::move(g));
  }
  std::vector<Rule> rules;
  if (j.contains("rules")) {
    const Json& rj = j["rules"];
    if (!rj.is_array()) field_error("space.rules", "expected an array");
    for (std::size_t i = 0; i < rj.size(); ++i) {
      std::string f = "space.rules[" + std::to_string(i) + "]";
      auto [lhs, c] = single_monomial(gens, string_from_json(require(rj[i], "lhs", f), f + ".lhs"), f + ".lhs");
      Terms rhs = parse_terms(gens, string_from_json(require(rj[i], "rhs", f), f + ".rhs"));
      // c * lhs -> rhs  means  lhs -> rhs / c
      for (auto& [m, v] : rhs) v /= c;
      rules.push_back({lhs, rhs});
    }
  }
  const int dim = int_from_json(require(j, "dim", "space"), "space.dim");
  std::map<Monomial, Rational> integrals;
  if (j.contains("integrals")) {
    if (!j["integrals"].is_object()) field_error("space.integrals", "expected an object");
    for (const auto& [key, value] : j["integrals"].items()) {
      std::string f = "space.integrals[\"" + key + "\"]";
      auto [m, c] = single_monomial(gens, key, f);
      integrals[m] += rational_from_json(value, f) / c;
    }
  }
  std::vector<Truncation> truncations;
  if (j.contains("truncations")) {
    for (const auto& tj : j["truncations"]) {
      Truncation t;
      for (const auto& name : tj.at("generators")) {
        bool found = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
          if (gens[i].name == name.get<std::string>()) {
            t.generators.push_back(i);
            found = true;
          }
        }
        if (!found) field_error("space.truncations", "unknown generator " + name.dump());
      }
      t.max_degree = int_from_json(tj.at("max_degree"), "space.truncations.max_degree");
      truncations.push_back(std::move(t));
    }
  }
  return make_space(std::move(gens), std::move(rules), dim, std::move(integrals), std::move(truncations));
}

Json surface_to_json(const SurfaceData& s) {
  Json q = Json::array();
  for (const auto& row : s.intersection) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    q.push_back(r);
  }
  Json k = Json::array();
  for (const auto& v : s.canonical) k.push_back(rational_to_json(v));
  return {{"basis", s.basis}, {"Q", q}, {"K", k}, {"c2", rational_to_json(s.c2)}, {"pg", s.pg}, {"q", s.q}};
}

SurfaceData surface_from_json(const Json& j) {
  SurfaceData s;
  const Json& basis = require(j, "basis", "surface");
  if (!basis.is_array()) field_error("surface.basis", "expected an array");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    s.basis.push_back(string_from_json(basis[i], "surface.basis[" + std::to_string(i) + "]"));
  }
  const Json& q = require(j, "Q", "surface");
  if (!q.is_array()) field_error("surface.Q", "expected a matrix");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!q[i].is_array()) field_error("surface.Q[" + std::to_string(i) + "]", "expected a row");
    std::vector<Rational> row;
    for (std::size_t k = 0; k < q[i].size(); ++k) {
      row.push_back(rational_from_json(q[i][k], "surface.Q[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    }
    s.intersection.push_back(std::move(row));
  }
  const Json& k = require(j, "K", "surface");
  if (!k.is_array()) field_error("surface.K", "expected an array");
  for (std::size_t i = 0; i < k.size(); ++i) {
    s.canonical.push_back(rational_from_json(k[i], "surface.K[" + std::to_string(i) + "]"));
  }
  s.c2 = rational_from_json(require(j, "c2", "surface"), "surface.c2");
  if (j.contains("pg")) s.pg = int_from_json(j["pg"], "surface.pg");
  if (j.contains("q")) s.q = int_from_json(j["q"], "surface.q");
  return s;
}

Json bundle_to_json(const BundleClass& e) {
  Json chern = Json::object();
  for (int i = 1; i <= e.ambient()->complex_dimension(); ++i) {
    GradedClass ci = e.chern(i);
    if (!ci.is_zero()) chern[std::to_string(i)] = ci.to_string();
  }
  return {{"rank", e.rank()}, {"chern", chern}};
}

BundleClass bundle_from_json(const Space& space, const Json& j, const Parameters& params) {
  const int rank = int_from_json(require(j, "rank", "bundle"), "bundle.rank");
  GradedClass total = GradedClass::one(space);
  if (j.contains("chern")) {
    const Json& cj = j["chern"];
    if (!cj.is_object()) field_error("bundle.chern", "expected an object");
    for (const auto& [key, value] : cj.items()) {
      std::string f = "bundle.chern[\"" + key + "\"]";
      int i = 0;
      try {
        i = std::stoi(key);
      } catch (const std::exception&) {
        field_error(f, "Chern index must be an integer");
      }
      if (i < 1) field_error(f, "Chern index must be >= 1");
      GradedClass ci = parse_class(space, value.is_string() ? value.get<std::string>() : value.dump(), params);
      if (!ci.is_zero() && ci.homogeneous_degree() != 2 * i) {
        field_error(f, "c_" + key + " must have degree " + std::to_string(2 * i));
      }
      total += ci;
    }
  }
  return BundleClass(rank, total);
}

}  // namespace famsw
