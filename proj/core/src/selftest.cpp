#include "famsw/selftest.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "famsw/applications.hpp"
#include "famsw/blowup.hpp"
#include "famsw/errors.hpp"
#include "famsw/kuranishi.hpp"
#include "famsw/random.hpp"
#include "famsw/surfaces.hpp"
#include "famsw/symmetric.hpp"

namespace famsw::selftest {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Counts checks and keeps the first failure message.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = describe();
  }
  bool ok() const { return failure_.empty(); }
  std::string detail() const {
    return ok() ? std::to_string(count_) + " checks" : failure_;
  }

 private:
  int count_ = 0;
  std::string failure_;
};

std::string str(const Rational& r) { return to_string(r); }

// Degree-2 class playing the role of a hyperplane on each test base, and
// the base's tangent bundle padded to rank 2.
struct TestBase {
  std::string name;
  Space space;
  GradedClass h;
  BundleClass tangent;
};

std::vector<TestBase> crosscheck_bases() {
  std::vector<TestBase> out;
  const Space pt = point_space();
  out.push_back({"point", pt, GradedClass(pt), BundleClass::trivial(pt, 2)});
  const SurfaceModel cp2 = surface_model(cp2_data());
  out.push_back({"cp2", cp2.space, GradedClass::generator(cp2.space, "h"), cp2.tangent});
  const SurfaceModel k3 = surface_model(k3_data(2));
  out.push_back({"k3", k3.space, GradedClass::generator(k3.space, "C"), k3.tangent});
  const Space torus = torus_model(1);
  out.push_back({"torus", torus, GradedClass::generator(torus, "t1") * GradedClass::generator(torus, "t2"),
                 BundleClass::trivial(torus, 2)});
  return out;
}

CriterionResult nodal_counts() {
  Tally t;
  const auto start = Clock::now();
  for (int d = 1; d <= 20; ++d) {
    const Rational got = nodal_cp2(d);
    const Rational want = 3 * (d - 1) * (d - 1);
    t.expect(got == want, [&] { return "d=" + std::to_string(d) + ": " + str(got) + " != " + str(want); });
  }
  const double elapsed = seconds_since(start);
  t.expect(elapsed < 1.0, [&] { return "took " + std::to_string(elapsed) + " s"; });
  return {1, "nodal CP2 counts 3(d-1)^2, d=1..20", t.ok(), t.detail()};
}

CriterionResult k3_count() {
  Tally t;
  const Rational got = k3_twistor_count(0);
  t.expect(got == 24, [&] { return "k3_twistor_count(0) = " + str(got); });
  return {2, "K3 twistor count 24", t.ok(), t.detail()};
}

CriterionResult obstruction_ranks() {
  Tally t;
  const SurfaceModel cp2 = surface_model(cp2_data());
  const GradedClass h = GradedClass::generator(cp2.space, "h");
  for (int m = -15; m <= 15; m += 2) {
    const FamilyBlowupScenario s(cp2.space, h, cp2.tangent, m);
    const int rank = obstruction_smooth(s).rank();
    t.expect(rank * 8 == m * m - 1, [&] { return "m=" + std::to_string(m) + ": rank " + std::to_string(rank); });
  }
  for (int m : {-1, 1}) {
    for (const GradedClass& eta : {GradedClass::one(cp2.space), h, h * h}) {
      FamilyBlowupScenario s(cp2.space, h, cp2.tangent, m);
      s.insertion = eta;
      const auto terms = expand_formula(s);
      t.expect(terms.size() == 1 && terms[0].index == 0 && terms[0].insertion == eta,
               [&] { return "m=" + std::to_string(m) + " expansion of " + eta.to_string() + " has " +
                            std::to_string(terms.size()) + " terms"; });
    }
  }
  return {3, "obstruction ranks (m^2-1)/8 and m=+-1 collapse", t.ok(), t.detail()};
}

CriterionResult grr_grid() {
  Tally t;
  for (const TestBase& b : crosscheck_bases()) {
    std::vector<std::pair<std::string, BundleClass>> normals;
    normals.emplace_back("trivial", BundleClass::trivial(b.space, 2));
    normals.emplace_back("tangent", b.tangent);
    for (int a = -2; a <= 2; ++a) {
      for (int c = -2; c <= 2; ++c) {
        normals.emplace_back("O(" + std::to_string(a) + ")+O(" + std::to_string(c) + ")",
                             whitney_sum(BundleClass::line(Rational(a) * b.h), BundleClass::line(Rational(c) * b.h)));
      }
    }
    for (const auto& [nname, n] : normals) {
      for (const GradedClass& l0 : {GradedClass(b.space), b.h, Rational(-3) * b.h}) {
        for (int m = -9; m <= 9; m += 2) {
          const FamilyBlowupScenario s(b.space, l0, n, m);
          const CrosscheckReport r = grr_crosscheck(s);
          t.expect(r.equal, [&] {
            return b.name + " Ns=" + nname + " l0=" + l0.to_string() + " m=" + std::to_string(m) +
                   ": " + r.lhs.to_string() + " vs " + r.rhs.to_string();
          });
        }
      }
    }
  }
  return {4, "GRR crosscheck over point/CP2/K3/torus, odd |m|<=9", t.ok(), t.detail()};
}

CriterionResult point_riemann_roch() {
  Tally t;
  const Space pt = point_space();
  for (int m = -15; m <= 15; m += 2) {
    if (std::abs(m) < 3) continue;
    const FamilyBlowupScenario s(pt, GradedClass(pt), BundleClass::trivial(pt, 2), m);
    const CrosscheckReport r = grr_crosscheck(s);
    const int p = (std::abs(m) - 3) / 2;
    const Rational want = (p + 1) * (p + 2) / 2;
    t.expect(r.equal && r.rank == want && r.rhs.constant_term() == want, [&] {
      return "m=" + std::to_string(m) + ": rank " + std::to_string(r.rank) + ", pushforward " + r.rhs.to_string();
    });
  }
  return {5, "point base rank (p+1)(p+2)/2, odd 3<=|m|<=15", t.ok(), t.detail()};
}

CriterionResult asw_normalization(random::Rng& rng) {
  Tally t;
  const Space pt = point_space();
  for (int v = 2; v <= 12; ++v) {
    for (int w = 1; w < v; ++w) {
      const KuranishiData k(BundleClass::trivial(pt, v), BundleClass::trivial(pt, w), v - w - 1);
      const Rational got = asw_evaluate(k);
      t.expect(got == 1, [&] {
        return "v=" + std::to_string(v) + " w=" + std::to_string(w) + ": " + str(got);
      });
    }
  }
  const std::vector<Space> bases = {pt, surface_model(cp2_data()).space, torus_model(1)};
  int nonzero = 0;
  for (int i = 0; i < 50; ++i) {
    const Space& base = bases[i % bases.size()];
    const int v_rank = random::uniform_int(rng, 1, 3);
    const int w_rank = random::uniform_int(rng, 0, v_rank - 1 + base->complex_dimension());
    const int d = v_rank - 1 + base->complex_dimension() - w_rank;
    const BundleClass v = random::bundle(base, v_rank, rng);
    const BundleClass w = random::bundle(base, w_rank, rng);
    const BundleClass u = random::bundle(base, random::uniform_int(rng, 1, 2), rng);
    const Rational plain = asw_evaluate(KuranishiData(v, w, d));
    const Rational stable = asw_evaluate(KuranishiData(whitney_sum(v, u), whitney_sum(w, u), d));
    if (plain != 0) ++nonzero;
    t.expect(plain == stable, [&] {
      return "instance " + std::to_string(i) + ": " + str(plain) + " vs " + str(stable);
    });
  }
  t.expect(nonzero > 0, [] { return "every stabilization instance evaluated to 0"; });
  return {6, "ASW normalization and stabilization", t.ok(), t.detail()};
}

CriterionResult dimension_formulas() {
  Tally t;
  const std::vector<DimensionData> samples = {
      {16, -12, 9, 3, 1, 0, 0, 0, 0},
      {4, -6, 9, 3, 1, 0, 0, 0, 2},
      {0, 0, 0, 24, -16, 1, 0, 1, 4},
      {7, 3, -2, 10, -6, 2, 1, 1, 6},
  };
  for (const DimensionData& d : samples) {
    for (int m = -15; m <= 15; m += 2) {
      const Rational got = family_dimension_drop(d, m);
      const Rational want = Rational(1 - m * m) / 4;
      t.expect(got == want, [&] { return "m=" + std::to_string(m) + ": drop " + str(got); });
    }
  }
  for (int d = 1; d <= 10; ++d) {
    const DimensionData data{d * d, -3 * d, 9, 3, 1};
    const Rational got = sw_dimension(data, DimensionKind::GromovTaubes);
    const Rational want = Rational(d * d + 3 * d) / 2;
    t.expect(got == want, [&] { return "d=" + std::to_string(d) + ": d_GT " + str(got); });
  }
  return {7, "family drop -(m^2-1)/4 and d_GT(dH)=(d^2+3d)/2", t.ok(), t.detail()};
}

CriterionResult canonical_ranks(random::Rng& rng) {
  Tally t;
  const SurfaceModel cp2 = surface_model(cp2_data());
  const GradedClass h = GradedClass::generator(cp2.space, "h");
  for (int i = 0; i < 20; ++i) {
    const int levels = random::uniform_int(rng, 1, 4);
    std::vector<int> mults;
    std::vector<BundleClass> tangents;
    int want = 0;
    for (int j = 0; j < levels; ++j) {
      const int m = random::uniform_int(rng, 1, 6);
      mults.push_back(m);
      want += m * (m + 1) / 2;
      tangents.push_back(random::bundle(cp2.space, 2, rng));
    }
    const BundleClass e = BundleClass::line(Rational(random::uniform_int(rng, -3, 3)) * h);
    const CanonicalObstruction o = canonical_obstruction(mults, tangents, e);
    t.expect(o.rank == want && o.total.rank() == want, [&] {
      return "tuple " + std::to_string(i) + ": rank " + std::to_string(o.rank) + ", expected " + std::to_string(want);
    });
  }
  for (int p = 1; p <= 6; ++p) {
    const BundleClass n = random::bundle(cp2.space, 2, rng);
    const BundleClass e = BundleClass::line(Rational(random::uniform_int(rng, -3, 3)) * h);
    const CanonicalObstruction o = canonical_obstruction({p}, {n}, e);
    FamilyBlowupScenario s(cp2.space, h, n, -p, Variant::Algebraic);
    const BundleClass direct = obstruction_algebraic(s, e);
    t.expect(o.total == direct, [&] {
      return "p=" + std::to_string(p) + ": " + o.total.total_chern().to_string() + " vs " +
             direct.total_chern().to_string();
    });
  }
  return {8, "canonical obstruction ranks and k=1 factorization", t.ok(), t.detail()};
}

CriterionResult universal_polynomial() {
  Tally t;
  const UniversalPolynomial two = universal_poly(2);
  const std::map<std::string, Rational> want = {{"C2", 3}, {"CK", 2}, {"c2", 1}};
  t.expect(two.named_coefficients() == want, [&] {
    std::string s = "coefficients:";
    for (const auto& [k, v] : two.named_coefficients()) s += " " + k + "=" + str(v);
    return s;
  });
  for (int d = 1; d <= 20; ++d) {
    const Rational got = two.evaluate({d * d, -3 * d, 9, 3});
    t.expect(got == nodal_cp2(d), [&] { return "CP2 d=" + std::to_string(d) + ": " + str(got); });
  }
  const Rational k3 = two.evaluate({0, 0, 0, 24});
  t.expect(k3 == k3_twistor_count(0), [&] { return "K3: " + str(k3); });
  for (int p = 1; p <= 5; ++p) {
    const bool verified = p == 2 ? two.verified : universal_poly(p).verified;
    t.expect(verified, [&] { return "p=" + std::to_string(p) + " failed off-grid verification"; });
  }
  return {9, "universal polynomial 3C^2+2CK+c2, verified p<=5", t.ok(), t.detail()};
}

// Whitney, dual, Newton, projection formula and Grothendieck relation.
void property_suites(random::Rng& rng, int instances, Tally& t) {
  const std::vector<Space> bases = random::bases(rng);
  auto pick = [&]() -> const Space& { return bases[random::uniform_int(rng, 0, static_cast<int>(bases.size()) - 1)]; };

  for (int i = 0; i < instances; ++i) {
    const Space& b = pick();
    std::vector<GradedClass> roots;
    const int ra = random::uniform_int(rng, 0, 3);
    const int rb = random::uniform_int(rng, 0, 3);
    const BundleClass e = random::split_bundle(b, ra, rng, &roots);
    const BundleClass f = random::split_bundle(b, rb, rng, &roots);
    const BundleClass sum = whitney_sum(e, f);
    GradedClass product = GradedClass::one(b);
    for (const GradedClass& x : roots) product *= GradedClass::one(b) + x;
    t.expect(sum.rank() == ra + rb && sum.total_chern() == product,
             [&] { return "whitney: c(E+F) = " + sum.total_chern().to_string() + ", roots give " + product.to_string(); });
    const BundleClass g = random::bundle(b, random::uniform_int(rng, 0, 4), rng);
    const BundleClass k = random::bundle(b, random::uniform_int(rng, 0, 4), rng);
    t.expect(chern_character(whitney_sum(g, k)) == chern_character(g) + chern_character(k),
             [&] { return "whitney: ch not additive on instance " + std::to_string(i); });
  }

  for (int i = 0; i < instances; ++i) {
    const Space& b = pick();
    const BundleClass e = random::bundle(b, random::uniform_int(rng, 0, 4), rng);
    const BundleClass d = dual(e);
    t.expect(dual(d) == e, [&] { return "dual: E** != E for " + e.total_chern().to_string(); });
    const GradedClass che = chern_character(e);
    const GradedClass chd = chern_character(d);
    for (int deg = 0; deg <= b->top_degree(); deg += 2) {
      const Rational sign = (deg / 2) % 2 == 0 ? 1 : -1;
      t.expect(degree_part(chd, deg) == scale(sign, degree_part(che, deg)),
               [&] { return "dual: ch_" + std::to_string(deg / 2) + " sign for " + e.total_chern().to_string(); });
    }
    std::vector<GradedClass> roots;
    const BundleClass s = random::split_bundle(b, random::uniform_int(rng, 1, 3), rng, &roots);
    GradedClass product = GradedClass::one(b);
    for (const GradedClass& x : roots) product *= GradedClass::one(b) - x;
    t.expect(dual(s).total_chern() == product, [&] { return "dual: split c(E*) mismatch"; });
  }

  for (int i = 0; i < instances; ++i) {
    const Space& b = pick();
    const int n = b->complex_dimension();
    std::vector<GradedClass> roots;
    const BundleClass s = random::split_bundle(b, random::uniform_int(rng, 0, 4), rng, &roots);
    const std::vector<GradedClass> p = power_sums(s);
    for (int j = 1; j <= n; ++j) {
      GradedClass want(b);
      for (const GradedClass& x : roots) want += power(x, j);
      t.expect(p[j - 1] == want, [&] { return "newton: p_" + std::to_string(j) + " differs from root sum"; });
    }
    const BundleClass e = random::bundle(b, random::uniform_int(rng, 0, 4), rng);
    const std::vector<GradedClass> back = symmetric::elementary_from_power_sums(power_sums(e), n, b);
    t.expect(back == e.chern_classes(), [&] { return "newton: roundtrip fails for " + e.total_chern().to_string(); });
  }

  for (int i = 0; i < instances; ++i) {
    const Space& b = pick();
    const BundleClass v = random::bundle(b, random::uniform_int(rng, 1, 3), rng);
    const ProjBundleHandle h = projective_bundle(v);
    const GradedClass a = random::mixed(b, rng);
    const GradedClass x = random::mixed(h.total, rng);
    t.expect(pushforward(h, pullback(h, a) * x) == a * pushforward(h, x),
             [&] { return "projection formula fails for a=" + a.to_string() + ", x=" + x.to_string(); });
  }

  for (int i = 0; i < instances; ++i) {
    const Space& b = pick();
    const int r = random::uniform_int(rng, 1, 4);
    const BundleClass v = random::bundle(b, r, rng);
    const ProjBundleHandle h = projective_bundle(v);
    GradedClass relation(h.total);
    for (int j = 0; j <= r; ++j) relation += pullback(h, v.chern(j)) * power(h.xi, r - j);
    t.expect(relation.is_zero(), [&] { return "grothendieck: relation leaves " + relation.to_string(); });
    const GradedClass s = segre(v);
    for (int j = 0; j <= b->complex_dimension(); ++j) {
      t.expect(pushforward(h, power(h.xi, r - 1 + j)) == degree_part(s, 2 * j),
               [&] { return "grothendieck: pi_* xi^(r-1+" + std::to_string(j) + ") != s_" + std::to_string(j); });
    }
  }
}

template <typename F>
CriterionResult timed(F&& body, int id, const std::string& title) {
  const auto start = Clock::now();
  CriterionResult r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {id, title, false, std::string("exception: ") + e.what()};
  }
  r.seconds = seconds_since(start);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_all(const Options& options) {
  const auto start = Clock::now();
  random::Rng rng(options.seed);
  std::vector<CriterionResult> out;
  out.push_back(timed(nodal_counts, 1, "nodal CP2 counts"));
  out.push_back(timed(k3_count, 2, "K3 twistor count"));
  out.push_back(timed(obstruction_ranks, 3, "obstruction ranks"));
  out.push_back(timed(grr_grid, 4, "GRR crosscheck"));
  out.push_back(timed(point_riemann_roch, 5, "point Riemann-Roch"));
  out.push_back(timed([&] { return asw_normalization(rng); }, 6, "ASW normalization"));
  out.push_back(timed(dimension_formulas, 7, "dimension formulas"));
  out.push_back(timed([&] { return canonical_ranks(rng); }, 8, "canonical obstruction"));
  out.push_back(timed(universal_polynomial, 9, "universal polynomial"));
  out.push_back(timed(
      [&] {
        Tally t;
        property_suites(rng, options.property_instances, t);
        const double total = seconds_since(start);
        t.expect(total < 30.0, [&] { return "selftest took " + std::to_string(total) + " s"; });
        return CriterionResult{10, "property suites x" + std::to_string(options.property_instances) +
                                       ", selftest under 30 s",
                               t.ok(), t.detail()};
      },
      10, "property suites"));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << "  [" << r.detail
     << "] (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
  return os.str();
}

bool run_and_print(std::ostream& out, const Options& options) {
  const auto results = run_all(options);
  int passed = 0;
  for (const CriterionResult& r : results) {
    out << format_line(r) << '\n';
    if (r.passed) ++passed;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size());
}

}  // namespace famsw::selftest
