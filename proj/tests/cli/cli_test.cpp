#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "famsw/cli/app.hpp"
#include "famsw/cli/jobs.hpp"
#include "famsw/cli/report.hpp"
#include "famsw/cli/scenario.hpp"
#include "famsw/errors.hpp"

namespace famsw::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kScenarioDir = FAMSW_SCENARIO_DIR;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "famsw");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

OJson json_of(const Outcome& o) { return OJson::parse(o.out); }

ErrorCode load_error(const std::string& text) {
  try {
    load_scenario(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "scenario loaded: " << text;
  return ErrorCode::JobError;
}

// Golden reports live next to their scenarios. FAMSW_UPDATE_GOLDEN=1
// rewrites them; the diff then needs review before it is committed.
class Golden : public ::testing::TestWithParam<std::string> {};

TEST_P(Golden, JsonReportMatches) {
  const fs::path scenario = kScenarioDir / (GetParam() + ".json");
  const fs::path expected = kScenarioDir / "expected" / (GetParam() + ".json");
  const Outcome o = cli({"--format", "json", "run", scenario.string()});
  ASSERT_TRUE(o.err.empty()) << o.err;
  if (const char* update = std::getenv("FAMSW_UPDATE_GOLDEN"); update && std::string(update) == "1") {
    fs::create_directories(expected.parent_path());
    std::ofstream(expected) << o.out;
    GTEST_SKIP() << "rewrote " << expected;
  }
  ASSERT_TRUE(fs::exists(expected)) << expected;
  EXPECT_EQ(o.out, slurp(expected));
}

INSTANTIATE_TEST_SUITE_P(Scenarios, Golden,
                         ::testing::Values("nodal", "crosscheck", "blowup", "enumerative", "errors"));

TEST(Cli, NodalSweepMatchesClosedForm) {
  const Outcome o = cli({"--format", "json", "run", (kScenarioDir / "nodal.json").string()});
  ASSERT_EQ(o.code, kExitOk);
  const OJson rows = json_of(o)["jobs"][0]["results"];
  ASSERT_EQ(rows.size(), 10u);
  for (const auto& row : rows) {
    const int d = row["params"]["d"].get<int>();
    EXPECT_EQ(row["values"]["count"], std::to_string(3 * (d - 1) * (d - 1)));
  }
  EXPECT_EQ(rows.back()["values"]["count"], "243");
}

TEST(Cli, CrosscheckRowsAreAllEqual) {
  const Outcome o = cli({"--format", "json", "blowup", "crosscheck", "--base", "cp2", "--Ns", "tangent", "--m",
                         "-7..7:odd"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const OJson rows = json_of(o)["jobs"][0]["results"];
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& row : rows) {
    EXPECT_TRUE(row["values"]["equal"].get<bool>()) << row.dump();
    const int m = row["params"]["m"].get<int>();
    EXPECT_EQ(row["values"]["rank"].get<int>(), (m * m - 1) / 8);
  }
}

TEST(Cli, DimsExample) {
  const Outcome o = cli({"--format", "json", "dims", "--C2", "16", "--CK", "-12", "--chi", "3", "--sigma", "1",
                         "--m", "-5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const OJson v = json_of(o)["jobs"][0]["results"][0]["values"];
  EXPECT_EQ(v["drop"], "-6");
  EXPECT_EQ(v["gromov-taubes"], "14");
}

TEST(Cli, ExistExample) {
  const Outcome o = cli({"--format", "json", "exist", "--C2", "16", "--CK", "-12", "--mult", "2,2,2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const OJson v = json_of(o)["jobs"][0]["results"][0]["values"];
  EXPECT_TRUE(v["exists"].get<bool>());
  EXPECT_EQ(v["slack"], "11");
}

TEST(Cli, SelftestReportsEveryCriterion) {
  const Outcome o = cli({"selftest"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("10/10 criteria passed"), std::string::npos) << o.out;
  const Outcome j = cli({"--format", "json", "selftest"});
  EXPECT_EQ(json_of(j).size(), 10u);
}

TEST(Cli, MalformedRationalNamesTheField) {
  const fs::path p = fs::temp_directory_path() / "famsw_bad_rational.json";
  std::ofstream(p) << R"({"version":"1","spaces":{"S":{"basis":["C"],"Q":[["1/0"]],"K":["0"],"c2":"0"}},)"
                   << R"("jobs":[{"cmd":"todd-genus","surface":"S"}]})";
  const Outcome o = cli({"run", p.string()});
  fs::remove(p);
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("ParseError"), std::string::npos) << o.err;
  EXPECT_NE(o.err.find("Q[0][0]"), std::string::npos) << o.err;
  EXPECT_TRUE(o.out.empty());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"--format", "json", "run", (kScenarioDir / "errors.json").string()}).code, kExitJobFailure);
  EXPECT_EQ(cli({"run", "/nonexistent/scenario.json"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"--format", "xml", "selftest"}).code, kExitUsage);
  EXPECT_EQ(cli({"blowup", "expand"}).code, kExitUsage);  // --m is required
  EXPECT_EQ(cli({"space", "show", "nowhere"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({"universal-poly", "--p", "2"}).code, kExitOk);
}

TEST(Cli, UnknownNamesFailAtLoadTime) {
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"grr-check","base":"mars","m":3}]})"),
            ErrorCode::UnknownName);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"grr-check","Ns":"ghost","m":3}]})"),
            ErrorCode::UnknownName);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"no-such-command"}]})"), ErrorCode::UnknownName);
  const Outcome o = cli({"blowup", "expand", "--base", "mars", "--m", "3"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("UnknownName"), std::string::npos) << o.err;
}

TEST(Cli, SchemaErrors) {
  EXPECT_EQ(load_error("{"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"version":"2","jobs":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"jobs":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"d":3}]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"nodal-cp2","d":[1]}]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"nodal-cp2","d":[1,2,0]}]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"nodal-cp2","d":[1,1000000]}]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"nodal-cp2","sweep":{"d":[3,1]}}]})"), ErrorCode::ParseError);
  EXPECT_EQ(load_error(R"({"version":"1","jobs":[{"cmd":"nodal-cp2","sweep":{"d":[1,2]},"d":[1,2]}]})"),
            ErrorCode::ParseError);
  // An array under a key that does not sweep reaches the command and fails there.
  const Report r = run_batch(load_scenario(R"({"version":"1","jobs":[{"cmd":"exist","C2":[1,3],"CK":"0","mult":"2"}]})"));
  EXPECT_EQ(r.jobs[0].status, "error");
}

TEST(Cli, SweepSyntax) {
  const Scenario s = load_scenario(R"({"version":"1","jobs":[
    {"cmd":"nodal-cp2","d":[1,9,4]},
    {"cmd":"nodal-cp2","d":[-4,4,"even"]},
    {"cmd":"nodal-cp2","d":{"values":[7,2]}},
    {"cmd":"nodal-cp2","sweep":{"d":[3,3]}}]})");
  ASSERT_EQ(s.jobs.size(), 4u);
  auto ds = [&](std::size_t j) {
    std::vector<int> out;
    for (const auto& inst : s.jobs[j].instances) out.push_back(inst.at("d").get<int>());
    return out;
  };
  EXPECT_EQ(ds(0), (std::vector<int>{1, 5, 9}));
  EXPECT_EQ(ds(1), (std::vector<int>{-4, -2, 0, 2, 4}));
  EXPECT_EQ(ds(2), (std::vector<int>{7, 2}));
  EXPECT_EQ(ds(3), (std::vector<int>{3}));
}

TEST(Cli, JsonReportRoundTrips) {
  for (const char* name : {"blowup", "enumerative", "errors"}) {
    const Outcome o = cli({"--format", "json", "run", (kScenarioDir / (std::string(name) + ".json")).string()});
    const Report r = parse_report(o.out);
    EXPECT_EQ(to_json(r, {}).dump(2) + "\n", o.out) << name;
  }
}

TEST(Cli, DeterministicAcrossThreadCounts) {
  for (const char* name : {"nodal", "crosscheck", "blowup", "enumerative", "errors"}) {
    const std::string path = (kScenarioDir / (std::string(name) + ".json")).string();
    const Outcome serial = cli({"--format", "json", "--jobs", "1", "run", path});
    const Outcome parallel = cli({"--format", "json", "--jobs", "4", "run", path});
    const Outcome again = cli({"--format", "json", "--jobs", "4", "run", path});
    EXPECT_EQ(serial.out, parallel.out) << name;
    EXPECT_EQ(parallel.out, again.out) << name;
  }
}

TEST(Cli, TableAgreesWithJson) {
  const std::string path = (kScenarioDir / "enumerative.json").string();
  const Report r = parse_report(cli({"--format", "json", "run", path}).out);
  const std::string table = cli({"run", path}).out;
  const std::string csv = cli({"--format", "csv", "run", path}).out;
  for (const JobReport& j : r.jobs) {
    for (const Row& row : j.results) {
      for (const auto& [k, v] : row.values.items()) {
        const std::string text = cell_text(v);
        EXPECT_NE(table.find(text), std::string::npos) << k << " = " << text;
        EXPECT_NE(csv.find(text.find(',') == std::string::npos ? text : "\"" + text + "\""), std::string::npos)
            << k << " = " << text;
      }
    }
  }
}

TEST(Cli, ResultsAreExactStrings) {
  const Outcome o = cli({"--format", "json", "--decimal", "bundle", "chern", "--space", "cp2", "--sym", "2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const OJson row = json_of(o)["jobs"][0]["results"][0];
  EXPECT_EQ(row["values"]["rank"], 3);
  EXPECT_EQ(row["values"]["ch"], "3 + 9*h + 21/2*pt");
  // --decimal only adds an approx block; the exact values are untouched.
  EXPECT_FALSE(row.contains("approx") && row["approx"].contains("rank"));
  const OJson exact = json_of(cli({"--format", "json", "bundle", "chern", "--space", "cp2", "--sym", "2"}));
  EXPECT_EQ(exact["jobs"][0]["results"][0]["values"], row["values"]);
}

TEST(Cli, TimingIsOptIn) {
  const Outcome plain = cli({"--format", "json", "universal-poly", "--p", "2"});
  EXPECT_EQ(plain.out.find("seconds"), std::string::npos);
  const Outcome timed = cli({"--format", "json", "--timing", "universal-poly", "--p", "2"});
  EXPECT_NE(timed.out.find("seconds"), std::string::npos);
}

TEST(Cli, StrictSkipsRemainingJobs) {
  const std::string path = (kScenarioDir / "errors.json").string();
  const Report loose = parse_report(cli({"--format", "json", "run", path}).out);
  ASSERT_EQ(loose.jobs.size(), 5u);
  EXPECT_EQ(loose.jobs[0].status, "ok");
  EXPECT_EQ(loose.jobs[1].status, "error");
  EXPECT_EQ(loose.jobs[2].status, "error");

  const Outcome o = cli({"--format", "json", "--strict", "run", path});
  EXPECT_EQ(o.code, kExitJobFailure);
  const Report strict = parse_report(o.out);
  ASSERT_EQ(strict.jobs.size(), 5u);
  EXPECT_EQ(strict.jobs[1].status, "error");
  for (std::size_t i = 2; i < strict.jobs.size(); ++i) EXPECT_EQ(strict.jobs[i].status, "skipped") << i;
}

TEST(Cli, ErrorsCarrySweepPosition) {
  const Outcome o = cli({"--format", "json", "blowup", "crosscheck", "--m", "1..4"});
  EXPECT_EQ(o.code, kExitJobFailure);
  const OJson job = json_of(o)["jobs"][0];
  EXPECT_EQ(job["status"], "error");
  EXPECT_NE(job["error"].get<std::string>().find("m=2"), std::string::npos) << job["error"];
}

TEST(Cli, MaxDegreeTruncatesDisplayedClasses) {
  const Outcome o = cli({"--format", "json", "--max-degree", "2", "bundle", "chern", "--space", "cp2"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(json_of(o)["jobs"][0]["results"][0]["values"]["total"], "1 + 3*h");
}

TEST(Cli, InlineBundleAndParameters) {
  const Outcome o = cli({"--format", "json", "bundle", "chern", "--space", "cp2", "--rank", "2", "--chern",
                         "1=a*h", "--chern", "2=b*h^2", "--param", "a=3", "--param", "b=3", "--dual"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(json_of(o)["jobs"][0]["results"][0]["values"]["total"], "1 - 3*h + 3*pt");
  EXPECT_EQ(cli({"bundle", "chern", "--chern", "1=h"}).code, kExitUsage);
  EXPECT_EQ(cli({"bundle", "chern", "--rank", "1", "--chern", "1h"}).code, kExitUsage);
}

TEST(Cli, SpaceFromFile) {
  const fs::path p = fs::temp_directory_path() / "famsw_space.json";
  std::ofstream(p) << R"({"basis":["A","B"],"Q":[["0","1"],["1","0"]],"K":["-2","-2"],"c2":"4"})";
  const Outcome o = cli({"--format", "json", "space", "show", "quadric", "--file", p.string()});
  fs::remove(p);
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const OJson v = json_of(o)["jobs"][0]["results"][0]["values"];
  EXPECT_EQ(v["betti"], OJson::parse("[1,0,2,0,1]"));
  EXPECT_EQ(v["dim"], 2);
}

TEST(Cli, RunBatchKeepsDeclarationOrder) {
  const Scenario s = load_scenario(R"({"version":"1","jobs":[
    {"cmd":"universal-poly","p":[1,4]},{"cmd":"nodal-cp2","d":[1,30]}]})");
  RunOptions opts;
  opts.jobs = 8;
  const Report r = run_batch(s, opts);
  ASSERT_EQ(r.jobs.size(), 2u);
  ASSERT_EQ(r.jobs[1].results.size(), 30u);
  for (std::size_t i = 0; i < 30; ++i) EXPECT_EQ(r.jobs[1].results[i].params["d"].get<int>(), static_cast<int>(i) + 1);
}

}  // namespace
}  // namespace famsw::cli
