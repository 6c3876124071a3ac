#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sys/wait.h>

#include "ordsolid/suites.hpp"

using namespace ordsolid;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

/// Runs the ordsolid binary with `args`, capturing stdout.
CliResult run_cli(const std::string& args, const std::string& env = {}) {
  const auto out = std::filesystem::temp_directory_path() / ("ordsolid_cli_" + std::to_string(::getpid()) + ".txt");
  const std::string cmd = env + (env.empty() ? "" : " ") + ORDSOLID_CLI_PATH + " " + args + " > " + out.string() +
                          " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  r.out.assign(std::istreambuf_iterator<char>(in), {});
  std::filesystem::remove(out);
  return r;
}

std::string write_fixture(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / (name + "_" + std::to_string(::getpid()) + ".json");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Suites, RegistryNamesAreDistinct) {
  std::set<std::string> names;
  for (const auto& s : list_suites()) {
    EXPECT_FALSE(s.summary.empty()) << s.name;
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
  }
  EXPECT_EQ(names.size(), 12u);
  EXPECT_TRUE(names.contains("free-unit-counterexample"));
  EXPECT_TRUE(names.contains("joint-order-epic-reduction"));
}

TEST(Suites, UnknownNameIsASchemaError) { EXPECT_THROW(run_suite("no-such-suite"), SchemaError); }

TEST(Suites, ReportsAreDeterministic) {
  for (const char* name : {"free-unit-counterexample", "tensor-non-preservation", "inserter-failure"}) {
    const auto a = run_suite(name), b = run_suite(name);
    EXPECT_EQ(format_report(a), format_report(b)) << name;
    EXPECT_EQ(report_json(a).dump(), report_json(b).dump()) << name;
    EXPECT_TRUE(a.passed()) << format_report(a);
  }
}

TEST(Suites, CounterexampleExactlyWhenAVerdictFails) {
  for (const char* name : {"free-unit-counterexample", "inserter-failure", "tensor-non-preservation",
                           "cocomma-coinserter-interderivability"}) {
    const auto r = run_suite(name, {.cap = 2});
    for (const auto& v : r.verdicts) EXPECT_EQ(v.holds, v.counterexample.is_null()) << name << ": " << v.check;
    EXPECT_GT(r.instances(), 0u);
  }
}

TEST(Suites, CapOverrideIsRecorded) {
  const auto r = run_suite("cocomma-coinserter-interderivability", {.cap = 2});
  EXPECT_EQ(r.caps.at("instance size"), 2u);
  const auto bigger = run_suite("cocomma-coinserter-interderivability", {.cap = 3});
  EXPECT_GT(bigger.instances(), r.instances());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("suite free-unit-counterexample").exit_code, 0);
  EXPECT_EQ(run_cli("suite no-such-suite").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("enumerate --kind poset", "ORDSOLID_CAP=banana").exit_code, 2);

  const auto ovec = write_fixture("ovec", R"({"poset": {"elements": ["a", "b"], "leq": [["a", "b"]]},
    "mode": "pointwise", "target": {"dim": 1, "generators": [["1"]], "pointed": true, "generating": true},
    "f": {"a": ["0"], "b": ["2"]}, "g": {"a": ["2"], "b": ["3"]}})");
  const auto r = run_cli("verify-extension --functor ovec --in " + ovec);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("result FAIL"), std::string::npos);

  const auto bad = write_fixture("bad", R"({"base": {"elements": ["a"], "leq": [["a", "z"]]}, "family": [], "xi": []})");
  EXPECT_EQ(run_cli("extend --functor slat --in " + bad).exit_code, 2);
  std::filesystem::remove(ovec);
  std::filesystem::remove(bad);
}

TEST(Cli, EnumerateCountsAndCapEnvironment) {
  const auto r = run_cli("enumerate --kind poset --size 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "count 16");
  EXPECT_EQ(run_cli("enumerate --kind poset --size 3 --labeled").out.substr(0, 8), "count 19");
  // without --size the cap comes from the environment
  EXPECT_EQ(run_cli("enumerate --kind frame", "ORDSOLID_CAP=6").out.substr(0, 7), "count 5");
}

TEST(Cli, ExtendAndColimitOutputs) {
  const auto v = write_fixture("v", R"({"base": {"elements": ["a", "b"], "leq": []}, "family": [], "xi": []})");
  const auto e = run_cli("extend --functor slat --in " + v);
  EXPECT_EQ(e.exit_code, 0);
  EXPECT_NE(e.out.find("q: a->{a}, b->{b}"), std::string::npos);

  const auto t = write_fixture("t", R"({"object": {"elements": ["0", "1"], "leq": [["0", "1"]]},
    "weight": {"elements": ["a", "b"], "leq": []}})");
  const auto pos = run_cli("colimit --category pos --kind tensor --in " + t);
  EXPECT_EQ(pos.exit_code, 0);
  EXPECT_NE(pos.out.find("holds"), std::string::npos);
  const auto json = run_cli("colimit --category slat --kind tensor --format json --in " + t);
  EXPECT_EQ(json.exit_code, 0);
  const auto doc = parse_json_text(json.out);
  EXPECT_EQ(doc["vertex"]["elements"].size(), 4u);
  std::filesystem::remove(v);
  std::filesystem::remove(t);
}
