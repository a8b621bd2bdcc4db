#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "test_support.hpp"
#include "tdhom/fixtures.hpp"

using namespace tdtest;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tdhom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const cli::Context ctx{cli::builtin_fixtures(), &out, &err};
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), ctx);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& sub) { return s.find(sub) != std::string::npos; }

}  // namespace

TEST(Cli, VerifyPassesOnFixtures) {
  const auto r = invoke({"verify", "@sl2", "@heisenberg", "@coalgebras", "--suite", "td-lie", "--guard-limit", "2000000"});
  EXPECT_EQ(r.code, cli::kPass) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "PASS td lie sl2 over T3: twisted jacobi"));
  EXPECT_TRUE(contains(r.out, "PASS jordan sl2 over E: (f^2)f = 0"));
  EXPECT_TRUE(contains(r.out, "result: pass"));
  EXPECT_TRUE(contains(r.err, "elapsed"));
}

TEST(Cli, BrokenJacobiReportsWitnessAndFails) {
  const auto r = invoke({"verify", "@broken-jacobi", "@coalgebras", "--suite", "td-lie"});
  EXPECT_EQ(r.code, cli::kCheckFailure);
  EXPECT_TRUE(contains(r.out, "FAIL lie broken: jacobi")) << r.out;
  EXPECT_TRUE(contains(r.out, "witness")) << r.out;
  EXPECT_TRUE(contains(r.out, "SKIP")) << r.out;
  const auto unsafe = invoke({"verify", "@broken-jacobi", "@coalgebras", "--suite", "td-lie", "--unsafe-skip-axioms",
                           "--guard-limit", "2000000"});
  EXPECT_EQ(unsafe.code, cli::kCheckFailure);
  EXPECT_TRUE(contains(unsafe.out, "FAIL td lie broken over T3: twisted jacobi")) << unsafe.out;
}

TEST(Cli, InputErrorsExitWithTwo) {
  EXPECT_EQ(invoke({"verify", "/nonexistent/x.json"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"verify", "@nope"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"verify", "@sl2", "--suite", "bogus"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"examples", "export", "nope"}).code, cli::kInputError);
  EXPECT_EQ(invoke({"cohomology", "@sl2", "--module", "nope"}).code, cli::kInputError);
  EXPECT_EQ(invoke({}).code, cli::kInputError);
}

TEST(Cli, GuardRefusalExitsWithThree) {
  const auto r = invoke({"cohomology", "@sl2", "@coalgebras", "--module", "sl2-adjoint", "--coalgebra", "T3", "--td"});
  EXPECT_EQ(r.code, cli::kGuardRefusal);
  EXPECT_TRUE(contains(r.err, "--guard-limit"));
  const auto v = invoke({"verify", "@truncated-lr", "@coalgebras", "--suite", "lie-rinehart"});
  EXPECT_EQ(v.code, cli::kGuardRefusal) << v.out;
  EXPECT_TRUE(contains(v.out, "SKIP")) << v.out;
}

TEST(Cli, ExamplesListAndExport) {
  const auto r = invoke({"examples", "list"});
  EXPECT_EQ(r.code, cli::kPass);
  for (const auto* name : {"sl2", "heisenberg", "dual-numbers-lr", "coalgebras", "poisson", "broken-jacobi"})
    EXPECT_TRUE(contains(r.out, std::string(name) + "  ")) << name;
  EXPECT_TRUE(contains(r.out, "coalgebra E (skew_cocommutative)"));

  const auto path = (std::filesystem::temp_directory_path() / "tdhom-cli-test-heis.json").string();
  ASSERT_EQ(invoke({"examples", "export", "heisenberg", "-o", path}).code, cli::kPass);
  EXPECT_EQ(invoke({"verify", path, "@coalgebras", "--suite", "td-module"}).code, cli::kPass);
  EXPECT_EQ(invoke({"fmt", path}).out, invoke({"examples", "export", "heisenberg"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, JsonIsDeterministicAndMatchesText) {
  const std::vector<std::string> args{"verify", "@poisson", "@coalgebras", "--suite", "td-poisson"};
  auto json_args = args;
  json_args.push_back("--json");
  const auto a = invoke(json_args), b = invoke(json_args);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(render_text(j), invoke(args).out);
}

TEST(Cli, BrokenPoissonFailsDerivation) {
  const auto r = invoke({"verify", "@poisson-broken", "@coalgebras", "--suite", "td-poisson", "--json"});
  EXPECT_EQ(r.code, cli::kCheckFailure);
  bool seen = false;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& c : j["checks"])
    if (c["status"] == "fail" && c["name"] == "derivation") seen = c.contains("witness");
  EXPECT_TRUE(seen) << r.out;
}

TEST(Cli, CohomologyTables) {
  const auto r = invoke({"cohomology", "@sl2", "--module", "sl2-trivial", "--json"});
  ASSERT_EQ(r.code, cli::kPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tables"][0]["h"], nlohmann::json({1, 0, 0, 1}));

  const auto td = invoke({"cohomology", "@sl2", "@coalgebras", "--module", "sl2-adjoint", "--coalgebra", "T2", "--td",
                       "--json"});
  ASSERT_EQ(td.code, cli::kPass) << td.err;
  const auto t = nlohmann::json::parse(td.out)["tables"][1];
  EXPECT_EQ(t["kind"], "td");
  EXPECT_EQ(t["h"], nlohmann::json({0, 0, 3}));
  for (const auto& [k, v] : t["facts"].items()) EXPECT_EQ(v, "pass") << k;

  const auto lr = invoke({"cohomology", "@dual-numbers-lr", "@coalgebras", "--module", "dual-numbers-lr", "--coalgebra",
                       "S2", "--td"});
  EXPECT_EQ(lr.code, cli::kPass) << lr.err;
}

TEST(Cli, NonCoassociativeCoalgebraIsReportedNotFatal) {
  const auto r = invoke({"verify", "@sl2", "@noncoassociative", "--suite", "td-lie"});
  EXPECT_EQ(r.code, cli::kCheckFailure);
  EXPECT_TRUE(contains(r.out, "FAIL coalgebra N: coassociativity")) << r.out;
}
