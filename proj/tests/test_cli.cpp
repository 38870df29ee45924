#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "halfint/rational.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HALFINT_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string sample(const std::string& name) { return std::string(HALFINT_SAMPLES) + "/" + name; }

nlohmann::json parsed(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, XiCut) {
  const auto r = run("xi --d 7 --report cut");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["ratio"], "2/3");
  EXPECT_EQ(parsed(r)["ratio_below_d_over_sqrt2_pow_d"], false);
}

TEST(Cli, XiApproxAddsDecimals) {
  const auto r = run("xi --d 19 --report cut --approx");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["ratio_approx"], "0.025839");
}

TEST(Cli, XiCounts) {
  const auto r = run("xi --d 11 --report counts");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["closed_form"]["total"], "21252");
  EXPECT_EQ(parsed(r)["match"], true);
}

TEST(Cli, XiInvalidDimension) {
  EXPECT_EQ(run("xi --d 5 --report counts").code, 2);
  EXPECT_EQ(run("xi --d 11 --report skeleton").code, 2);
  EXPECT_EQ(run("xi --report counts").code, 2);
  EXPECT_EQ(run("xi --d 3 --report nonsense").code, 2);
}

TEST(Cli, XiSkeletonDot) {
  const auto r = run("xi --d 3 --report skeleton --format dot");
  ASSERT_EQ(r.code, 0);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) {
    if (line.empty() || line.back() != ';') continue;
    ++(line.find(" -- ") != std::string::npos ? edges : nodes);
  }
  EXPECT_EQ(nodes, 12u);
  EXPECT_EQ(edges, 18u);
}

TEST(Cli, DotOnlyForGraphReports) {
  EXPECT_EQ(run("xi --d 7 --report counts --format dot").code, 2);
  EXPECT_EQ(run("zono check --in " + sample("octagon.json") + " --format dot").code, 2);
  EXPECT_EQ(run("graph expansion --in " + sample("c6.json") + " --format dot").code, 2);
  EXPECT_EQ(run("zono recognize --in " + sample("halved_c3.json") + " --format dot").code, 0);
}

TEST(Cli, ZonoRecognizeHalvedTriangle) {
  const auto r = run("zono recognize --in " + sample("halved_c3.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["graph"]["components"], nlohmann::json::parse(R"([{"cycle":3}])"));
}

TEST(Cli, ZonoOctagon) {
  const auto check = run("zono check --in " + sample("octagon.json"));
  ASSERT_EQ(check.code, 0);
  EXPECT_EQ(parsed(check)["half_integral"], false);
  EXPECT_EQ(parsed(check)["coordinate_budget"]["pass"], false);
  EXPECT_EQ(run("zono recognize --in " + sample("octagon.json")).code, 3);
}

TEST(Cli, ZonoRealize) {
  const auto r = run("zono realize --in " + sample("c4_p3.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["dim"], 6);
  EXPECT_EQ(parsed(r)["generators"].size(), 6u);
}

TEST(Cli, ZonoVertices) {
  const auto r = run("zono vertices --in " + sample("halved_c3.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["points"].size(), 6u);
}

TEST(Cli, ZonoMalformedInput) {
  const std::string bad = testing::TempDir() + "halfint_bad.json";
  std::ofstream(bad) << "{\"dim\": 2, \"generators\": [[\"1/2\"";
  EXPECT_EQ(run("zono check --in " + bad).code, 2);
  EXPECT_EQ(run("zono check --in /nonexistent/file.json").code, 2);
  std::ofstream(bad) << "{\"dim\": 2, \"generators\": [[\"1\", \"0\"], [\"2\", \"0\"]]}";
  EXPECT_EQ(run("zono check --in " + bad).code, 2);
}

TEST(Cli, FlowFamilies) {
  const auto cube = run("flow --family cube --d 4");
  ASSERT_EQ(cube.code, 0);
  EXPECT_EQ(parsed(cube)["congestion"]["congestion"], "1/2");
  EXPECT_EQ(parsed(cube)["expansion_lower_bound"], "1");

  const auto punct = run("flow --family punctured --d 4");
  ASSERT_EQ(punct.code, 0);
  const auto rho = halfint::Rational::parse(parsed(punct)["congestion"]["congestion"].get<std::string>());
  EXPECT_LE(rho, halfint::Rational(6, 7));
  const auto bound = halfint::Rational::parse(parsed(punct)["expansion_lower_bound"].get<std::string>());
  EXPECT_GE(bound, halfint::Rational(7, 12));

  const auto hex = run("flow --family hexagon");
  ASSERT_EQ(hex.code, 0);
  EXPECT_EQ(parsed(hex)["congestion"]["congestion"], "3/4");

  const auto prod = run("flow --family product --factor cube:2 --factor hexagon");
  ASSERT_EQ(prod.code, 0);
  EXPECT_EQ(parsed(prod)["vertex_count"], 24);
}

TEST(Cli, FlowGuards) {
  EXPECT_EQ(run("flow --family cube --d 11").code, 2);
  EXPECT_EQ(run("flow --family cube").code, 2);
  EXPECT_EQ(run("flow --family punctured --d 2").code, 2);
  EXPECT_EQ(run("flow --family product --factor cube").code, 2);
  EXPECT_EQ(run("flow --family torus --d 3").code, 2);
}

TEST(Cli, GraphExpansion) {
  const auto c6 = run("graph expansion --in " + sample("c6.json"));
  ASSERT_EQ(c6.code, 0);
  EXPECT_EQ(parsed(c6)["expansion"], "2/3");
  EXPECT_EQ(parsed(c6)["witness"]["subset"], nlohmann::json::parse("[0,1,2]"));

  const auto q4 = run("graph expansion --in " + sample("q4.json"));
  ASSERT_EQ(q4.code, 0);
  EXPECT_EQ(parsed(q4)["expansion"], "1");

  const std::string big = testing::TempDir() + "halfint_big.json";
  {
    nlohmann::json g{{"n", 27}, {"edges", nlohmann::json::array()}};
    for (int i = 0; i < 26; ++i) g["edges"].push_back({i, i + 1});
    std::ofstream(big) << g.dump();
  }
  EXPECT_EQ(run("graph expansion --in " + big).code, 2);
}

TEST(Cli, GraphProduct) {
  const auto r = run("graph product --in " + sample("k2.json") + " --in " + sample("k2.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parsed(r)["n"], 4);
  EXPECT_EQ(parsed(r)["edges"].size(), 4u);
}

TEST(Cli, OutputIsDeterministicAndOutFlagWrites) {
  const std::string path = testing::TempDir() + "halfint_out.json";
  ASSERT_EQ(run("flow --family hexagon --routing --out " + path).code, 0);
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, run("flow --family hexagon --routing").out);
  EXPECT_EQ(run("zono recognize --in " + sample("halved_c3.json")).out,
            run("zono recognize --in " + sample("halved_c3.json")).out);
}

TEST(Cli, ThreadsFlagAndEnvironment) {
  const auto one = run("graph expansion --threads 1 --in " + sample("q4.json"));
  const auto env = run("graph expansion --in " + sample("q4.json"));
  EXPECT_EQ(one.out, env.out);
  const std::string cmd = std::string("HALFINT_THREADS=2 ") + HALFINT_CLI + " graph expansion --in " +
                          sample("q4.json") + " > /dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
}

TEST(Cli, Help) {
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("").code, 2);
}
