#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "conglab/classify.hpp"
#include "conglab/partition_system.hpp"
#include "conglab/deduction.hpp"
#include "json_report.hpp"

using namespace conglab;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = {}) {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = cli::run(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(CONGLAB_FIXTURE_DIR) + "/" + name + ".cong"; }

std::string read_fixture_text(const std::string& path) {
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

PieceMask mask_of(int r, const json& j) { return PieceMask::of(r, j.get<std::vector<int>>()); }

Deduction deduction_of(int r, const json& j) {
  Deduction d;
  d.relation = j.at("relation") == "congruent" ? Relation::Congruent : Relation::Subcongruent;
  d.from = mask_of(r, j.at("from"));
  d.to = mask_of(r, j.at("to"));
  for (const json& s : j.at("steps")) {
    DeductionStep st;
    st.from = mask_of(r, s.at("from"));
    st.to = mask_of(r, s.at("to"));
    if (s.at("rule") == "congruence") {
      st.rule = Rule::Congruence;
      st.congruence = s.at("congruence").get<std::size_t>() - 1;
      st.inverse = s.at("inverse");
      st.complemented = s.at("complemented");
    }
    d.steps.push_back(st);
  }
  return d;
}

}  // namespace

TEST(Cli, ClassifyExitCodes) {
  EXPECT_EQ(run_cli({"classify", fixture("fiveset")}).code, 0);
  EXPECT_EQ(run_cli({"classify", fixture("hausdorff")}).code, 1);
  EXPECT_EQ(run_cli({"classify", fixture("duplicate")}).code, 1);
  EXPECT_EQ(run_cli({"classify", "/nonexistent/file.cong"}).code, 2);
  EXPECT_EQ(run_cli({"classify"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, ParseErrorIsUsageError) {
  const Result r = run_cli({"classify", "-"}, "sets 3\ncong {1} ~ {4}\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, ClassifyJsonWitnessesReplay) {
  for (const char* name : {"hausdorff", "padded_hausdorff", "duplicate", "double", "robinson"}) {
    const CongruenceSystem sys = parse_system(read_fixture_text(fixture(name)));
    const Result r = run_cli({"classify", fixture(name), "--json"});
    const json j = json::parse(r.out);
    const bool all_ok = j["weak"]["ok"] && j["consistent"]["ok"] && j["nonredundant"]["ok"];
    EXPECT_EQ(r.code, all_ok ? 0 : 1) << name;
    EXPECT_EQ(j["weak"]["ok"].get<bool>(), is_weak(sys)) << name;
    EXPECT_EQ(j["consistent"]["ok"].get<bool>(), is_consistent(sys)) << name;
    EXPECT_EQ(j["nonredundant"]["ok"].get<bool>(), is_nonredundant(sys)) << name;
    if (j["weak"].contains("witness")) {
      const WeakWitness w{mask_of(sys.pieces(), j["weak"]["witness"]["mask"]),
                          deduction_of(sys.pieces(), j["weak"]["witness"]["chain"])};
      EXPECT_TRUE(check_witness(sys, w)) << name;
    }
    if (j["consistent"].contains("witness")) {
      const json& w = j["consistent"]["witness"];
      EXPECT_TRUE(check_witness(sys, ConsistencyWitness{mask_of(sys.pieces(), w["left"]), mask_of(sys.pieces(), w["right"]),
                                                        deduction_of(sys.pieces(), w["chain"])}))
          << name;
    }
    if (j["nonredundant"].contains("witness")) {
      const json& w = j["nonredundant"]["witness"];
      const RedundancyWitness rw{w["congruence"].get<std::size_t>() - 1, deduction_of(sys.pieces(), w["chain"])};
      EXPECT_TRUE(check_witness(sys, rw)) << name;
    }
  }
}

TEST(Cli, GeneratedSystemPipesIntoClassify) {
  for (int n : {3, 4, 5}) {
    const Result gen = run_cli({"gen-cor22", "--n", std::to_string(n)});
    ASSERT_EQ(gen.code, 0);
    EXPECT_EQ(parse_system(gen.out), generate_partition_system(n).system);
    const Result cls = run_cli({"classify", "-", "--json"}, gen.out);
    EXPECT_EQ(cls.code, 0) << n;
    const json j = json::parse(cls.out);
    EXPECT_TRUE(j["weak"]["ok"].get<bool>());
  }
  EXPECT_EQ(run_cli({"gen-cor22", "--n", "1"}).code, 2);
}

TEST(Cli, ReduceAndTransform) {
  const Result red = run_cli({"reduce", fixture("robinson"), "--json"});
  ASSERT_EQ(red.code, 0);
  EXPECT_TRUE(json::parse(red.out)["everything_deleted"].get<bool>());
  const Result tr = run_cli({"transform", fixture("padded_hausdorff"), "--json"});
  ASSERT_EQ(tr.code, 0);
  const json j = json::parse(tr.out);
  EXPECT_TRUE(j["check"].get<bool>());
  EXPECT_EQ(j["self_complement"].size(), j["system"]["congruences"].size() - j["m_bar"].get<std::size_t>());
}

TEST(Cli, GraphClaims) {
  const Result ok = run_cli({"graph", fixture("fiveset"), "--json"});
  EXPECT_EQ(ok.code, 0);
  const json j = json::parse(ok.out);
  EXPECT_TRUE(j["claim1"]["holds"].get<bool>());
  EXPECT_TRUE(j["claim2"]["holds"].get<bool>());
  EXPECT_TRUE(j["claim3"]["holds"].get<bool>());

  const Result bad = run_cli({"graph", fixture("robinson"), "--claims", "3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("claim 3: fails"), std::string::npos);
  EXPECT_EQ(run_cli({"graph", fixture("fiveset"), "--claims", "4"}).code, 2);
  EXPECT_EQ(run_cli({"graph", fixture("fiveset"), "--variant", "s3"}).code, 2);

  const Result dot = run_cli({"graph", fixture("swap"), "--dot", "-", "--claims", "1"});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0U);
}

TEST(Cli, PartitionCommands) {
  const Result p = run_cli({"partition", fixture("fiveset"), "--w", "s1^2", "--verify-depth", "4", "--json"});
  ASSERT_EQ(p.code, 0) << p.err;
  const json j = json::parse(p.out);
  EXPECT_TRUE(j["verify"]["passed"].get<bool>());
  EXPECT_EQ(j["anchor_piece"], j["identity_piece"]);

  const Result s4 = run_cli({"partition", fixture("padded_hausdorff"), "--verify-depth", "4"});
  EXPECT_EQ(s4.code, 0) << s4.err;
  EXPECT_NE(s4.out.find("variant s4"), std::string::npos);
  EXPECT_EQ(run_cli({"partition", fixture("padded_hausdorff"), "--variant", "s2"}).code, 2);

  const Result orbit = run_cli({"orbit-partition", fixture("padded_hausdorff"), "--w", "t1^2", "--verify-depth", "4"});
  EXPECT_EQ(orbit.code, 0) << orbit.err;
  EXPECT_EQ(run_cli({"orbit-partition", fixture("fiveset")}).code, 2);
  EXPECT_EQ(run_cli({"orbit-partition", fixture("fiveset"), "--w", "e"}).code, 2);
}

TEST(Cli, CertifyFree) {
  const Result r = run_cli({"certify-free", "--m", "3", "--mbar", "2", "--depth", "5", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_TRUE(j["certified"].get<bool>());
  EXPECT_EQ(j["generators"].size(), 3U);
  EXPECT_EQ(j["generators"][0]["entries"].size(), 9U);
  EXPECT_EQ(run_cli({"certify-free", "--m", "2", "--mbar", "3", "--depth", "2"}).code, 2);
}

TEST(Cli, SimulateSnapshotsAndRender) {
  const auto dir = std::filesystem::temp_directory_path() / "conglab_cli_test";
  std::filesystem::remove_all(dir);
  const Result sim = run_cli({"simulate", fixture("padded_hausdorff"), "--steps", "4", "--snapshot-every", "2", "--out",
                              dir.string(), "--svg"});
  ASSERT_EQ(sim.code, 0) << sim.err;
  EXPECT_TRUE(std::filesystem::exists(dir / "stage-0002.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "stage-0004.svg"));
  const Result svg = run_cli({"render", (dir / "stage-0004.json").string()});
  ASSERT_EQ(svg.code, 0) << svg.err;
  std::ifstream f(dir / "stage-0004.svg");
  std::stringstream saved;
  saved << f.rdbuf();
  EXPECT_EQ(svg.out, saved.str());
  EXPECT_EQ(run_cli({"simulate", fixture("padded_hausdorff"), "--steps", "1", "--svg"}).code, 2);
  EXPECT_EQ(run_cli({"render", fixture("fiveset")}).code, 2);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SimulateReportsHonestFailure) {
  const Result r = run_cli({"simulate", fixture("hausdorff"), "--steps", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("M support"), std::string::npos);
}
