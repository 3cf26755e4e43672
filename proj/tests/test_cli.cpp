#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace tropseg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tropseg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tropseg_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_F(Cli, SegmentCsv) {
  auto a = file("t1.nwk", tropseg::testing::kFourLeafT1);
  auto b = file("t2.nwk", tropseg::testing::kFourLeafT2);
  auto r = run({"segment", a, b});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].rfind("index,lambda,u_1_2,u_1_3,u_1_4,u_2_3,u_2_4,u_3_4,newick,topology", 0), 0u);
  EXPECT_NE(rows[1].find(",0.8,0.8,2,0.4,2,2,"), std::string::npos) << rows[1];
  EXPECT_NE(rows[2].find(",0.8,0.8,2,0.8,2,2,"), std::string::npos) << rows[2];
  EXPECT_NE(rows[3].find(",0.4,0.8,2,0.8,2,2,"), std::string::npos) << rows[3];
  EXPECT_TRUE(r.err.empty());
}

TEST_F(Cli, SegmentFormats) {
  auto a = file("t1.nwk", tropseg::testing::kFourLeafT1);
  auto b = file("t2.nwk", tropseg::testing::kFourLeafT2);
  EXPECT_EQ(lines(run({"segment", a, b, "--format", "newick"}).out).size(), 3u);
  auto j = run({"segment", a, b, "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_NE(j.out.find("\"bends\""), std::string::npos);
  EXPECT_EQ(run({"segment", a, b, "--format", "xml"}).code, 1);
}

TEST_F(Cli, IdenticalFilesGiveOneRow) {
  auto a = file("t1.nwk", tropseg::testing::kEightLeaf);
  EXPECT_EQ(lines(run({"segment", a, a}).out).size(), 2u);
  auto topo = run({"topologies", a, a});
  EXPECT_EQ(topo.out.find("topology\t1"), std::string::npos);
  EXPECT_NE(topo.out.find("topology\t0"), std::string::npos);
  EXPECT_EQ(run({"dist", a, a}).out, "0\n");
}

TEST_F(Cli, ErrorsAndExitCodes) {
  auto good = file("good.nwk", tropseg::testing::kFourLeafT1);
  auto bad = file("bad.nwk", "((1:1,2:1):1,3:2");
  auto r = run({"segment", good, bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"segment", good, (dir_ / "missing.nwk").string()}).code, 2);

  auto uneven = file("uneven.nwk", "((1:1,2:1):1,(3:1,4:1.5):1);");
  auto u = run({"validate", uneven});
  EXPECT_EQ(u.code, 3);
  EXPECT_NE(u.err.find("4"), std::string::npos);
  EXPECT_EQ(run({"segment", good, uneven}).code, 3);

  auto other = file("other.nwk", "((1:1,2:1):1,(3:1,5:1):1);");
  EXPECT_EQ(run({"segment", good, other}).code, 4);
  EXPECT_EQ(run({"dist", good, other}).code, 4);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
}

TEST_F(Cli, Topologies) {
  auto a = file("t1.nwk", tropseg::testing::kFourLeafT1);
  auto b = file("t2.nwk", tropseg::testing::kFourLeafT2);
  auto r = run({"topologies", a, b});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  int topologies = 0;
  for (const auto& l : rows) topologies += l.rfind("topology\t", 0) == 0;
  EXPECT_EQ(topologies, 3);
  EXPECT_NE(r.out.find("star-crossing\tno"), std::string::npos);
  EXPECT_NE(r.out.find("transition\t0\t2\tyes"), std::string::npos);

  auto c = file("c.nwk", "((1:0.5,2:0.5):0.5,3:1);");
  auto d = file("d.nwk", "((2:0.3,3:0.3):0.7,1:1);");
  EXPECT_NE(run({"topologies", c, d}).out.find("star-crossing\tyes"), std::string::npos);
  EXPECT_NE(run({"topologies", a, b, "--format", "json"}).out.find("\"star_crossing\": false"), std::string::npos);
}

TEST_F(Cli, Dist) {
  auto a = file("t1.nwk", tropseg::testing::kFourLeafT1);
  auto b = file("t2.nwk", tropseg::testing::kFourLeafT2);
  EXPECT_EQ(run({"dist", a, b}).out, "0.8\n");
}

TEST_F(Cli, Validate) {
  auto a = file("t1.nwk", tropseg::testing::kFourLeafT1);
  auto r = run({"validate", a});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ok\t4 leaves\theight 1\n");
  EXPECT_EQ(run({"validate", file("star.nwk", "(1:1,2:1,3:1,4:1);")}).code, 0);
}

TEST_F(Cli, Simulate) {
  auto r = run({"simulate", "star-prob", "--n", "5", "--samples", "2000", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("\"hits\": 0,"), std::string::npos);
  EXPECT_EQ(run({"simulate", "star-prob", "--n", "5", "--samples", "2000", "--seed", "3"}).out, r.out);

  auto c = run({"simulate", "nni-conjecture", "--n", "4", "--samples", "100"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("\"transition_histogram\""), std::string::npos);

  auto log = (dir_ / "violations.csv").string();
  EXPECT_EQ(run({"simulate", "nni-conjecture", "--n", "5", "--samples", "50", "--violations", log}).code, 0);
  std::ifstream in(log);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "pair_index,newick_t1,newick_t2,transition_index");

  EXPECT_EQ(run({"simulate", "star-prob", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"simulate", "star-prob", "--samples", "0"}).code, 1);
  EXPECT_EQ(run({"simulate", "yule"}).code, 1);
}
