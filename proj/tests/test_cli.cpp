#include <gtest/gtest.h>

#include <unistd.h>

#include "wg/cli.hpp"

using wg::Partition;
using wg::Rational;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "wgtool");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = wg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("wgtool-test-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string bundled(const std::string& kind, const std::string& name) {
  return std::string(WG_DATA_DIR) + "/" + kind + "/" + name + ".json";
}

}  // namespace

TEST(Cli, ValidateBundled) {
  for (const char* g : {"Q8", "GL2F3", "C1"}) {
    const auto r = run({"validate", "--group", g});
    EXPECT_EQ(r.code, 0) << g << r.err;
    EXPECT_NE(r.out.find(",ok,"), std::string::npos);
  }
  const auto r = run({"validate", "--group", bundled("groups", "Q8"), "--table", bundled("tables", "Q8"),
                      "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["ok"].get<bool>());
}

TEST(Cli, ValidateCorruptedTable) {
  auto j = nlohmann::json::parse(wg::detail::read_file(bundled("tables", "Q8")));
  j["chars"][4][2] = "-2";
  j["chars"][4][1] = "2";
  const auto path = scratch("q8-bad.json");
  std::ofstream(path) << j.dump();
  const auto r = run({"validate", "--group", "Q8", "--table", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("orthogonality"), std::string::npos) << r.out;
}

TEST(Cli, MalformedJsonIsReportedWithPosition) {
  const auto path = scratch("broken.json");
  std::ofstream(path) << "{\n  \"name\": \"x\",\n  \"mul\": [[0]\n}";
  const auto r = run({"validate", "--group", path.string(), "--table", bundled("tables", "C1")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("broken.json:4:"), std::string::npos) << r.err;
}

TEST(Cli, Nu2) {
  const auto r = run({"nu2", "--group", "GL2F3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 9u);
  EXPECT_EQ(l[0], "chi,chi1,chi2");
  const std::vector<std::string> want{"chi1,1,0",  "chi2,1,0", "chi3,1,-1", "chi4,1,0",
                                      "chi5,1,0", "chi6,0,-1", "chi7,0,-1", "chi8,1,-1"};
  EXPECT_EQ(std::vector<std::string>(l.begin() + 1, l.end()), want);
  const auto one = run({"nu2", "--group", "C1"});
  EXPECT_EQ(one.out, "chi,xi0\nxi0,1\n");
}

TEST(Cli, DecomposeLittlewood) {
  const std::map<std::string, std::set<std::string>> want{
      {"triv", {"xi0:4", "xi0:2+2"}},
      {"delta", {"xi0:1+1+1+1", "xi0:2+2"}},
      {"iota", {"xi0:3+1"}},
      {"delta-iota", {"xi0:2+1+1"}},
  };
  for (const auto& [pi, labels] : want) {
    const auto r = run({"decompose", "--group", "C1", "--pi", pi, "--n", "2"});
    ASSERT_EQ(r.code, 0) << pi << r.err;
    auto l = lines(r.out);
    EXPECT_EQ(l.front(), "label,multiplicity");
    std::set<std::string> got;
    for (std::size_t i = 1; i < l.size(); ++i) {
      EXPECT_EQ(l[i].substr(l[i].find(',')), ",1");
      got.insert(l[i].substr(0, l[i].find(',')));
    }
    EXPECT_EQ(got, labels) << pi;
  }
}

TEST(Cli, DecomposeQ8) {
  const auto r = run({"decompose", "--group", "Q8", "--xi", "chi2", "--n", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["multiplicity_free"].get<bool>());
  // n = 1: one component per class of Q8 on which chi2 is 1
  std::size_t dims = 0;
  for (const auto& c : j["components"]) {
    EXPECT_EQ(c["multiplicity"], "1");
    ++dims;
  }
  const auto t = wg::load_bundled("Q8");
  std::size_t kernel_classes = 0;
  for (int c = 0; c < t.group().num_classes(); ++c) kernel_classes += t.value(*t.find("chi2"), c) == wg::CycNum(1);
  EXPECT_EQ(dims, kernel_classes);
  EXPECT_EQ(dims, 3u);
}

TEST(Cli, SphericalZ2MatchesFactorization) {
  const auto r = run({"spherical", "--group", "C2", "--xi", "xi1", "--pi", "triv", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "label,C1:3,C1:2+1,C1:1+1+1");
  // h_lambda / (2^{n - l(rho)} n!) chi^lambda_rho
  const std::vector<Partition> parts{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string expect = "xi0:" + parts[i].to_string() + " xi1:" + parts[i].to_string();
    for (const auto& rho : parts) {
      const Rational v = Rational(wg::hook_product(parts[i]) * wg::sym_character(parts[i], rho)) /
                         Rational(wg::Integer(6) << (3 - rho.length()));
      expect += "," + wg::CycNum(v).to_string();
    }
    EXPECT_EQ(l[i + 1], expect);
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"spherical", "--group", "Q8", "--xi", "chi2", "--pi", "iota", "--format", "json"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto path = scratch("table.json");
  auto with_out = args;
  with_out.insert(with_out.end(), {"--out", path.string()});
  EXPECT_EQ(run(with_out).code, 0);
  EXPECT_EQ(wg::detail::read_file(path.string()), a.out);
}

TEST(Cli, CacheGivesSameBytes) {
  const auto dir = scratch("cache");
  std::filesystem::remove_all(dir);
  const std::vector<std::string> args{"spherical", "--group", "C3", "--xi", "xi0", "--n", "2", "--cache-dir", dir.string()};
  const auto first = run(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator()), 1);
  const auto second = run(args);
  EXPECT_EQ(second.out, first.out);
}

TEST(Cli, Reconcile) {
  const auto r = run({"reconcile", "--group", "C2", "--xi", "xi1", "--pi", "delta-iota", "--n", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["mismatches"].empty());
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_FALSE(j["cells"].empty());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"spherical", "--group", "C2", "--pi", "sign"}).code, 2);
  EXPECT_EQ(run({"spherical", "--group", "NoSuchGroup"}).code, 2);
  EXPECT_EQ(run({"spherical", "--group", "Q8", "--xi", "chi5"}).code, 2);  // not linear
  EXPECT_EQ(run({"spherical", "--group", "Q8", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"spherical"}).code, 2);
}

TEST(Cli, CapRefusal) {
  const auto r = run({"spherical", "--group", "GL2F3", "--n", "2", "--cap-elements", "1000"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("'elements'"), std::string::npos) << r.err;
  const auto w = run({"decompose", "--group", "Q8", "--n", "2", "--cap-classwork", "10"});
  EXPECT_EQ(w.code, 3);
  EXPECT_NE(w.err.find("'classwork'"), std::string::npos) << w.err;
}

TEST(Cli, SelftestReportsEveryCriterion) {
  const auto r = run({"selftest"});
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 10u);
  int failing = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    EXPECT_TRUE(l[i].rfind("PASS criterion " + std::to_string(i + 1) + ":", 0) == 0 ||
                l[i].rfind("FAIL criterion " + std::to_string(i + 1) + ":", 0) == 0)
        << l[i];
    failing += l[i].rfind("FAIL", 0) == 0;
  }
  EXPECT_EQ(r.code, failing == 0 ? 0 : 1);
}

TEST(Cli, SelftestCleanCheckout) {
  const auto r = run({"selftest"});
  EXPECT_EQ(r.code, 0) << r.out;
}
