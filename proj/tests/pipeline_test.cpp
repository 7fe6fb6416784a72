#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "nilcert/pipeline.hpp"

using namespace nilcert;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "nilcert_pipeline_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST(ParseCoefficients, Lists) {
  EXPECT_EQ(parse_coefficients("1,-2,4"), (std::vector<mpz_class>{1, -2, 4}));
  EXPECT_EQ(parse_coefficients(" 7 "), (std::vector<mpz_class>{7}));
  EXPECT_THROW(parse_coefficients(""), UsageError);
  EXPECT_THROW(parse_coefficients("1,,2"), UsageError);
  EXPECT_THROW(parse_coefficients("1,x"), UsageError);
  EXPECT_THROW(parse_coefficients("1,"), UsageError);
}

TEST(Cli, Z8Example) {
  const auto r = cli({"concrete", "--modulus", "8", "--f", "1,2,4", "--g", "1,6", "--minimal"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("target a1: e=3 verified (minimal 3)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("target a2: e=3 verified (minimal 2)"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, Z8Json) {
  const auto r = cli({"concrete", "--modulus", "8", "--f", "1,2,4", "--g", "1,6", "--minimal", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 2);
  EXPECT_EQ(j["m"], 1);
  EXPECT_EQ(j["mode"], "concrete");
  EXPECT_EQ(j["ring"], "Z/8");
  ASSERT_EQ(j["targets"].size(), 2u);
  EXPECT_EQ(j["targets"][0]["i0"], 1);
  EXPECT_EQ(j["targets"][0]["e"], 3);
  EXPECT_EQ(j["targets"][0]["minimal"], 3);
  EXPECT_EQ(j["targets"][1]["minimal"], 2);
  EXPECT_EQ(j["metrics"]["vertices"], 5);
  EXPECT_EQ(j["certificate"], "verified");
}

TEST(Cli, ReducedCoefficientsGetANotice) {
  const auto r = cli({"concrete", "--modulus", "8", "--f", "9,-6,4", "--g", "1,6", "--target", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("NOTICE: coefficient 9 reduced mod 8"), std::string::npos);
  EXPECT_NE(r.err.find("NOTICE: coefficient -6 reduced mod 8"), std::string::npos);
  EXPECT_NE(r.out.find("f = 1 + 2*T + 4*T^2"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("target a1"), std::string::npos);
}

TEST(Cli, NotAUnit) {
  const auto r = cli({"concrete", "--modulus", "8", "--f", "1,1", "--g", "1,1"});
  EXPECT_EQ(r.code, kExitNotAUnit);
  EXPECT_EQ(r.err.rfind("ERROR:not-a-unit: ", 0), 0u) << r.err;
  EXPECT_NE(r.err.find("c1"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"generic", "--n", "2"},
           {"generic", "--n", "0", "--m", "1"},
           {"generic", "--n", "2", "--m", "1", "--target", "3"},
           {"concrete", "--modulus", "1", "--f", "1,1", "--g", "1"},
           {"concrete", "--modulus", "8", "--f", "1", "--g", "1"},
           {"concrete", "--modulus", "8", "--f", "1,x", "--g", "1"},
           {"ln", "--modulus", "12", "--ideal", "5"},
           {"bogus"},
       }) {
    const auto r = cli(args);
    EXPECT_EQ(r.code, kExitUsage) << r.err;
    EXPECT_EQ(r.err.rfind("ERROR:usage: ", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  }
}

TEST(Cli, GenericCertificateRoundTrip) {
  const auto cert = scratch("g21.cert");
  const auto dot = scratch("g21.dot");
  const auto json = scratch("g21.json");
  const auto r = cli({"generic", "--n", "2", "--m", "1", "--emit-cert", cert.string(), "--emit-dot",
                      dot.string(), "--emit-json", json.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("target a1: e=3 verified"), std::string::npos);
  EXPECT_NE(r.out.find("target a2: e=3 verified"), std::string::npos);
  EXPECT_NE(r.out.find("certificate: verified"), std::string::npos);

  const auto v = cli({"verify-cert", cert.string()});
  EXPECT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(v.out, "i0=1 e=3: verified\ni0=2 e=3: verified\n");

  EXPECT_EQ(slurp(dot).rfind("digraph nilcert {", 0), 0u);
  const auto j = nlohmann::json::parse(slurp(json));
  EXPECT_EQ(j["files"]["certificate"], cert.string());

  // one coefficient bumped by +1 must be rejected
  auto text = slurp(cert);
  const auto pos = text.find("rel 3 ");
  ASSERT_NE(pos, std::string::npos);
  const auto eol = text.find('\n', pos);
  text.insert(eol, " + 1");
  const auto bad = scratch("g21_bad.cert");
  std::ofstream(bad) << text;
  const auto w = cli({"verify-cert", bad.string()});
  EXPECT_EQ(w.code, kExitVerification);
  EXPECT_NE(w.out.find("i0=1 e=3: failed"), std::string::npos) << w.out;
  EXPECT_EQ(w.err.rfind("ERROR:verification: ", 0), 0u);
}

TEST(Cli, VerifyCertMissingFile) {
  const auto r = cli({"verify-cert", scratch("does_not_exist.cert").string()});
  EXPECT_NE(r.code, kExitOk);
  EXPECT_EQ(r.err.rfind("ERROR:", 0), 0u);
}

TEST(Cli, NoCert) {
  const auto r = cli({"generic", "--n", "3", "--m", "2", "--no-cert", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["certificate"], "not-applicable");
  EXPECT_EQ(j["targets"][0]["e"], 10);
  EXPECT_EQ(j["metrics"]["vertices"], 11);
}

TEST(Cli, EarlyStop) {
  const auto r = cli({"generic", "--n", "2", "--m", "1", "--early-stop", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["earlyStop"]);
  EXPECT_EQ(j["targets"][0]["e"], 3);
  // a2 is a generator at (01,0), so that node becomes a sink for target 2
  EXPECT_EQ(j["targets"][1]["e"], 2);
  EXPECT_TRUE(j["targets"][1].contains("metrics"));
  EXPECT_EQ(j["certificate"], "verified");
}

TEST(Cli, Ln) {
  const auto r = cli({"ln", "--modulus", "12", "--ideal", "12"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "radical of (12) in Z/12: (6)\nprimes: 2 3\n");
  const auto j = nlohmann::json::parse(cli({"ln", "--modulus", "30", "--ideal", "30", "--json"}).out);
  EXPECT_EQ(j["primes"], nlohmann::json({2, 3, 5}));
  EXPECT_EQ(j["radical"], 30);
}

TEST(Cli, Pascal) {
  const auto r = cli({"pascal", "--n", "2", "--m", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "3 1\n2 1\n1 .\nroot exponent: 3\n");
  const auto j = nlohmann::json::parse(cli({"pascal", "--n", "4", "--m", "3", "--json"}).out);
  EXPECT_EQ(j["root"], 35);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"generic", "--n", "3", "--m", "3", "--json"};
  const auto x = cli(args), y = cli(args);
  EXPECT_EQ(x.out, y.out);
  const auto d1 = scratch("det1.dot"), d2 = scratch("det2.dot");
  cli({"generic", "--n", "4", "--m", "2", "--no-cert", "--emit-dot", d1.string()});
  cli({"generic", "--n", "4", "--m", "2", "--no-cert", "--emit-dot", d2.string()});
  EXPECT_EQ(slurp(d1), slurp(d2));
}
