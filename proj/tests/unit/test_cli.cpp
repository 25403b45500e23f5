#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "mixlink/cli.hpp"

using namespace mixlink;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "mixlink");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze") {
  const Run cusp = run({"analyze", "-e", "z1^3+z2^2", "--trials", "50"});
  CHECK(cusp.code == 0);
  CHECK(cusp.out.find("face type: strongly_polar_positive") != std::string::npos);
  CHECK(cusp.out.find("radial weight: (2,3) m_r=6") != std::string::npos);
  const Run nc = run({"analyze", "-e", "z1z2"});
  CHECK(nc.out.find("not convenient: axes 1,2 missing") != std::string::npos);
  const Run zero = run({"analyze", "-e", "0"});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("degenerate input") != std::string::npos);
  const Run bad = run({"analyze", "-e", "z1^-1"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("offset 3") != std::string::npos);
  CHECK(run({"analyze", "-e", "z3", "-n", "2"}).code == 1);
  const Run js = run({"analyze", "-e", "z1^3+z2^2", "--json", "--trials", "20"});
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["face_type"] == "strongly_polar_positive");
  CHECK(j["radial"]["weights"] == nlohmann::json::array({2, 3}));
}

TEST_CASE("pullback") {
  const Run r = run({"pullback", "-e", "z1^2+z2^2", "--a", "2", "--b", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("w1^4*~w1^2 + w2^4*~w2^2\n", 0) == 0);
  CHECK(r.out.find("covering degree: 1") != std::string::npos);
  CHECK(r.out.find("rdeg 6") != std::string::npos);
  CHECK(r.out.find("pdeg 2") != std::string::npos);
  CHECK(run({"pullback", "-e", "z1^2+z2^2", "--a", "2,1", "--b", "1,2"}).code == 1);
  CHECK(run({"pullback", "-e", "z1^2+z2^2", "--a", "2"}).code == 1);
}

TEST_CASE("certify") {
  const Run ok = run({"certify", "-e", "z1^2+z2^2", "--a", "2", "--b", "1", "--radius", "1", "--samples", "30",
                      "--check", "contact", "--json"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  const auto& rep = j["reports"][0];
  CHECK(rep["check"] == "contact");
  CHECK(rep["verdict"] == "certified-on-samples");
  CHECK(rep["margin"]["min"].get<double>() > 0.0);
  CHECK(rep["samples"] == 30);
  CHECK(rep.contains("config"));

  const Run ob = run({"certify", "-e", "z1^2+z2^2", "--a", "2", "--b", "1", "--radius", "0.5", "--samples", "30",
                      "--check", "openbook", "--json"});
  const auto jo = nlohmann::json::parse(ob.out)["reports"][0];
  CHECK(jo["c_threshold"].get<double>() == 0.0);
  CHECK(std::abs(jo["margin"]["min"].get<double>() - 4.0) < 1e-9);

  const Run neg = run({"certify", "-e", "z1^2+z2^2", "--a", "1", "--b", "2", "--radius", "1", "--samples", "20",
                       "--check", "contact"});
  CHECK(neg.code == 3);
  CHECK(neg.out.find("witness") != std::string::npos);

  const Run none = run({"certify", "-e", "z1*~z1+z2*~z2+1", "--radius", "1", "--samples", "2", "--check",
                        "contact"});
  CHECK(none.code == 2);
  CHECK(run({"certify", "-e", "z1^2+z2^2", "--check", "bogus"}).code == 1);
}

TEST_CASE("pullback-of input file and sample CSV") {
  const std::string path = "cli_test_input.txt";
  std::ofstream(path) << "# cusp\nz1^3 + z2^2\n";
  const Run r = run({"certify", "--pullback-of", path, "--a", "2", "--b", "1", "--radius", "0.5", "--samples", "10",
                     "--check", "transversality", "--emit-samples", "cli_test_samples.csv"});
  CHECK(r.code == 0);
  std::ifstream csv("cli_test_samples.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "re_w1,im_w1,re_w2,im_w2,C,dthetaR,min_sv");
  int rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  CHECK(rows == 10);
  std::remove(path.c_str());
  std::remove("cli_test_samples.csv");
}

TEST_CASE("identity-check") {
  CHECK(run({"identity-check", "-e", "w1^4*~w1^2+w2^4*~w2^2", "--which", "euler"}).code == 0);
  const Run ff = run({"identity-check", "-e", "z1^2+z2^2", "--which", "fourform", "--trials", "100"});
  CHECK(ff.code == 0);
  CHECK(ff.out.find("fourform: pass") != std::string::npos);
  CHECK(run({"identity-check", "-e", "z1^3+z2^2", "--a", "2", "--b", "1", "--which", "positivity"}).code == 0);
  CHECK(run({"identity-check", "-e", "z1^3+z2^2", "--a", "2", "--b", "1", "--which", "cab"}).code == 0);
  CHECK(run({"identity-check", "-e", "z1^3+z2^2", "--which", "cab"}).code == 1);
  CHECK(run({"identity-check", "-e", "z1+z2+z3+z4", "--which", "fourform"}).code == 1);
  CHECK(run({"identity-check", "-e", "z1^2*~z2+z2", "--which", "chainrule", "--trials", "20"}).code == 0);
}

TEST_CASE("the installed binary runs") {
  FILE* p = popen(MIXLINK_CLI_PATH " pullback -e z1 --a 2 --b 1", "r");
  REQUIRE(p != nullptr);
  char buf[256] = {};
  const std::size_t n = fread(buf, 1, sizeof(buf) - 1, p);
  CHECK(pclose(p) == 0);
  CHECK(std::string(buf, n).rfind("w1^2*~w1", 0) == 0);
}
