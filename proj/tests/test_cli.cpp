#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(GRAMHOLES_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gramholes_cli_" + std::to_string(getpid()) + "_" + name);
}

const char* kDetG1 =
    "1*x1^2*x2^2-1*x2^2*y1^2-1*x1^2*y2^2+1*y1^2*y2^2-2*d*x1*x2*z1-2*d*y1*y2*z1+1*d^2*z1^2+2*x2*y1*z1*z2+"
    "2*x1*y2*z1*z2-1*z1^2*z2^2+2*d*x2*y1*z3+2*d*x1*y2*z3-2*x1*x2*z2*z3-2*y1*y2*z2*z3-1*d^2*z3^2+1*z2^2*z3^2\n";

}  // namespace

TEST(Cli, DetG1) {
  const Outcome r = run("det --n 1 --k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, kDetG1);
}

TEST(Cli, DetJson) {
  const Outcome r = run("det --n 1 --k 1 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["det"], "1*d^2-1*a^2");
  EXPECT_EQ(j["terms"], 2);
}

TEST(Cli, GramFileRoundTrip) {
  const auto f = tmp("g1.json");
  ASSERT_EQ(run("gram --n 1 --k 2 --format json --out " + f.string()).code, 0);
  EXPECT_EQ(run("det --from-file " + f.string()).out, kDetG1);
  const Outcome again = run("gram --from-file " + f.string() + " --format json");
  std::ifstream in(f);
  EXPECT_EQ(nlohmann::json::parse(again.out), nlohmann::json::parse(in));
  std::filesystem::remove(f);
}

TEST(Cli, Substitution) {
  const Outcome r = run("det --n 1 --k 2 --subst x1=0,x2=0,y1=0,y2=0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1*d^2*z1^2-1*z1^2*z2^2-1*d^2*z3^2+1*z2^2*z3^2\n");
  const Outcome s = run("subst --n 1 --k 1 --subst a=0");
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find('d'), std::string::npos);
}

TEST(Cli, EnumDeltaBlocks) {
  const Outcome e = run("enum --n 2 --k 2 --format json");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out).size(), 18u);
  const Outcome d = run("delta --n 4");
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("d^888*z1^512"), std::string::npos);
  EXPECT_EQ(run("blocks --n 2").code, 0);
}

TEST(Cli, Verify) {
  const Outcome r = run("verify --claim diagonal-product --n 4 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["verdict"], "pass");
  const Outcome bad = run("verify --claim difference-of-squares");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("fail"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("gram --n 9 --k 2").code, 3);
  EXPECT_EQ(run("det --n 1 --k 9").code, 2);
  EXPECT_EQ(run("det --n 1 --k 2 --subst q=1").code, 2);
  EXPECT_EQ(run("det --n 1 --k 2 --engine lu").code, 2);
  EXPECT_EQ(run("verify --claim no-such-claim").code, 2);
  EXPECT_EQ(run("det --from-file /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("").code, 2);
}
