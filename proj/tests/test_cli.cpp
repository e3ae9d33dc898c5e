#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

#ifndef CJAC_CLI
#error "CJAC_CLI must name the cjac executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CJAC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, Analyze) {
  const auto r = run("analyze 3,7,8");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["v0"], 6);
  EXPECT_EQ(json_of(run("analyze 2,3"))["delta"], 1);
  EXPECT_EQ(json_of(run("analyze 4,13,18,19"))["v0"], 16);
}

TEST(Cli, Enumerate) {
  EXPECT_EQ(json_of(run("enumerate 3,4,5 --d 2"))["count"], 3);
  EXPECT_EQ(json_of(run("enumerate 3,4,5 --d 0"))["count"], 1);
  EXPECT_EQ(json_of(run("enumerate 3,4,5 --d 2 --filt-only"))["count"], 3);
}

TEST(Cli, Limit) {
  EXPECT_EQ(json_of(run("limit 3,4,5 --family 't + b'"))["limit"]["text"], "{1}+[3,)");
  EXPECT_EQ(json_of(run("limit 3,4,5 --family 't^2 + b*t + b^2'"))["limit"]["text"], "{2}+[3,)");
  EXPECT_EQ(json_of(run("limit 3,4,5 --family 1"))["limit"]["text"], "{0}+[3,)");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("analyze 3,x").code, 2);
  EXPECT_EQ(run("limit 3,4,5 --family 't +'").code, 2);
  EXPECT_EQ(run("analyze 3,4 --bogus").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("enumerate 3,4,5 --d 7").code, 2);
}

TEST(Cli, Classify) {
  const auto r = run("classify 3,4,5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["component_surrogate"], 2);
  EXPECT_EQ(run("classify 1").code, 0);
}

TEST(Cli, SurveyDeterministic) {
  const auto a = run("survey --v0-max 8 --csv");
  const auto b = run("survey --v0-max 8 --csv --threads 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  int lines = 0;
  for (char c : a.out) lines += c == '\n';
  EXPECT_EQ(lines, 28);
  const auto j = json_of(run("survey --v0-max 2"));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["generators"], "1");
  EXPECT_EQ(j[1]["generators"], "2,3");
}

TEST(Cli, ReplicateSingle) {
  const auto r = run("replicate-examples --only 1");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["examples"][0]["outcome"], "pass");
  const auto d = run("replicate-examples --only 5");
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(json_of(d)["examples"][0]["outcome"], "diagnostic");
}
