#include <gtest/gtest.h>

#include "rescat/io.hpp"
#include "rescat/verify.hpp"
#include "support.hpp"

using namespace rescat;

class Suites : public ::testing::TestWithParam<std::string> {};

TEST_P(Suites, AllChecksPass) {
  std::vector<CheckResult> rs = run_suite(GetParam(), VerifyOptions{});
  ASSERT_FALSE(rs.empty());
  for (const CheckResult& r : rs) EXPECT_TRUE(r.pass) << r.suite << ": " << r.name << " " << r.detail;
  EXPECT_EQ(report_exit_code(rs), 0);
}

INSTANTIATE_TEST_SUITE_P(Verify, Suites, ::testing::ValuesIn(suite_names()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '.') c = '_';
                           return s;
                         });

TEST(Verify, ThreadCountDoesNotChangeTheReport) {
  std::string one = format_report(run_suite("all", VerifyOptions{1, 101}));
  std::string four = format_report(run_suite("all", VerifyOptions{4, 101}));
  EXPECT_EQ(one, four);
  EXPECT_NE(one.find("PASS"), std::string::npos);
}

TEST(Verify, OtherCharacteristic) {
  std::vector<CheckResult> rs = run_suite("lemma4", VerifyOptions{2, 7});
  for (const CheckResult& r : rs) EXPECT_TRUE(r.pass) << r.name;
}

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_suite("nope", VerifyOptions{}), InputError);
  EXPECT_THROW(run_criterion(0, VerifyOptions{}), InputError);
}

TEST(Verify, ExitCodes) {
  CheckResult ok{"s", "a", true, false, ""};
  CheckResult bad{"s", "b", false, false, ""};
  CheckResult res{"s", "c", false, true, ""};
  EXPECT_EQ(report_exit_code({ok}), 0);
  EXPECT_EQ(report_exit_code({ok, bad}), 1);
  EXPECT_EQ(report_exit_code({ok, res}), 3);
  EXPECT_NE(format_report({ok, bad}).find("FAIL s: b"), std::string::npos);
}

TEST(RandomModule, DeterministicAndNonzero) {
  auto R = test::ring({"x", "y", "z"});
  for (uint64_t s = 1; s <= 20; ++s) {
    Module a = random_module(R, s), b = random_module(R, s);
    EXPECT_EQ(format_module(a), format_module(b));
    EXPECT_FALSE(a.is_zero());
  }
  EXPECT_NE(format_module(random_module(R, 1)), format_module(random_module(R, 2)));
}
