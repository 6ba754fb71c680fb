#include <gtest/gtest.h>

#include "support/run.hpp"

namespace {

testing_support::RunResult mdi(const std::string& args) {
  return testing_support::run("cd '" MDI_SOURCE_DIR "' && '" MDI_CLI "' " + args + " 2>/dev/null");
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(mdi("decompose demo/product.ideal").exit_code, 0);
  EXPECT_EQ(mdi("").exit_code, 1);
  EXPECT_EQ(mdi("frobnicate").exit_code, 1);
  EXPECT_EQ(mdi("decompose no/such/file.ideal").exit_code, 1);
  EXPECT_EQ(mdi("member demo/product.ideal 'y3'").exit_code, 1);
  EXPECT_EQ(mdi("member demo/product.ideal 'y1^{x+'").exit_code, 1);
  EXPECT_EQ(mdi("dual demo/product.ideal --point 0").exit_code, 1);
  EXPECT_EQ(mdi("member demo/product.ideal 'y1^99999999999999999999999'").exit_code, 2);
  EXPECT_EQ(mdi("verify demo/product.ideal --max-sum 300").exit_code, 2);
  EXPECT_EQ(mdi("decompose demo/square.ideal").exit_code, 3);
  EXPECT_EQ(mdi("dual demo/example41.ideal").exit_code, 3);
  EXPECT_EQ(mdi("dual demo/product.ideal --point -1,0").exit_code, 3);
  EXPECT_EQ(mdi("check demo/product.ideal --property prime").exit_code, 3);
  EXPECT_EQ(mdi("closure demo/example41.ideal --kind radical").exit_code, 3);
}

TEST(Cli, JsonShape) {
  auto r = mdi("member demo/example41.ideal 'y1^{x}'");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("{\n  \"schema\": 1,", 0), 0u);
  EXPECT_NE(r.out.find("\"all\": false"), std::string::npos);
  auto j = mdi("verify --arity 1 --sets 4 --jobs 3");
  auto k = mdi("verify --arity 1 --sets 4 --jobs 1");
  EXPECT_EQ(j.exit_code, 0);
  EXPECT_EQ(j.out, k.out);
}

TEST(Cli, KindAliases) {
  EXPECT_NE(mdi("member demo/pair.ideal --kind rwm 'y1^{x}*y2'").out.find("\"member\": true"), std::string::npos);
  EXPECT_NE(mdi("member demo/pair.ideal --kind wm 'y1^{x}*y2'").out.find("\"member\": true"), std::string::npos);
  EXPECT_EQ(mdi("member demo/pair.ideal --kind nonsense y1").exit_code, 1);
}
