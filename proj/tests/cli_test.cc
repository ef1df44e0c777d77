// Copyright 2026 The claka Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "claka/codec.hpp"
#include "claka/keyinfra.hpp"
#include "cli.hpp"

namespace claka::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("claka_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int Run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::Run(args, out_, err_);
  }

  std::string Path(const std::string& name) const {
    return (dir_ / name).string();
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, KeygenIsDeterministicAndVerifies) {
  ASSERT_EQ(Run({"keygen", "--protocol", "xcl12", "--seed", "7", "--out",
                 Path("k1.json")}),
            kExitOk);
  ASSERT_EQ(Run({"keygen", "--protocol", "xcl12", "--seed", "7", "--out",
                 Path("k2.json")}),
            kExitOk);
  EXPECT_EQ(Slurp(Path("k1.json")), Slurp(Path("k2.json")));
  const auto keys =
      codec::KeyStoreFromJson(codec::Parse(Slurp(Path("k1.json"))));
  for (const auto& user : keys.xcl12()) {
    EXPECT_TRUE(xcl12::VerifyPartialKey(keys.params, user.id,
                                        user.key.partial));
  }

  ASSERT_EQ(Run({"keygen", "--protocol", "xcq11", "--seed", "7"}), kExitOk);
  const auto xcq = codec::KeyStoreFromJson(codec::Parse(out_.str()));
  for (const auto& user : xcq.xcq11()) {
    EXPECT_TRUE(xcq11::VerifyPartialKey(xcq.params, user.id, user.partial));
  }
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run({"keygen", "--protocl", "xcl12"}), kExitUsage);
  EXPECT_EQ(Run({"run", "--protocol", "xcq12"}), kExitUsage);
  EXPECT_EQ(Run({"attack", "kci-kgc", "--protocol", "xcq11"}), kExitUsage);
  EXPECT_EQ(Run({"attack", "secrets", "--protocol", "xcl12i"}), kExitUsage);
  EXPECT_EQ(Run({"attack", "--protocol", "xcq11"}), kExitUsage);
  EXPECT_EQ(Run({"attack", "mitm", "--protocol", "xcq11"}), kExitUsage);
  EXPECT_EQ(Run({"run", "--protocol", "xcq11", "--ids", "a,a,b"}), kExitUsage);
  EXPECT_EQ(Run({"run", "--protocol", "xcq11", "--backend", "crypto",
                 "--profile", "small"}),
            kExitUsage);
  EXPECT_EQ(Run({"count-ops", "--protocol", "xcq11"}), kExitUsage);
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
}

TEST_F(CliTest, RunEveryVariant) {
  for (const char* p : {"xcq11", "xcq11i", "xcl12", "xcl12i"}) {
    EXPECT_EQ(Run({"run", "--protocol", p, "--seed", "3"}), kExitOk) << p;
    const auto doc = codec::Parse(out_.str());
    EXPECT_TRUE(doc["agreed"].get<bool>());
  }
}

TEST_F(CliTest, RunWithIdsAndKeyFile) {
  ASSERT_EQ(Run({"keygen", "--protocol", "xcq11i", "--seed", "5", "--ids",
                 "zoe,yan,xia", "--out", Path("k.json")}),
            kExitOk);
  EXPECT_EQ(Run({"run", "--protocol", "xcq11i", "--keys", Path("k.json"),
                 "--seed", "1"}),
            kExitOk);
  const auto doc = codec::Parse(out_.str());
  EXPECT_EQ(doc["config"]["identities"][0], "xia");
  EXPECT_EQ(Run({"run", "--protocol", "xcl12", "--keys", Path("k.json")}),
            kExitUsage);
  EXPECT_EQ(Run({"run", "--protocol", "xcq11i", "--keys", Path("nope.json")}),
            kExitIo);
}

TEST_F(CliTest, CorruptedKeyFileEndsInSignatureAbort) {
  ASSERT_EQ(Run({"keygen", "--protocol", "xcq11i", "--seed", "5", "--out",
                 Path("k.json")}),
            kExitOk);
  auto doc = codec::Parse(Slurp(Path("k.json")));
  std::string full = doc["users"][1]["full_key"];
  full.back() = full.back() == '0' ? '1' : '0';
  doc["users"][1]["full_key"] = full;
  std::ofstream(Path("bad.json")) << codec::Dump(doc);
  EXPECT_EQ(Run({"run", "--protocol", "xcq11i", "--keys", Path("bad.json"),
                 "--seed", "1"}),
            kExitAbort);
  EXPECT_NE(err_.str().find("signature from bob"), std::string::npos);
}

TEST_F(CliTest, AttackExitCodesFollowExpectation) {
  EXPECT_EQ(Run({"attack", "fs", "--protocol", "xcq11", "--seed", "2"}),
            kExitOk);
  EXPECT_TRUE(codec::Parse(out_.str())["outcome"]["success"].get<bool>());
  EXPECT_EQ(Run({"attack", "fs", "--protocol", "xcq11i", "--seed", "2"}),
            kExitOk);
  EXPECT_FALSE(codec::Parse(out_.str())["outcome"]["success"].get<bool>());
  EXPECT_EQ(Run({"attack", "--attack", "kci", "--protocol", "xcq11i",
                 "--seed", "2"}),
            kExitOk);
  EXPECT_TRUE(codec::Parse(out_.str())["outcome"]["honest_abort"].get<bool>());
  EXPECT_EQ(Run({"attack", "kci-common", "--protocol", "xcl12", "--seed",
                 "2", "--backend", "crypto"}),
            kExitOk);
}

TEST_F(CliTest, DegenerateSecretsRecipeHasOwnExitCode) {
  // user0035 and user0037 collide under H1 mod 1009.
  EXPECT_EQ(Run({"attack", "secrets", "--protocol", "xcq11", "--profile",
                 "small", "--ids", "alice,user0035,user0037", "--seed", "1"}),
            kExitCrypto);
}

TEST_F(CliTest, ReplayRoundTrip) {
  ASSERT_EQ(Run({"attack", "kci-kgc", "--protocol", "xcl12i", "--seed", "4",
                 "--out", Path("a.json")}),
            kExitOk);
  EXPECT_EQ(Run({"replay", Path("a.json")}), kExitOk);
  EXPECT_EQ(Run({"run", "--replay", Path("a.json")}), kExitOk);

  auto doc = codec::Parse(Slurp(Path("a.json")));
  doc["transcript"]["parties"][0]["key_digest"] = std::string(64, '0');
  std::ofstream(Path("b.json")) << codec::Dump(doc);
  EXPECT_EQ(Run({"replay", Path("b.json")}), kExitUnexpected);

  std::ofstream(Path("c.json")) << "not json";
  EXPECT_EQ(Run({"replay", Path("c.json")}), kExitIo);
}

TEST_F(CliTest, CountOps) {
  EXPECT_EQ(Run({"count-ops", "--seed", "1"}), kExitOk);
  const auto doc = codec::Parse(out_.str());
  EXPECT_EQ(doc["parties"][0]["delta"]["point_additions"], 4);
}

TEST_F(CliTest, SeededRunsAreByteIdentical) {
  ASSERT_EQ(Run({"run", "--protocol", "xcl12i", "--seed", "9", "--out",
                 Path("r1.json")}),
            kExitOk);
  ASSERT_EQ(Run({"run", "--protocol", "xcl12i", "--seed", "9", "--out",
                 Path("r2.json")}),
            kExitOk);
  EXPECT_EQ(Slurp(Path("r1.json")), Slurp(Path("r2.json")));
}

TEST_F(CliTest, UnwritableOutputIsIoError) {
  EXPECT_EQ(Run({"run", "--protocol", "xcq11", "--seed", "1", "--out",
                 Path("missing/dir/r.json")}),
            kExitIo);
}

}  // namespace
}  // namespace claka::cli
