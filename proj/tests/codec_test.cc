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

#include "claka/codec.hpp"
#include "claka/errors.hpp"
#include "claka/harness.hpp"
#include "test_util.hpp"

namespace claka::codec {
namespace {

using harness::Family;
using harness::Protocol;
using harness::ScenarioConfig;

TEST(KeyStoreCodecTest, RoundTripBothFamilies) {
  for (auto family : {Family::kXcq11, Family::kXcl12}) {
    for (auto group : {testing::P256Group(), testing::CryptoGroup()}) {
      const auto keys = harness::GenerateKeyStore(
          family, group, {"alice", "bob", "carol"}, 91);
      const Json doc = KeyStoreToJson(keys);
      const auto back = KeyStoreFromJson(Parse(Dump(doc)));
      EXPECT_EQ(Dump(KeyStoreToJson(back)), Dump(doc));
      EXPECT_EQ(back.params.p0, keys.params.p0);
      EXPECT_EQ(back.master.x, keys.master.x);
    }
  }
}

TEST(KeyStoreCodecTest, ReloadedPartialKeysVerify) {
  const auto keys = harness::GenerateKeyStore(
      Family::kXcl12, testing::P256Group(), {"alice", "bob", "carol"}, 92);
  const auto back = KeyStoreFromJson(KeyStoreToJson(keys));
  for (const auto& user : back.xcl12()) {
    EXPECT_TRUE(
        xcl12::VerifyPartialKey(back.params, user.id, user.key.partial));
  }
}

TEST(KeyStoreCodecTest, RejectsMalformedDocuments) {
  const auto keys = harness::GenerateKeyStore(
      Family::kXcq11, testing::P256Group(), {"alice", "bob", "carol"}, 93);
  const Json good = KeyStoreToJson(keys);

  Json bad = good;
  bad.erase("master_key");
  EXPECT_THROW(KeyStoreFromJson(bad), DecodeError);

  bad = good;
  bad["schema_version"] = 99;
  EXPECT_THROW(KeyStoreFromJson(bad), DecodeError);

  bad = good;
  bad["users"][0]["public_key"] = "zz";
  EXPECT_THROW(KeyStoreFromJson(bad), DecodeError);

  bad = good;
  std::swap(bad["users"][0], bad["users"][1]);
  EXPECT_THROW(KeyStoreFromJson(bad), DecodeError);

  bad = good;
  bad["users"].erase(2);
  EXPECT_THROW(KeyStoreFromJson(bad), DecodeError);

  bad = good;
  bad["backend"] = "quantum";
  EXPECT_THROW(KeyStoreFromJson(bad), DecodeError);

  bad = good;
  bad["profile"] = "p512";
  EXPECT_THROW(KeyStoreFromJson(bad), DecodeError);

  EXPECT_THROW(Parse("{\"users\": ["), DecodeError);
}

TEST(ConfigCodecTest, RoundTrip) {
  auto config = ScenarioConfig::FromSeed(Protocol::kXcl12Improved,
                                         BackendKind::kTransparent, "small", 94);
  config.attack = attacks::AttackKind::kKciCommon;
  config.identities = {"a", "b", "c"};
  const Json doc = ConfigToJson(config);
  const ScenarioConfig back = ConfigFromJson(doc);
  EXPECT_EQ(Dump(ConfigToJson(back)), Dump(doc));
  EXPECT_EQ(back.party_seeds, config.party_seeds);
  EXPECT_EQ(back.attack, config.attack);

  config.attack.reset();
  config.keys = std::make_shared<harness::KeyStore>(harness::ResolveKeys(config));
  const ScenarioConfig with_keys = ConfigFromJson(ConfigToJson(config));
  ASSERT_TRUE(with_keys.keys);
  EXPECT_FALSE(with_keys.attack);
  EXPECT_EQ(Dump(KeyStoreToJson(*with_keys.keys)),
            Dump(KeyStoreToJson(*config.keys)));
}

TEST(TranscriptCodecTest, RoundTripAndReplay) {
  const auto config = ScenarioConfig::FromSeed(
      Protocol::kXcq11Improved, BackendKind::kTransparent, "p256", 95);
  const auto run = harness::RunHonestSession(config);
  const Json report = SessionReport(config, run);
  const LoadedReport loaded = ReportFromJson(Parse(Dump(report)));
  EXPECT_EQ(loaded.kind, "session");
  EXPECT_EQ(Dump(TranscriptToJson(loaded.transcript)),
            Dump(TranscriptToJson(run.transcript)));
  EXPECT_TRUE(harness::Replay(loaded.config, loaded.transcript).ok);
}

TEST(TranscriptCodecTest, AttackReportReplays) {
  auto config = ScenarioConfig::FromSeed(Protocol::kXcl12,
                                         BackendKind::kTransparent, "p256", 96);
  config.attack = attacks::AttackKind::kKciKgc;
  const auto run = harness::RunAttackScenario(config);
  const Json report = AttackReport(config, run);
  EXPECT_TRUE(report["outcome"]["success"].get<bool>());
  EXPECT_EQ(report["outcome"]["adversary_key_digest"],
            report["outcome"]["victim_key_digest"]);
  const LoadedReport loaded = ReportFromJson(Parse(Dump(report)));
  EXPECT_FALSE(loaded.transcript.parties[kSlotC].honest);
  EXPECT_TRUE(harness::Replay(loaded.config, loaded.transcript).ok);
}

TEST(ReportCodecTest, FieldsAreSortedAndVersioned) {
  const auto config = ScenarioConfig::FromSeed(
      Protocol::kXcq11, BackendKind::kTransparent, "p256", 97);
  const std::string text =
      Dump(SessionReport(config, harness::RunHonestSession(config)));
  EXPECT_LT(text.find("\"agreed\""), text.find("\"config\""));
  EXPECT_LT(text.find("\"adversary_seed\""), text.find("\"attack\""));
  EXPECT_NE(text.find("\"schema_version\": 1"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
}

TEST(ReportCodecTest, OpCountReportHasDeltas) {
  const auto config = ScenarioConfig::FromSeed(
      Protocol::kXcl12, BackendKind::kTransparent, "p256", 98);
  const Json doc = OpCountReport(config, harness::CountOperations(config));
  for (const Json& party : doc["parties"]) {
    EXPECT_EQ(party["delta"]["point_additions"], 4);
    EXPECT_EQ(party["delta"]["pairings"], 0);
    EXPECT_EQ(party["delta"]["scalar_multiplications"], 0);
    EXPECT_EQ(party["delta"]["g2_exponentiations"], 0);
  }
  EXPECT_THROW(ReportFromJson(doc), DecodeError);
}

TEST(MessageCodecTest, RoundTrip) {
  harness::Message m{"s-1", "alice", "xcl12", "announce",
                     {{"r", "00"}, {"upk", "01"}}};
  EXPECT_EQ(MessageFromJson(MessageToJson(m)), m);
  Json bad = MessageToJson(m);
  bad.erase("kind");
  EXPECT_THROW(MessageFromJson(bad), DecodeError);
}

}  // namespace
}  // namespace claka::codec
