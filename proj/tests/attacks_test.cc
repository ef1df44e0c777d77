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

#include "claka/attacks.hpp"
#include "claka/errors.hpp"
#include "claka/harness.hpp"
#include "claka/rng.hpp"
#include "test_util.hpp"

namespace claka {
namespace {

using attacks::AttackKind;
using harness::Protocol;
using testing::Log;

// ---- xcq11 step-level fixtures ---------------------------------------------

class Xcq11AttackTest : public ::testing::Test {
 protected:
  void SetUp() override {
    store_ = harness::GenerateKeyStore(harness::Family::kXcq11,
                                       testing::P256Group(),
                                       {"alice", "bob", "carol"}, 51);
    for (std::size_t i = 0; i < kParties; ++i) {
      roster_[i] = {store_.xcq11()[i].id, store_.xcq11()[i].keys.upk};
    }
  }

  const SystemParams& params() const { return store_.params; }
  const G1Point& full_key(std::size_t slot) const {
    return store_.xcq11()[slot].keys.full_key;
  }

  void Record(const xcq11::Outgoing& out) {
    view_.parties[out.sender] = roster_[out.sender];
    for (std::size_t to = 0; to < kParties; ++to) {
      view_.t[out.sender][to] = out.t[to];
    }
  }

  // Honest round for the given slots.
  std::array<xcq11::Outgoing, kParties> Honest(std::uint64_t seed,
                                               std::size_t slots = 3) {
    std::array<xcq11::Outgoing, kParties> out;
    for (std::size_t slot = 0; slot < slots; ++slot) {
      Rng rng(seed + slot);
      out[slot] = xcq11::Round1(params(), roster_, slot, rng);
      Record(out[slot]);
    }
    return out;
  }

  harness::KeyStore store_;
  xcq11::Roster roster_;
  xcq11::TranscriptView view_;
};

TEST_F(Xcq11AttackTest, ForwardSecrecyRecoversSumExponent) {
  const auto out = Honest(10);
  attacks::Xcq11FullKeys grant;
  grant.full_keys[kSlotA] = full_key(kSlotA);
  grant.full_keys[kSlotB] = full_key(kSlotB);
  const auto result = attacks::ForwardSecrecyXcq11(params(), grant, view_);
  ASSERT_TRUE(result.key);
  const Scalar sum = out[0].ephemeral + out[1].ephemeral + out[2].ephemeral;
  EXPECT_EQ(Log(result.key->shared), sum.value());
  const SessionKey honest = xcq11::Derive(params(), kSlotA, full_key(kSlotA),
                                          out[kSlotA].ephemeral, view_);
  EXPECT_EQ(result.key->key, honest.key);
}

TEST_F(Xcq11AttackTest, ForwardSecrecyNeedsBothKeys) {
  Honest(11);
  attacks::Xcq11FullKeys grant;
  grant.full_keys[kSlotA] = full_key(kSlotA);
  EXPECT_THROW(attacks::ForwardSecrecyXcq11(params(), grant, view_),
               ScenarioError);
}

TEST_F(Xcq11AttackTest, KciAgreesWithVictims) {
  auto out = Honest(20, 2);
  attacks::Xcq11FullKeys grant;
  grant.full_keys[kSlotA] = full_key(kSlotA);
  grant.full_keys[kSlotB] = full_key(kSlotB);
  attacks::KciXcq11Adversary adversary(params(), grant, roster_, Rng(21));
  out[kSlotC] = adversary.Emit();
  Record(out[kSlotC]);
  const auto result = adversary.Conclude(view_);
  ASSERT_TRUE(result.key);
  const Scalar sum = out[0].ephemeral + out[1].ephemeral + out[2].ephemeral;
  EXPECT_EQ(Log(result.key->shared), sum.value());
  for (std::size_t slot : {kSlotA, kSlotB}) {
    EXPECT_EQ(xcq11::Derive(params(), slot, full_key(slot),
                            out[slot].ephemeral, view_)
                  .key,
              result.key->key);
  }
}

TEST_F(Xcq11AttackTest, SecretsRecoverEphemeralPoints) {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto out = Honest(100 + 3 * trial);
    attacks::Xcq11SecretValues grant;
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      grant.secrets[slot] = store_.xcq11()[slot].keys.secret;
    }
    const auto points =
        attacks::RecoverEphemeralPoints(params(), grant, view_);
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      EXPECT_EQ(points[slot], out[slot].ephemeral * params().p);
    }
    const auto result = attacks::SecretsXcq11(params(), grant, view_);
    const SessionKey honest = xcq11::Derive(
        params(), kSlotB, full_key(kSlotB), out[kSlotB].ephemeral, view_);
    EXPECT_EQ(result.key->key, honest.key);
  }
}

TEST(SecretsDegenerateTest, CollidingIdentityHashesRaise) {
  // user0035 and user0037 share H1 = 836 mod 1009 (hash_vectors.py).
  const auto store = harness::GenerateKeyStore(
      harness::Family::kXcq11, testing::SmallGroup(),
      {"alice", "user0035", "user0037"}, 52);
  const SystemParams& params = store.params;
  ASSERT_EQ(xcq11::IdentityHash(params, "user0035"),
            xcq11::IdentityHash(params, "user0037"));
  ASSERT_EQ(store.xcq11()[kSlotB].id, "user0035");

  harness::ScenarioConfig config = harness::ScenarioConfig::FromSeed(
      Protocol::kXcq11, BackendKind::kTransparent, "small", 53);
  config.keys = std::make_shared<harness::KeyStore>(store);
  config.identities = store.identities();
  config.attack = AttackKind::kSecrets;
  try {
    harness::RunAttackScenario(config);
    FAIL() << "expected DegenerateDenominator";
  } catch (const DegenerateDenominator& e) {
    EXPECT_NE(std::string(e.what()).find("q_B == q_C"), std::string::npos);
  }
}

// ---- xcl12 step-level fixtures ---------------------------------------------

class Xcl12AttackTest : public ::testing::TestWithParam<bool> {
 protected:
  void SetUp() override {
    store_ = harness::GenerateKeyStore(harness::Family::kXcl12,
                                       testing::P256Group(),
                                       {"alice", "bob", "carol"}, 61);
  }

  const SystemParams& params() const { return store_.params; }
  const xcl12::FullKey& key(std::size_t slot) const {
    return store_.xcl12()[slot].key;
  }
  xcl12::Announcement Public(std::size_t slot) const {
    return xcl12::Announce(store_.xcl12()[slot].id, key(slot));
  }

  // Honest A and B against `adversary` in slot C. Returns victim flows.
  template <typename Adversary>
  std::array<xcl12::Flow, 2> Play(Adversary& adversary, std::uint64_t seed) {
    view_.parties[kSlotA] = Public(kSlotA);
    view_.parties[kSlotB] = Public(kSlotB);
    view_.parties[kSlotC] = adversary.Announce();
    std::array<xcl12::Flow, 2> flows;
    for (std::size_t slot : {kSlotA, kSlotB}) {
      Rng rng(seed + slot);
      xcl12::OpCounter ops;
      flows[slot] =
          xcl12::Round(params(), slot, key(slot), view_.parties, rng, ops);
    }
    const xcl12::Flow c = adversary.Round(view_.parties);
    for (std::size_t to = 0; to < kParties; ++to) {
      view_.t[kSlotA][to] = flows[kSlotA].t[to];
      view_.t[kSlotB][to] = flows[kSlotB].t[to];
      view_.t[kSlotC][to] = c.t[to];
    }
    c_ephemeral_ = c.ephemeral;
    return flows;
  }

  SessionKey Victim(std::size_t slot, const xcl12::Flow& flow,
                    xcl12::SharedValues* shared = nullptr) {
    xcl12::OpCounter ops;
    auto derived = GetParam()
                       ? xcl12::ImprovedDerive(params(), slot, key(slot),
                                               flow, view_, ops)
                       : xcl12::Derive(params(), slot, key(slot), flow, view_,
                                       ops);
    if (shared) *shared = derived.first;
    return derived.second;
  }

  const Bytes& Intermediate(const attacks::AdversaryResult& r,
                            const std::string& name) {
    for (const auto& [step, value] : r.intermediates) {
      if (step == name) return value;
    }
    static const Bytes kEmpty;
    ADD_FAILURE() << "no intermediate " << name;
    return kEmpty;
  }

  harness::KeyStore store_;
  xcl12::TranscriptView view_;
  Scalar c_ephemeral_;
};

TEST_P(Xcl12AttackTest, MaliciousKgc) {
  const bool improved = GetParam();
  attacks::Xcl12KgcKnowledge grant{
      store_.master,
      {key(kSlotA).partial, key(kSlotB).partial, key(kSlotC).partial},
      key(kSlotA)};
  attacks::KciKgcXcl12Adversary adversary(params(), grant, Public(kSlotC),
                                          improved, Rng(62));
  const auto flows = Play(adversary, 63);
  const auto result = adversary.Conclude(view_);
  ASSERT_TRUE(result.key);
  xcl12::SharedValues shared;
  const SessionKey a = Victim(kSlotA, flows[kSlotA], &shared);
  const SessionKey b = Victim(kSlotB, flows[kSlotB]);
  EXPECT_EQ(a.key, b.key);
  EXPECT_EQ(result.key->key == a.key, !improved);

  // k1 and k2 are always reachable for the KGC; only k3 differs.
  const auto group = params().group;
  EXPECT_EQ(group->DecodeG1(Intermediate(result, "k1")), shared.k1);
  EXPECT_EQ(group->DecodeG2(Intermediate(result, "k2")), shared.k2);
  EXPECT_EQ(group->DecodeG2(Intermediate(result, "k3")) == shared.k3,
            !improved);
  if (!improved) {
    const Scalar abc = flows[kSlotA].ephemeral * flows[kSlotB].ephemeral *
                       c_ephemeral_;
    EXPECT_EQ(Log(group->DecodeG2(Intermediate(result, "k2"))), abc.value());
  }
}

TEST_P(Xcl12AttackTest, CommonAdversary) {
  const bool improved = GetParam();
  attacks::Xcl12CommonKnowledge grant{key(kSlotA), key(kSlotB)};
  attacks::KciCommonXcl12Adversary adversary(params(), grant, Public(kSlotC),
                                             improved, Rng(64));
  const auto flows = Play(adversary, 65);
  const auto result = adversary.Conclude(view_);
  ASSERT_TRUE(result.key);
  xcl12::SharedValues shared;
  const SessionKey a = Victim(kSlotA, flows[kSlotA], &shared);
  EXPECT_EQ(result.key->key == a.key, !improved);

  const auto group = params().group;
  const Scalar sum =
      flows[kSlotA].ephemeral + flows[kSlotB].ephemeral + c_ephemeral_;
  EXPECT_EQ(Log(group->DecodeG1(Intermediate(result, "k1"))), sum.value());
  EXPECT_EQ(group->DecodeG2(Intermediate(result, "k2")) == shared.k2,
            !improved);
  EXPECT_EQ(group->DecodeG2(Intermediate(result, "k3")) == shared.k3,
            !improved);
}

INSTANTIATE_TEST_SUITE_P(Variants, Xcl12AttackTest, ::testing::Bool(),
                         [](const auto& info) {
                           return info.param ? "improved" : "original";
                         });

// ---- knowledge audit -------------------------------------------------------

TEST(KnowledgeAuditTest, KgcHoldsNoVictimPeerSecrets) {
  const auto store = harness::GenerateKeyStore(
      harness::Family::kXcl12, testing::P256Group(),
      {"alice", "bob", "carol"}, 71);
  const auto& u = store.xcl12();
  const attacks::Xcl12KgcKnowledge grant{
      store.master,
      {u[0].key.partial, u[1].key.partial, u[2].key.partial},
      u[0].key};
  const auto record = grant.Record();
  EXPECT_TRUE(record.Has("master_key"));
  EXPECT_TRUE(record.Has("partial_key:C"));
  EXPECT_TRUE(record.Has("secret_value:A"));
  EXPECT_FALSE(record.Has("secret_value:B"));
  EXPECT_FALSE(record.Has("secret_value:C"));
  EXPECT_TRUE(record.live_session);
}

TEST(KnowledgeAuditTest, CommonAdversaryHoldsOnlyVictimKeys) {
  const auto store = harness::GenerateKeyStore(
      harness::Family::kXcl12, testing::P256Group(),
      {"alice", "bob", "carol"}, 72);
  const attacks::Xcl12CommonKnowledge grant{store.xcl12()[0].key,
                                            store.xcl12()[1].key};
  const auto record = grant.Record();
  EXPECT_FALSE(record.Has("master_key"));
  EXPECT_FALSE(record.Has("partial_key:C"));
  EXPECT_FALSE(record.Has("secret_value:C"));
  EXPECT_TRUE(record.Has("full_key:B"));
}

TEST(KnowledgeAuditTest, HarnessGrantsMatchAttackDefinitions) {
  struct Case {
    Protocol protocol;
    AttackKind attack;
    std::vector<std::string> present;
    std::vector<std::string> absent;
  };
  const std::vector<Case> cases = {
      {Protocol::kXcq11, AttackKind::kForwardSecrecy,
       {"full_key:A", "full_key:B"}, {"full_key:C", "master_key"}},
      {Protocol::kXcq11Improved, AttackKind::kForwardSecrecy,
       {"full_key:A", "full_key:B", "full_key:C"}, {"master_key"}},
      {Protocol::kXcq11, AttackKind::kKci,
       {"full_key:A", "full_key:B"}, {"full_key:C"}},
      {Protocol::kXcq11, AttackKind::kSecrets,
       {"secret_value:A", "secret_value:B", "secret_value:C"},
       {"full_key:A", "master_key"}},
      {Protocol::kXcl12, AttackKind::kKciKgc,
       {"master_key", "partial_key:B", "full_key:A"},
       {"secret_value:B", "secret_value:C"}},
      {Protocol::kXcl12Improved, AttackKind::kKciCommon,
       {"full_key:A", "full_key:B"},
       {"master_key", "partial_key:C", "secret_value:C"}},
  };
  for (const Case& c : cases) {
    auto config = harness::ScenarioConfig::FromSeed(
        c.protocol, BackendKind::kTransparent, "p256", 73);
    config.attack = c.attack;
    const auto run = harness::RunAttackScenario(config);
    for (const auto& item : c.present) {
      EXPECT_TRUE(run.outcome.knowledge.Has(item))
          << attacks::AttackName(c.attack) << " lacks " << item;
    }
    for (const auto& item : c.absent) {
      EXPECT_FALSE(run.outcome.knowledge.Has(item))
          << attacks::AttackName(c.attack) << " holds " << item;
    }
    EXPECT_EQ(run.outcome.knowledge.live_session,
              attacks::IsLive(c.attack));
  }
}

// ---- names -----------------------------------------------------------------

TEST(AttackNamesTest, RoundTrip) {
  for (auto kind : {AttackKind::kForwardSecrecy, AttackKind::kKci,
                    AttackKind::kSecrets, AttackKind::kKciKgc,
                    AttackKind::kKciCommon}) {
    EXPECT_EQ(attacks::ParseAttack(attacks::AttackName(kind)), kind);
  }
  EXPECT_FALSE(attacks::ParseAttack("mitm").has_value());
}

}  // namespace
}  // namespace claka
