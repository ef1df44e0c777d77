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

#include "claka/errors.hpp"
#include "claka/harness.hpp"
#include "claka/rng.hpp"
#include "claka/xcl12.hpp"
#include "test_util.hpp"

namespace claka {
namespace {

using testing::Log;

struct Session {
  std::array<xcl12::Flow, kParties> flows;
  xcl12::TranscriptView view;
  std::array<xcl12::SharedValues, kParties> shared;
  std::array<SessionKey, kParties> keys;
  std::array<xcl12::OpCounter, kParties> ops;
};

Session RunSession(const harness::KeyStore& store, bool improved,
                   std::uint64_t seed) {
  const SystemParams& params = store.params;
  Session s;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const auto& user = store.xcl12()[slot];
    s.view.parties[slot] = xcl12::Announce(user.id, user.key);
  }
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    Rng rng(seed + slot);
    s.flows[slot] = xcl12::Round(params, slot, store.xcl12()[slot].key,
                                 s.view.parties, rng, s.ops[slot]);
  }
  for (std::size_t from = 0; from < kParties; ++from) {
    for (std::size_t to = 0; to < kParties; ++to) {
      s.view.t[from][to] = s.flows[from].t[to];
    }
  }
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    auto derive = improved ? xcl12::ImprovedDerive : xcl12::Derive;
    auto [shared, key] = derive(params, slot, store.xcl12()[slot].key,
                                s.flows[slot], s.view, s.ops[slot]);
    s.shared[slot] = std::move(shared);
    s.keys[slot] = std::move(key);
  }
  return s;
}

class Xcl12Test : public ::testing::TestWithParam<BackendKind> {
 protected:
  void SetUp() override {
    store_ = harness::GenerateKeyStore(harness::Family::kXcl12,
                                       MakeGroup(GetParam()),
                                       {"alice", "bob", "carol"}, 41);
  }
  harness::KeyStore store_;
};

TEST_P(Xcl12Test, OriginalAgreement) {
  const Session s = RunSession(store_, false, 100);
  EXPECT_EQ(s.keys[0].key, s.keys[1].key);
  EXPECT_EQ(s.keys[1].key, s.keys[2].key);
  EXPECT_EQ(s.shared[0].k1, s.shared[2].k1);
  EXPECT_EQ(s.shared[0].k3, s.shared[1].k3);
}

TEST_P(Xcl12Test, ImprovedAgreement) {
  const Session s = RunSession(store_, true, 200);
  EXPECT_EQ(s.keys[0].key, s.keys[1].key);
  EXPECT_EQ(s.keys[1].key, s.keys[2].key);
}

TEST_P(Xcl12Test, VariantsDifferOnSameTranscript) {
  const Session a = RunSession(store_, false, 300);
  const Session b = RunSession(store_, true, 300);
  EXPECT_EQ(a.view.t, b.view.t);
  EXPECT_EQ(a.shared[0].k1, b.shared[0].k1);
  EXPECT_NE(a.keys[0].key, b.keys[0].key);
}

TEST_P(Xcl12Test, OperationCountsAreFixed) {
  // Per party: Round does 2 (hP0) + 2 (uY) multiplications and 2 additions;
  // Derive adds 3 multiplications (2 unmaskings, uP) and 2 additions for k1.
  const Session a = RunSession(store_, false, 400);
  const Session b = RunSession(store_, true, 400);
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    EXPECT_EQ(a.ops[slot].point_additions, 4u);
    EXPECT_EQ(a.ops[slot].scalar_multiplications, 7u);
    EXPECT_EQ(a.ops[slot].pairings, 2u);
    EXPECT_EQ(a.ops[slot].g2_exponentiations, 2u);
    EXPECT_EQ(b.ops[slot].point_additions, 8u);
    EXPECT_EQ(b.ops[slot].scalar_multiplications, 7u);
    EXPECT_EQ(b.ops[slot].pairings, 2u);
    EXPECT_EQ(b.ops[slot].g2_exponentiations, 2u);
  }
}

TEST_P(Xcl12Test, RoundNeedsPeerAnnouncements) {
  std::array<std::optional<xcl12::Announcement>, kParties> parties;
  const auto& alice = store_.xcl12()[kSlotA];
  parties[kSlotA] = xcl12::Announce(alice.id, alice.key);
  Rng rng(1);
  xcl12::OpCounter ops;
  try {
    xcl12::Round(store_.params, kSlotA, alice.key, parties, rng, ops);
    FAIL() << "expected MissingTranscriptField";
  } catch (const MissingTranscriptField& e) {
    EXPECT_EQ(e.field(), "announcement B");
  }
}

TEST_P(Xcl12Test, RoundRejectsForeignOwnAnnouncement) {
  std::array<std::optional<xcl12::Announcement>, kParties> parties;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const auto& u = store_.xcl12()[slot];
    parties[slot] = xcl12::Announce(u.id, u.key);
  }
  Rng rng(2);
  xcl12::OpCounter ops;
  EXPECT_THROW(xcl12::Round(store_.params, kSlotA, store_.xcl12()[kSlotB].key,
                            parties, rng, ops),
               ScenarioError);
}

TEST_P(Xcl12Test, DeriveNeedsAllFlows) {
  Session s = RunSession(store_, false, 500);
  s.view.t[kSlotC][kSlotB].reset();
  xcl12::OpCounter ops;
  EXPECT_THROW(xcl12::Derive(store_.params, kSlotA, store_.xcl12()[kSlotA].key,
                             s.flows[kSlotA], s.view, ops),
               MissingTranscriptField);
}

INSTANTIATE_TEST_SUITE_P(Backends, Xcl12Test,
                         ::testing::Values(BackendKind::kTransparent,
                                           BackendKind::kCryptographic),
                         [](const auto& info) {
                           return std::string(BackendName(info.param));
                         });

class Xcl12OracleTest : public ::testing::Test {
 protected:
  void SetUp() override {
    store_ = harness::GenerateKeyStore(harness::Family::kXcl12,
                                       testing::P256Group(),
                                       {"alice", "bob", "carol"}, 42);
  }
  harness::KeyStore store_;
};

TEST_F(Xcl12OracleTest, OriginalExponents) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Session s = RunSession(store_, false, 1000 + 10 * seed);
    Scalar sum = s.flows[0].ephemeral + s.flows[1].ephemeral +
                 s.flows[2].ephemeral;
    Scalar prod = s.flows[0].ephemeral * s.flows[1].ephemeral *
                  s.flows[2].ephemeral;
    Scalar secrets = store_.xcl12()[0].key.user.secret *
                     store_.xcl12()[1].key.user.secret *
                     store_.xcl12()[2].key.user.secret;
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      EXPECT_EQ(Log(s.shared[slot].k1), sum.value());
      EXPECT_EQ(Log(s.shared[slot].k2), prod.value());
      EXPECT_EQ(Log(s.shared[slot].k3), secrets.value());
    }
  }
}

TEST_F(Xcl12OracleTest, ImprovedExponents) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Session s = RunSession(store_, true, 2000 + 10 * seed);
    const auto group = store_.params.group;
    Scalar sum = group->MakeScalar(0);
    Scalar k2 = group->MakeScalar(1);
    Scalar k3 = group->MakeScalar(1);
    for (std::size_t i = 0; i < kParties; ++i) {
      const auto& key = store_.xcl12()[i].key;
      const Scalar& u = s.flows[i].ephemeral;
      sum = sum + u;
      k2 = k2 * (u + key.partial.s.Inverse());
      k3 = k3 * (u + key.user.secret);
    }
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      EXPECT_EQ(Log(s.shared[slot].k1), sum.value());
      EXPECT_EQ(Log(s.shared[slot].k2), k2.value());
      EXPECT_EQ(Log(s.shared[slot].k3), k3.value());
    }
  }
}

TEST_F(Xcl12OracleTest, FlowsUnmaskToEphemeralPoints) {
  const Session s = RunSession(store_, false, 3000);
  for (std::size_t from = 0; from < kParties; ++from) {
    for (std::size_t to = 0; to < kParties; ++to) {
      if (from == to) continue;
      const Scalar& s_to = store_.xcl12()[to].key.partial.s;
      EXPECT_EQ(s_to * *s.view.t[from][to],
                s.flows[from].ephemeral * store_.params.p);
    }
  }
}

}  // namespace
}  // namespace claka
