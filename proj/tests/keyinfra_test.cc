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
#include "claka/keyinfra.hpp"
#include "claka/rng.hpp"
#include "test_util.hpp"

namespace claka {
namespace {

using testing::Log;

class KeyInfraTest : public ::testing::TestWithParam<BackendKind> {
 protected:
  void SetUp() override {
    Rng rng(11);
    std::tie(params_, msk_) = claka::Setup(MakeGroup(GetParam()), rng);
  }

  SystemParams params_;
  MasterKey msk_;
};

TEST_P(KeyInfraTest, SetupPublishesMasterPoint) {
  EXPECT_EQ(params_.p0, msk_.x * params_.p);
  EXPECT_FALSE(msk_.x.IsZero());
}

TEST_P(KeyInfraTest, Xcq11PartialKeyVerifies) {
  const auto partial = xcq11::ExtractPartialKey(params_, msk_, "alice");
  EXPECT_TRUE(xcq11::VerifyPartialKey(params_, "alice", partial));
  EXPECT_FALSE(xcq11::VerifyPartialKey(params_, "bob", partial));
}

TEST_P(KeyInfraTest, Xcq11UserKeysVerify) {
  Rng rng(12);
  const auto partial = xcq11::ExtractPartialKey(params_, msk_, "alice");
  const auto keys = xcq11::GenerateUserKeys(params_, "alice", partial, rng);
  EXPECT_TRUE(xcq11::VerifyUserKeys(params_, "alice", keys));
  EXPECT_EQ(Pair(keys.full_key, xcq11::CombinedPublicPoint(params_, "alice",
                                                           keys.upk)),
            params_.BasePairing());
  auto wrong = keys;
  wrong.full_key = wrong.full_key + params_.p;
  EXPECT_FALSE(xcq11::VerifyUserKeys(params_, "alice", wrong));
}

TEST_P(KeyInfraTest, Xcl12PartialKeyVerifies) {
  Rng rng(13);
  const auto partial = xcl12::ExtractPartialKey(params_, msk_, "bob", rng);
  EXPECT_TRUE(xcl12::VerifyPartialKey(params_, "bob", partial));
  EXPECT_FALSE(xcl12::VerifyPartialKey(params_, "carol", partial));
  EXPECT_EQ(partial.s * xcl12::IdentityPoint(params_, "bob", partial.r_point),
            params_.p);
}

TEST_P(KeyInfraTest, Xcl12UserKeys) {
  Rng rng(14);
  const auto user = xcl12::GenerateUserKeys(params_, rng);
  EXPECT_EQ(user.upk, user.secret * params_.p);
}

INSTANTIATE_TEST_SUITE_P(Backends, KeyInfraTest,
                         ::testing::Values(BackendKind::kTransparent,
                                           BackendKind::kCryptographic),
                         [](const auto& info) {
                           return std::string(BackendName(info.param));
                         });

TEST(KeyInfraOracleTest, Xcq11PartialKeyExponent) {
  // s_U = (x + q_U)^-1 P as a residue.
  const auto group = testing::P256Group();
  Rng rng(15);
  const auto [params, msk] = claka::Setup(group, rng);
  const auto partial = xcq11::ExtractPartialKey(params, msk, "alice");
  const Scalar q = xcq11::IdentityHash(params, "alice");
  EXPECT_EQ(Log(partial.s), (msk.x + q).Inverse().value());
}

TEST(KeyInfraOracleTest, Xcl12PartialKeyScalar) {
  // s_U = (r_U + h x)^-1 where R_U = r_U P.
  const auto group = testing::P256Group();
  Rng rng(16);
  const auto [params, msk] = claka::Setup(group, rng);
  const auto partial = xcl12::ExtractPartialKey(params, msk, "bob", rng);
  const Scalar r = group->MakeScalar(Log(partial.r_point));
  const Scalar h = xcl12::IdentityHash(params, "bob", partial.r_point);
  EXPECT_EQ(partial.s, (r + h * msk.x).Inverse());
}

TEST(KeyInfraOracleTest, Xcl12IdentityHashBindsBothParts) {
  const auto group = testing::P256Group();
  Rng rng(17);
  const auto [params, msk] = claka::Setup(group, rng);
  const G1Point r = group->RandomG1(rng);
  EXPECT_NE(xcl12::IdentityHash(params, "bob", r),
            xcl12::IdentityHash(params, "bob", r + params.p));
  EXPECT_NE(xcl12::IdentityHash(params, "bob", r),
            xcl12::IdentityHash(params, "bo", r));
}

TEST(KeyInfraSmallPrimeTest, DegenerateMasterKeyIsRejected) {
  // Engineer x = -q_U so that x + q_U = 0 mod q.
  const auto group = testing::SmallGroup();
  Rng rng(18);
  auto [params, msk] = claka::Setup(group, rng);
  msk.x = -xcq11::IdentityHash(params, "alice");
  params.p0 = msk.x * params.p;
  EXPECT_THROW(xcq11::ExtractPartialKey(params, msk, "alice"),
               DegenerateScalar);
  EXPECT_NO_THROW(xcq11::ExtractPartialKey(params, msk, "bob"));
}

TEST(KeyInfraSmallPrimeTest, UserKeyResamplingAvoidsZeroDenominator) {
  const auto group = testing::SmallGroup();
  Rng rng(19);
  const auto [params, msk] = claka::Setup(group, rng);
  const auto partial = xcq11::ExtractPartialKey(params, msk, "alice");
  for (int i = 0; i < 2000; ++i) {
    const auto keys = xcq11::GenerateUserKeys(params, "alice", partial, rng);
    ASSERT_FALSE(
        (keys.secret + xcq11::PublicKeyHash(params, keys.upk)).IsZero());
    ASSERT_TRUE(xcq11::VerifyUserKeys(params, "alice", keys));
  }
}

TEST(KeyInfraSmallPrimeTest, RandomForgeriesPassAtRoughlyOneInQ) {
  // With q = 1009 a random s_U verifies with probability 1/q.
  const auto group = testing::SmallGroup();
  Rng rng(20);
  const auto [params, msk] = claka::Setup(group, rng);
  int accepts = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    if (xcq11::VerifyPartialKey(params, "alice",
                                xcq11::PartialKey{group->RandomG1(rng)})) {
      ++accepts;
    }
  }
  // Expected ~20; Poisson tail bound keeps this comfortably deterministic.
  EXPECT_GT(accepts, 2);
  EXPECT_LT(accepts, 60);
}

}  // namespace
}  // namespace claka
