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

#include "claka/cl_signature.hpp"
#include "claka/errors.hpp"
#include "claka/keyinfra.hpp"
#include "claka/rng.hpp"
#include "test_util.hpp"

namespace claka {
namespace {

struct Signer {
  Identity id;
  xcq11::UserKeys keys;
};

class ClSignatureTest : public ::testing::TestWithParam<BackendKind> {
 protected:
  void SetUp() override {
    Rng rng(21);
    std::tie(params_, msk_) = claka::Setup(MakeGroup(GetParam()), rng);
    for (const char* id : {"alice", "bob"}) {
      const auto partial = xcq11::ExtractPartialKey(params_, msk_, id);
      signers_.push_back(
          {id, xcq11::GenerateUserKeys(params_, id, partial, rng)});
    }
  }

  ClSignature Sign(const Signer& s, const Bytes& m, Rng& rng) const {
    return ClSign(params_, s.id, s.keys.upk, s.keys.full_key, m, rng);
  }

  SystemParams params_;
  MasterKey msk_;
  std::vector<Signer> signers_;
};

TEST_P(ClSignatureTest, HonestSignatureVerifies) {
  Rng rng(22);
  const Signer& alice = signers_[0];
  const Bytes m = ToBytes("hello");
  const ClSignature sig = Sign(alice, m, rng);
  EXPECT_TRUE(ClVerify(params_, alice.id, alice.keys.upk, m, sig));
}

TEST_P(ClSignatureTest, VerificationBindsEveryInput) {
  Rng rng(23);
  const Signer& alice = signers_[0];
  const Signer& bob = signers_[1];
  const Bytes m = ToBytes("hello");
  const ClSignature sig = Sign(alice, m, rng);
  EXPECT_FALSE(ClVerify(params_, alice.id, alice.keys.upk, ToBytes("hellO"),
                        sig));
  EXPECT_FALSE(ClVerify(params_, bob.id, alice.keys.upk, m, sig));
  EXPECT_FALSE(ClVerify(params_, alice.id, bob.keys.upk, m, sig));
  ClSignature bent = sig;
  bent.response = bent.response + params_.p;
  EXPECT_FALSE(ClVerify(params_, alice.id, alice.keys.upk, m, bent));
  bent = sig;
  bent.commitment = bent.commitment * params_.BasePairing();
  EXPECT_FALSE(ClVerify(params_, alice.id, alice.keys.upk, m, bent));
}

TEST_P(ClSignatureTest, SerializationRoundTrip) {
  Rng rng(24);
  const Signer& alice = signers_[0];
  const ClSignature sig = Sign(alice, ToBytes("m"), rng);
  const ClSignature back = ClSignature::Deserialize(params_, sig.Serialize());
  EXPECT_EQ(back.commitment, sig.commitment);
  EXPECT_EQ(back.response, sig.response);
  Bytes truncated = sig.Serialize();
  truncated.pop_back();
  EXPECT_THROW(ClSignature::Deserialize(params_, truncated), DecodeError);
}

TEST_P(ClSignatureTest, WrongKeyIsRejected) {
  // Signing under alice's identity with bob's full key.
  Rng rng(25);
  const Signer& alice = signers_[0];
  const Signer& bob = signers_[1];
  const Bytes m = ToBytes("payload");
  const ClSignature sig =
      ClSign(params_, alice.id, alice.keys.upk, bob.keys.full_key, m, rng);
  EXPECT_FALSE(ClVerify(params_, alice.id, alice.keys.upk, m, sig));
}

TEST_P(ClSignatureTest, ForeignBackendVerifiesFalse) {
  Rng rng(26);
  const Signer& alice = signers_[0];
  const Bytes m = ToBytes("m");
  ClSignature sig = Sign(alice, m, rng);
  const auto other = GetParam() == BackendKind::kTransparent
                         ? testing::CryptoGroup()
                         : testing::P256Group();
  sig.response = other->Generator();
  EXPECT_FALSE(ClVerify(params_, alice.id, alice.keys.upk, m, sig));
}

INSTANTIATE_TEST_SUITE_P(Backends, ClSignatureTest,
                         ::testing::Values(BackendKind::kTransparent,
                                           BackendKind::kCryptographic),
                         [](const auto& info) {
                           return std::string(BackendName(info.param));
                         });

}  // namespace
}  // namespace claka
