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

#pragma once

// KGC setup and the two key-issuance pipelines.
//
//   xcq11: s_U = (x + q_U)^-1 P with q_U = H1(ID_U), user secret x_U,
//          upk_U = x_U Q_U where Q_U = P0 + q_U P, and full private key
//          S_U = (x_U + H2(upk_U))^-1 s_U.
//   xcl12: R_U = r_U P, h = H1(ID_U || R_U), s_U = (r_U + h x)^-1 as a
//          scalar, user secret x_U and upk_U = x_U P.

#include <cstddef>
#include <string>
#include <utility>

#include "claka/pairing.hpp"

namespace claka {

class Rng;

using Identity = std::string;

// Domain tags for every protocol hash. Distinct tags give independent
// functions.
struct HashTags {
  std::string xcq11_h1 = "claka/xcq11/H1";
  std::string xcq11_h2 = "claka/xcq11/H2";
  std::string xcq11_h3 = "claka/xcq11/H3";
  std::string xcq11i_h3 = "claka/xcq11i/H3";
  std::string xcl12_h1 = "claka/xcl12/H1";
  std::string xcl12_h2 = "claka/xcl12/H2";
  std::string signature = "CLSIG";
};

struct SystemParams {
  GroupHandle group;
  G1Point p;
  G1Point p0;
  std::size_t key_bits = 256;
  HashTags tags;

  G2Elem BasePairing() const { return group->BasePairing(); }
};

struct MasterKey {
  Scalar x;
};

// Draws x from Z_q^* and publishes P0 = xP.
std::pair<SystemParams, MasterKey> Setup(GroupHandle group, Rng& rng,
                                         std::size_t key_bits = 256);

namespace xcq11 {

struct PartialKey {
  G1Point s;
};

struct UserKeys {
  Scalar secret;      // x_U
  G1Point upk;        // x_U Q_U
  G1Point full_key;   // S_U
};

// q_U = H1(ID_U).
Scalar IdentityHash(const SystemParams& params, const Identity& id);
// H2(upk_U).
Scalar PublicKeyHash(const SystemParams& params, const G1Point& upk);
// Q_U = P0 + q_U P.
G1Point IdentityPoint(const SystemParams& params, const Identity& id);
// P_U = upk_U + H2(upk_U) Q_U. Satisfies e(S_U, P_U) = e(P, P).
G1Point CombinedPublicPoint(const SystemParams& params, const Identity& id,
                            const G1Point& upk);

// Throws DegenerateScalar if x + q_U = 0 mod q.
PartialKey ExtractPartialKey(const SystemParams& params, const MasterKey& msk,
                             const Identity& id);
// e(s_U, Q_U) == e(P, P).
bool VerifyPartialKey(const SystemParams& params, const Identity& id,
                      const PartialKey& key);
// Resamples x_U until x_U + H2(upk_U) != 0.
UserKeys GenerateUserKeys(const SystemParams& params, const Identity& id,
                          const PartialKey& partial, Rng& rng);
// e(S_U, P_U) == e(P, P) and upk_U = x_U Q_U.
bool VerifyUserKeys(const SystemParams& params, const Identity& id,
                    const UserKeys& keys);

}  // namespace xcq11

namespace xcl12 {

struct PartialKey {
  Scalar s;         // (r_U + h x)^-1
  G1Point r_point;  // R_U
};

struct UserKeys {
  Scalar secret;  // x_U
  G1Point upk;    // x_U P
};

// H1(ID_U || R_U), with both parts length-prefixed.
Scalar IdentityHash(const SystemParams& params, const Identity& id,
                    const G1Point& r_point);
// R_U + H1(ID_U || R_U) P0, i.e. s_U^-1 P.
G1Point IdentityPoint(const SystemParams& params, const Identity& id,
                      const G1Point& r_point);

// Resamples r_U until r_U + h x != 0.
PartialKey ExtractPartialKey(const SystemParams& params, const MasterKey& msk,
                             const Identity& id, Rng& rng);
// s_U (R_U + H1(ID_U || R_U) P0) == P.
bool VerifyPartialKey(const SystemParams& params, const Identity& id,
                      const PartialKey& key);
UserKeys GenerateUserKeys(const SystemParams& params, Rng& rng);

}  // namespace xcl12

}  // namespace claka
