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

#include "claka/keyinfra.hpp"

#include "claka/errors.hpp"
#include "claka/rng.hpp"

namespace claka {

std::pair<SystemParams, MasterKey> Setup(GroupHandle group, Rng& rng,
                                         std::size_t key_bits) {
  MasterKey msk{group->RandomScalar(rng)};
  SystemParams params;
  params.p = group->Generator();
  params.p0 = msk.x * params.p;
  params.key_bits = key_bits;
  params.group = std::move(group);
  return {std::move(params), std::move(msk)};
}

namespace xcq11 {

Scalar IdentityHash(const SystemParams& params, const Identity& id) {
  return params.group->HashToScalar(params.tags.xcq11_h1, ToBytes(id));
}

Scalar PublicKeyHash(const SystemParams& params, const G1Point& upk) {
  return params.group->HashToScalar(params.tags.xcq11_h2, upk.Serialize());
}

G1Point IdentityPoint(const SystemParams& params, const Identity& id) {
  return params.p0 + IdentityHash(params, id) * params.p;
}

G1Point CombinedPublicPoint(const SystemParams& params, const Identity& id,
                            const G1Point& upk) {
  return upk + PublicKeyHash(params, upk) * IdentityPoint(params, id);
}

PartialKey ExtractPartialKey(const SystemParams& params, const MasterKey& msk,
                             const Identity& id) {
  Scalar denom = msk.x + IdentityHash(params, id);
  if (denom.IsZero()) {
    throw DegenerateScalar("x + H1(" + id + ") = 0 mod q");
  }
  return PartialKey{denom.Inverse() * params.p};
}

bool VerifyPartialKey(const SystemParams& params, const Identity& id,
                      const PartialKey& key) {
  try {
    return Pair(key.s, IdentityPoint(params, id)) == params.BasePairing();
  } catch (const BackendMismatch&) {
    return false;
  }
}

UserKeys GenerateUserKeys(const SystemParams& params, const Identity& id,
                          const PartialKey& partial, Rng& rng) {
  const G1Point q_u = IdentityPoint(params, id);
  for (;;) {
    Scalar x_u = params.group->RandomScalar(rng);
    G1Point upk = x_u * q_u;
    Scalar denom = x_u + PublicKeyHash(params, upk);
    if (denom.IsZero()) continue;
    G1Point full = denom.Inverse() * partial.s;
    return UserKeys{std::move(x_u), std::move(upk), std::move(full)};
  }
}

bool VerifyUserKeys(const SystemParams& params, const Identity& id,
                    const UserKeys& keys) {
  try {
    if (keys.secret * IdentityPoint(params, id) != keys.upk) return false;
    return Pair(keys.full_key, CombinedPublicPoint(params, id, keys.upk)) ==
           params.BasePairing();
  } catch (const BackendMismatch&) {
    return false;
  }
}

}  // namespace xcq11

namespace xcl12 {

Scalar IdentityHash(const SystemParams& params, const Identity& id,
                    const G1Point& r_point) {
  const Bytes parts[] = {ToBytes(id), r_point.Serialize()};
  return params.group->HashToScalar(params.tags.xcl12_h1, EncodeParts(parts));
}

G1Point IdentityPoint(const SystemParams& params, const Identity& id,
                      const G1Point& r_point) {
  return r_point + IdentityHash(params, id, r_point) * params.p0;
}

PartialKey ExtractPartialKey(const SystemParams& params, const MasterKey& msk,
                             const Identity& id, Rng& rng) {
  for (;;) {
    Scalar r_u = params.group->RandomScalar(rng);
    G1Point r_point = r_u * params.p;
    Scalar denom = r_u + IdentityHash(params, id, r_point) * msk.x;
    if (denom.IsZero()) continue;
    return PartialKey{denom.Inverse(), std::move(r_point)};
  }
}

bool VerifyPartialKey(const SystemParams& params, const Identity& id,
                      const PartialKey& key) {
  try {
    return key.s * IdentityPoint(params, id, key.r_point) == params.p;
  } catch (const BackendMismatch&) {
    return false;
  }
}

UserKeys GenerateUserKeys(const SystemParams& params, Rng& rng) {
  Scalar x_u = params.group->RandomScalar(rng);
  G1Point upk = x_u * params.p;
  return UserKeys{std::move(x_u), std::move(upk)};
}

}  // namespace xcl12

}  // namespace claka
