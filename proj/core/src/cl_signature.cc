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

#include "claka/cl_signature.hpp"

#include "claka/errors.hpp"
#include "claka/rng.hpp"

namespace claka {

namespace {

Scalar Challenge(const SystemParams& params, const G2Elem& commitment,
                 ByteView message, const G1Point& public_point) {
  const Bytes parts[] = {commitment.Serialize(),
                         Bytes(message.begin(), message.end()),
                         public_point.Serialize()};
  return params.group->HashToScalar(params.tags.signature, EncodeParts(parts));
}

// Splits lp(a) || lp(b) into exactly two parts.
std::pair<ByteView, ByteView> SplitTwo(ByteView bytes) {
  ByteView parts[2];
  std::size_t pos = 0;
  for (auto& part : parts) {
    if (bytes.size() - pos < 4) throw DecodeError("truncated signature");
    std::size_t len = (std::size_t{bytes[pos]} << 24) |
                      (std::size_t{bytes[pos + 1]} << 16) |
                      (std::size_t{bytes[pos + 2]} << 8) | bytes[pos + 3];
    pos += 4;
    if (bytes.size() - pos < len) throw DecodeError("truncated signature");
    part = bytes.subspan(pos, len);
    pos += len;
  }
  if (pos != bytes.size()) throw DecodeError("trailing bytes in signature");
  return {parts[0], parts[1]};
}

}  // namespace

Bytes ClSignature::Serialize() const {
  const Bytes parts[] = {commitment.Serialize(), response.Serialize()};
  return EncodeParts(parts);
}

ClSignature ClSignature::Deserialize(const SystemParams& params,
                                     ByteView bytes) {
  auto [r, z] = SplitTwo(bytes);
  return ClSignature{params.group->DecodeG2(r), params.group->DecodeG1(z)};
}

ClSignature ClSign(const SystemParams& params, const Identity& id,
                   const G1Point& upk, const G1Point& full_key,
                   ByteView message, Rng& rng) {
  const G1Point public_point = xcq11::CombinedPublicPoint(params, id, upk);
  const Scalar k = params.group->RandomScalar(rng);
  const G1Point kp = k * params.p;
  G2Elem commitment = Pair(kp, public_point);
  const Scalar c = Challenge(params, commitment, message, public_point);
  return ClSignature{std::move(commitment), kp + c * full_key};
}

bool ClVerify(const SystemParams& params, const Identity& id,
              const G1Point& upk, ByteView message, const ClSignature& sig) {
  try {
    const G1Point public_point = xcq11::CombinedPublicPoint(params, id, upk);
    const Scalar c = Challenge(params, sig.commitment, message, public_point);
    return Pair(sig.response, public_point) ==
           sig.commitment * params.BasePairing().Pow(c);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace claka
