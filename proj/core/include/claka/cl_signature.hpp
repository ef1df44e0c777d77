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

// Schnorr-style proof of knowledge of S_U with e(S_U, P_U) = e(P, P), where
// P_U = upk_U + H2(upk_U) Q_U is the xcq11 combined public point. Reuses the
// xcq11 key pair, so signing needs nothing beyond the full private key.
//
//   sign:   k <- Z_q^*, R = e(kP, P_U), c = H(R || m || P_U), z = kP + c S_U
//   verify: e(z, P_U) == R * e(P, P)^c

#include "claka/bytes.hpp"
#include "claka/keyinfra.hpp"
#include "claka/pairing.hpp"

namespace claka {

class Rng;

struct ClSignature {
  G2Elem commitment;  // R
  G1Point response;   // z

  // lp(R) || lp(z).
  Bytes Serialize() const;
  // Throws DecodeError.
  static ClSignature Deserialize(const SystemParams& params, ByteView bytes);
};

ClSignature ClSign(const SystemParams& params, const Identity& id,
                   const G1Point& upk, const G1Point& full_key,
                   ByteView message, Rng& rng);

// Never throws; malformed or foreign-backend input verifies false.
bool ClVerify(const SystemParams& params, const Identity& id,
              const G1Point& upk, ByteView message, const ClSignature& sig);

}  // namespace claka
