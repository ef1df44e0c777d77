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

// Original xcl12 key agreement and its repaired shared values.
//
// Every party U announces {ID_U, upk_U, R_U} and then sends
// T[U->V] = u Y_V to both peers, where Y_V = R_V + H1(ID_V || R_V) P0.
// Since s_V Y_V = P, the recipient unmasks s_V T[U->V] = uP.
//
// Party A (peers B, C), original:
//   k1 = aP + s_A T_BA + s_A T_CA              = (a+b+c)P
//   k2 = e(s_A T_BA, s_A T_CA)^a               = e(P,P)^(abc)
//   k3 = e(upk_B, upk_C)^(x_A)                 = e(P,P)^(x_A x_B x_C)
// Repaired:
//   k2 = e(s_A T_BA + Y_B, s_A T_CA + Y_C)^(a + s_A^-1)
//   k3 = e(s_A T_BA + upk_B, s_A T_CA + upk_C)^(a + x_A)
//   K  = H2(ID_A..C || upk_A..C || T_AB T_AC T_BA T_BC T_CA T_CB
//           || k1 || k2 || k3)
//
// Y_V is computed once in Round and reused by the repaired derivation, so
// the repair costs exactly four extra point additions per party.

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "claka/keyinfra.hpp"
#include "claka/session.hpp"

namespace claka {

class Rng;

namespace xcl12 {

struct FullKey {
  PartialKey partial;  // (s_U, R_U)
  UserKeys user;       // (x_U, upk_U)
};

struct Announcement {
  Identity id;
  G1Point upk;
  G1Point r_point;
};

Announcement Announce(const Identity& id, const FullKey& key);

// Group operations issued at the protocol layer by one party in one session.
struct OpCounter {
  std::uint64_t point_additions = 0;
  std::uint64_t scalar_multiplications = 0;
  std::uint64_t pairings = 0;
  std::uint64_t g2_exponentiations = 0;

  void Reset() { *this = OpCounter{}; }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

struct Flow {
  std::size_t sender = 0;
  std::array<std::optional<G1Point>, kParties> t;            // by recipient
  std::array<std::optional<G1Point>, kParties> peer_points;  // Y_V
  Scalar ephemeral;
};

struct TranscriptView {
  std::array<std::optional<Announcement>, kParties> parties;
  PairwisePoints t;
};

struct SharedValues {
  G1Point k1;
  G2Elem k2;
  G2Elem k3;
};

// Throws MissingTranscriptField if a peer announcement is absent.
Flow Round(const SystemParams& params, std::size_t self, const FullKey& key,
           const std::array<std::optional<Announcement>, kParties>& parties,
           Rng& rng, OpCounter& counter);

std::pair<SharedValues, SessionKey> Derive(const SystemParams& params,
                                           std::size_t self,
                                           const FullKey& key,
                                           const Flow& flow,
                                           const TranscriptView& view,
                                           OpCounter& counter);

std::pair<SharedValues, SessionKey> ImprovedDerive(
    const SystemParams& params, std::size_t self, const FullKey& key,
    const Flow& flow, const TranscriptView& view, OpCounter& counter);

// K over the view's public fields and the three shared values. SessionKey
// carries k2 as its G2 debug value.
SessionKey KeyFromShared(const SystemParams& params,
                         const TranscriptView& view,
                         const SharedValues& shared);

}  // namespace xcl12
}  // namespace claka
