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

// Original xcq11 key agreement and its signature-authenticated repair.
// All functions are pure step functions over explicit inputs.
//
// Original, party U with ephemeral u:
//   T[U->V] = u (upk_V + H2(upk_V) Q_V)           for both peers V
//   k_U     = e(P,P)^u * e(T[V->U], S_U) * e(T[W->U], S_U) = e(P,P)^(a+b+c)
//   K       = H3(ID_A..C || upk_A..C || T_AB T_AC T_BA T_BC T_CA T_CB || k)
//
// Repair: T_U = uP broadcast with a signature over (T_U, upk_U); after both
// peer signatures verify, k_U = e(T_V, T_W)^u = e(P,P)^(abc) and
//   K = H3'(ID_A..C || upk_A..C || T_A T_B T_C || k).

#include <array>
#include <optional>

#include "claka/cl_signature.hpp"
#include "claka/keyinfra.hpp"
#include "claka/session.hpp"

namespace claka {

class Rng;

namespace xcq11 {

struct PublicInfo {
  Identity id;
  G1Point upk;
};

using Roster = std::array<PublicInfo, kParties>;

struct Outgoing {
  std::size_t sender = 0;
  std::array<std::optional<G1Point>, kParties> t;  // by recipient slot
  Scalar ephemeral;                                // u, never sent
};

struct TranscriptView {
  std::array<std::optional<PublicInfo>, kParties> parties;
  PairwisePoints t;
};

// Both T-values share one fresh u.
Outgoing Round1(const SystemParams& params, const Roster& roster,
                std::size_t self, Rng& rng);

// Throws MissingTranscriptField unless all identities, public keys and six
// T-values are present.
SessionKey Derive(const SystemParams& params, std::size_t self,
                  const G1Point& full_key, const Scalar& ephemeral,
                  const TranscriptView& view);

// K for a given G2 value over the view's public fields. Used by the honest
// derivation and by adversaries that have reconstructed k.
SessionKey KeyFromShared(const SystemParams& params,
                         const TranscriptView& view, const G2Elem& shared);

// ---- repaired protocol -----------------------------------------------------

struct ImprovedOutgoing {
  G1Point t;        // uP
  ClSignature sig;  // over SignedPayload(t, upk)
  Scalar ephemeral;
};

struct ImprovedView {
  std::array<std::optional<PublicInfo>, kParties> parties;
  std::array<std::optional<G1Point>, kParties> t;
  std::array<std::optional<ClSignature>, kParties> sig;
};

// lp(T_U) || lp(upk_U).
Bytes SignedPayload(const G1Point& t, const G1Point& upk);

ImprovedOutgoing ImprovedRound1(const SystemParams& params,
                                const PublicInfo& self,
                                const G1Point& full_key, Rng& rng);

// Verifies both peer signatures first; throws SignatureInvalid(peer id) and
// produces no key if either fails.
SessionKey ImprovedDerive(const SystemParams& params, std::size_t self,
                          const Scalar& ephemeral, const ImprovedView& view);

SessionKey ImprovedKeyFromShared(const SystemParams& params,
                                 const ImprovedView& view,
                                 const G2Elem& shared);

}  // namespace xcq11
}  // namespace claka
