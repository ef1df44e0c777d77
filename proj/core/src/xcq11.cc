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

#include "claka/xcq11.hpp"

#include <vector>

#include "claka/errors.hpp"
#include "claka/hash.hpp"
#include "claka/rng.hpp"

namespace claka {

namespace xcq11 {

namespace {

template <typename Parties>
const PublicInfo& PartyAt(const Parties& parties, std::size_t slot) {
  if (!parties[slot]) {
    throw MissingTranscriptField("party " + SlotName(slot));
  }
  return *parties[slot];
}

const G1Point& TAt(const PairwisePoints& t, std::size_t from, std::size_t to) {
  if (!t[from][to]) throw MissingTranscriptField(PairwiseFieldName(from, to));
  return *t[from][to];
}

void AppendIdentitiesAndKeys(
    std::vector<Bytes>& parts,
    const std::array<std::optional<PublicInfo>, kParties>& parties) {
  for (std::size_t i = 0; i < kParties; ++i) {
    parts.push_back(ToBytes(PartyAt(parties, i).id));
  }
  for (std::size_t i = 0; i < kParties; ++i) {
    parts.push_back(PartyAt(parties, i).upk.Serialize());
  }
}

}  // namespace

Outgoing Round1(const SystemParams& params, const Roster& roster,
                std::size_t self, Rng& rng) {
  Outgoing out;
  out.sender = self;
  out.ephemeral = params.group->RandomScalar(rng);
  for (std::size_t peer = 0; peer < kParties; ++peer) {
    if (peer == self) continue;
    const PublicInfo& info = roster[peer];
    out.t[peer] =
        out.ephemeral * CombinedPublicPoint(params, info.id, info.upk);
  }
  return out;
}

SessionKey KeyFromShared(const SystemParams& params,
                         const TranscriptView& view, const G2Elem& shared) {
  std::vector<Bytes> parts;
  AppendIdentitiesAndKeys(parts, view.parties);
  for (std::size_t from = 0; from < kParties; ++from) {
    for (std::size_t to = 0; to < kParties; ++to) {
      if (from != to) parts.push_back(TAt(view.t, from, to).Serialize());
    }
  }
  parts.push_back(shared.Serialize());
  return SessionKey{Kdf(params.tags.xcq11_h3, parts, params.key_bits), shared};
}

SessionKey Derive(const SystemParams& params, std::size_t self,
                  const G1Point& full_key, const Scalar& ephemeral,
                  const TranscriptView& view) {
  G2Elem k = params.BasePairing().Pow(ephemeral);
  for (std::size_t peer = 0; peer < kParties; ++peer) {
    if (peer == self) continue;
    k = k * Pair(TAt(view.t, peer, self), full_key);
  }
  return KeyFromShared(params, view, k);
}

// ---- repaired protocol -----------------------------------------------------

Bytes SignedPayload(const G1Point& t, const G1Point& upk) {
  const Bytes parts[] = {t.Serialize(), upk.Serialize()};
  return EncodeParts(parts);
}

ImprovedOutgoing ImprovedRound1(const SystemParams& params,
                                const PublicInfo& self,
                                const G1Point& full_key, Rng& rng) {
  Scalar u = params.group->RandomScalar(rng);
  G1Point t = u * params.p;
  ClSignature sig = ClSign(params, self.id, self.upk, full_key,
                           SignedPayload(t, self.upk), rng);
  return ImprovedOutgoing{std::move(t), std::move(sig), std::move(u)};
}

SessionKey ImprovedKeyFromShared(const SystemParams& params,
                                 const ImprovedView& view,
                                 const G2Elem& shared) {
  std::vector<Bytes> parts;
  AppendIdentitiesAndKeys(parts, view.parties);
  for (std::size_t i = 0; i < kParties; ++i) {
    if (!view.t[i]) throw MissingTranscriptField("T[" + SlotName(i) + "]");
    parts.push_back(view.t[i]->Serialize());
  }
  parts.push_back(shared.Serialize());
  return SessionKey{Kdf(params.tags.xcq11i_h3, parts, params.key_bits),
                    shared};
}

SessionKey ImprovedDerive(const SystemParams& params, std::size_t self,
                          const Scalar& ephemeral, const ImprovedView& view) {
  std::array<std::size_t, 2> peers{};
  std::size_t n = 0;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    if (slot != self) peers[n++] = slot;
  }
  for (std::size_t peer : peers) {
    const PublicInfo& info = PartyAt(view.parties, peer);
    if (!view.t[peer]) {
      throw MissingTranscriptField("T[" + SlotName(peer) + "]");
    }
    if (!view.sig[peer]) {
      throw MissingTranscriptField("sigma[" + SlotName(peer) + "]");
    }
    if (!ClVerify(params, info.id, info.upk,
                  SignedPayload(*view.t[peer], info.upk), *view.sig[peer])) {
      throw SignatureInvalid(info.id);
    }
  }
  G2Elem k = Pair(*view.t[peers[0]], *view.t[peers[1]]).Pow(ephemeral);
  return ImprovedKeyFromShared(params, view, k);
}

}  // namespace xcq11
}  // namespace claka
