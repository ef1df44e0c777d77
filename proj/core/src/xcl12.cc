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

#include "claka/xcl12.hpp"

#include <vector>

#include "claka/errors.hpp"
#include "claka/hash.hpp"
#include "claka/rng.hpp"

namespace claka::xcl12 {

namespace {

// Group operations routed through the session's counter.
class Counted {
 public:
  explicit Counted(OpCounter& counter) : counter_(counter) {}

  G1Point Add(const G1Point& a, const G1Point& b) {
    ++counter_.point_additions;
    return a + b;
  }
  G1Point Mul(const Scalar& s, const G1Point& u) {
    ++counter_.scalar_multiplications;
    return s * u;
  }
  G2Elem Pairing(const G1Point& u, const G1Point& v) {
    ++counter_.pairings;
    return Pair(u, v);
  }
  G2Elem Pow(const G2Elem& w, const Scalar& s) {
    ++counter_.g2_exponentiations;
    return w.Pow(s);
  }

 private:
  OpCounter& counter_;
};

const Announcement& PartyAt(
    const std::array<std::optional<Announcement>, kParties>& parties,
    std::size_t slot) {
  if (!parties[slot]) {
    throw MissingTranscriptField("announcement " + SlotName(slot));
  }
  return *parties[slot];
}

const G1Point& TAt(const PairwisePoints& t, std::size_t from, std::size_t to) {
  if (!t[from][to]) throw MissingTranscriptField(PairwiseFieldName(from, to));
  return *t[from][to];
}

std::array<std::size_t, 2> PeersOf(std::size_t self) {
  std::array<std::size_t, 2> peers{};
  std::size_t n = 0;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    if (slot != self) peers[n++] = slot;
  }
  return peers;
}

// s_U T[V->U] for both peers: the unmasked peer ephemerals vP, wP.
std::array<G1Point, 2> Unmask(const FullKey& key, std::size_t self,
                              const std::array<std::size_t, 2>& peers,
                              const TranscriptView& view, Counted& ops) {
  return {ops.Mul(key.partial.s, TAt(view.t, peers[0], self)),
          ops.Mul(key.partial.s, TAt(view.t, peers[1], self))};
}

G1Point SharedPoint(const SystemParams& params, const Flow& flow,
                    const std::array<G1Point, 2>& unmasked, Counted& ops) {
  G1Point own = ops.Mul(flow.ephemeral, params.p);
  return ops.Add(ops.Add(own, unmasked[0]), unmasked[1]);
}

void CheckComplete(const TranscriptView& view) {
  for (std::size_t slot = 0; slot < kParties; ++slot) PartyAt(view.parties, slot);
  for (std::size_t from = 0; from < kParties; ++from) {
    for (std::size_t to = 0; to < kParties; ++to) {
      if (from != to) TAt(view.t, from, to);
    }
  }
}

}  // namespace

Announcement Announce(const Identity& id, const FullKey& key) {
  return Announcement{id, key.user.upk, key.partial.r_point};
}

Flow Round(const SystemParams& params, std::size_t self, const FullKey& key,
           const std::array<std::optional<Announcement>, kParties>& parties,
           Rng& rng, OpCounter& counter) {
  if (parties[self] && (parties[self]->upk != key.user.upk ||
                        parties[self]->r_point != key.partial.r_point)) {
    throw ScenarioError("own announcement does not match own key material");
  }
  Counted ops(counter);
  Flow flow;
  flow.sender = self;
  flow.ephemeral = params.group->RandomScalar(rng);
  for (std::size_t peer : PeersOf(self)) {
    const Announcement& a = PartyAt(parties, peer);
    G1Point masked_p0 =
        ops.Mul(IdentityHash(params, a.id, a.r_point), params.p0);
    flow.peer_points[peer] = ops.Add(a.r_point, masked_p0);
    flow.t[peer] = ops.Mul(flow.ephemeral, *flow.peer_points[peer]);
  }
  return flow;
}

SessionKey KeyFromShared(const SystemParams& params,
                         const TranscriptView& view,
                         const SharedValues& shared) {
  std::vector<Bytes> parts;
  for (std::size_t i = 0; i < kParties; ++i) {
    parts.push_back(ToBytes(PartyAt(view.parties, i).id));
  }
  for (std::size_t i = 0; i < kParties; ++i) {
    parts.push_back(PartyAt(view.parties, i).upk.Serialize());
  }
  for (std::size_t from = 0; from < kParties; ++from) {
    for (std::size_t to = 0; to < kParties; ++to) {
      if (from != to) parts.push_back(TAt(view.t, from, to).Serialize());
    }
  }
  parts.push_back(shared.k1.Serialize());
  parts.push_back(shared.k2.Serialize());
  parts.push_back(shared.k3.Serialize());
  return SessionKey{Kdf(params.tags.xcl12_h2, parts, params.key_bits),
                    shared.k2};
}

std::pair<SharedValues, SessionKey> Derive(const SystemParams& params,
                                           std::size_t self,
                                           const FullKey& key,
                                           const Flow& flow,
                                           const TranscriptView& view,
                                           OpCounter& counter) {
  CheckComplete(view);
  Counted ops(counter);
  const auto peers = PeersOf(self);
  const auto unmasked = Unmask(key, self, peers, view, ops);

  SharedValues shared;
  shared.k1 = SharedPoint(params, flow, unmasked, ops);
  shared.k2 = ops.Pow(ops.Pairing(unmasked[0], unmasked[1]), flow.ephemeral);
  shared.k3 = ops.Pow(ops.Pairing(view.parties[peers[0]]->upk,
                                  view.parties[peers[1]]->upk),
                      key.user.secret);
  SessionKey session = KeyFromShared(params, view, shared);
  return {std::move(shared), std::move(session)};
}

std::pair<SharedValues, SessionKey> ImprovedDerive(
    const SystemParams& params, std::size_t self, const FullKey& key,
    const Flow& flow, const TranscriptView& view, OpCounter& counter) {
  CheckComplete(view);
  Counted ops(counter);
  const auto peers = PeersOf(self);
  for (std::size_t peer : peers) {
    if (!flow.peer_points[peer]) {
      throw MissingTranscriptField("own peer point Y[" + SlotName(peer) + "]");
    }
  }
  const auto unmasked = Unmask(key, self, peers, view, ops);

  SharedValues shared;
  shared.k1 = SharedPoint(params, flow, unmasked, ops);

  const Scalar k2_exp = flow.ephemeral + key.partial.s.Inverse();
  shared.k2 = ops.Pow(
      ops.Pairing(ops.Add(unmasked[0], *flow.peer_points[peers[0]]),
                  ops.Add(unmasked[1], *flow.peer_points[peers[1]])),
      k2_exp);

  const Scalar k3_exp = flow.ephemeral + key.user.secret;
  shared.k3 = ops.Pow(
      ops.Pairing(ops.Add(unmasked[0], view.parties[peers[0]]->upk),
                  ops.Add(unmasked[1], view.parties[peers[1]]->upk)),
      k3_exp);

  SessionKey session = KeyFromShared(params, view, shared);
  return {std::move(shared), std::move(session)};
}

}  // namespace claka::xcl12
