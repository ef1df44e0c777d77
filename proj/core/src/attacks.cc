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

#include "claka/attacks.hpp"

#include <algorithm>

#include "claka/errors.hpp"

namespace claka::attacks {

namespace {

constexpr std::string_view kNames[] = {"fs", "kci", "secrets", "kci-kgc",
                                       "kci-common"};

const G1Point& Need(const std::optional<G1Point>& value,
                    const std::string& what) {
  if (!value) throw ScenarioError("attack knowledge lacks " + what);
  return *value;
}

const G1Point& TAt(const PairwisePoints& t, std::size_t from, std::size_t to) {
  if (!t[from][to]) throw MissingTranscriptField(PairwiseFieldName(from, to));
  return *t[from][to];
}

template <typename Parties>
const auto& PartyAt(const Parties& parties, std::size_t slot) {
  if (!parties[slot]) {
    throw MissingTranscriptField("party " + SlotName(slot));
  }
  return *parties[slot];
}

void Record(AdversaryResult& result, std::string name, Bytes encoding) {
  result.intermediates.emplace_back(std::move(name), std::move(encoding));
}

// Y_V for the announced (ID_V, R_V).
G1Point PeerPoint(const SystemParams& params, const xcl12::Announcement& a) {
  return xcl12::IdentityPoint(params, a.id, a.r_point);
}

xcl12::Flow ImpersonatedFlow(
    const SystemParams& params,
    const std::array<std::optional<xcl12::Announcement>, kParties>& parties,
    Rng& rng) {
  xcl12::Flow flow;
  flow.sender = kSlotC;
  flow.ephemeral = params.group->RandomScalar(rng);
  for (std::size_t peer : {kSlotA, kSlotB}) {
    flow.peer_points[peer] = PeerPoint(params, PartyAt(parties, peer));
    flow.t[peer] = flow.ephemeral * *flow.peer_points[peer];
  }
  return flow;
}

// Shared values for the impersonated slot C given unmasked aP and bP.
// `k2_extra` and `k3_extra` are the exponent offsets (s_C^-1 and x_C) of the
// repaired variant, known or guessed.
AdversaryResult ConcludeXcl12(const SystemParams& params,
                              const xcl12::TranscriptView& view,
                              const xcl12::Flow& flow, const G1Point& a_point,
                              const G1Point& b_point, bool improved,
                              const Scalar& k2_extra, const Scalar& k3_extra,
                              const Scalar* victim_secret, std::string note) {
  AdversaryResult result;
  result.note = std::move(note);
  Record(result, "aP", a_point.Serialize());
  Record(result, "bP", b_point.Serialize());

  xcl12::SharedValues shared;
  shared.k1 = flow.ephemeral * params.p + a_point + b_point;
  if (!improved) {
    shared.k2 = Pair(a_point, b_point).Pow(flow.ephemeral);
    shared.k3 = Pair(PartyAt(view.parties, kSlotB).upk,
                     PartyAt(view.parties, kSlotC).upk)
                    .Pow(*victim_secret);
  } else {
    shared.k2 = Pair(a_point + *flow.peer_points[kSlotA],
                     b_point + *flow.peer_points[kSlotB])
                    .Pow(flow.ephemeral + k2_extra);
    shared.k3 = Pair(a_point + PartyAt(view.parties, kSlotA).upk,
                     b_point + PartyAt(view.parties, kSlotB).upk)
                    .Pow(flow.ephemeral + k3_extra);
  }
  Record(result, "k1", shared.k1.Serialize());
  Record(result, "k2", shared.k2.Serialize());
  Record(result, "k3", shared.k3.Serialize());
  result.key = xcl12::KeyFromShared(params, view, shared);
  return result;
}

}  // namespace

std::string_view AttackName(AttackKind kind) {
  return kNames[static_cast<std::size_t>(kind)];
}

std::optional<AttackKind> ParseAttack(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kNames); ++i) {
    if (kNames[i] == name) return static_cast<AttackKind>(i);
  }
  return std::nullopt;
}

bool IsLive(AttackKind kind) {
  return kind == AttackKind::kKci || kind == AttackKind::kKciKgc ||
         kind == AttackKind::kKciCommon;
}

bool KnowledgeRecord::Has(std::string_view item) const {
  return std::find(items.begin(), items.end(), item) != items.end();
}

KnowledgeRecord Xcq11FullKeys::Record() const {
  KnowledgeRecord record;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    if (full_keys[slot]) record.items.push_back("full_key:" + SlotName(slot));
  }
  return record;
}

KnowledgeRecord Xcq11SecretValues::Record() const {
  KnowledgeRecord record;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    record.items.push_back("secret_value:" + SlotName(slot));
  }
  return record;
}

KnowledgeRecord Xcl12KgcKnowledge::Record() const {
  KnowledgeRecord record;
  record.items.push_back("master_key");
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    record.items.push_back("partial_key:" + SlotName(slot));
  }
  record.items.push_back("full_key:A");
  record.items.push_back("secret_value:A");
  record.live_session = true;
  return record;
}

KnowledgeRecord Xcl12CommonKnowledge::Record() const {
  KnowledgeRecord record;
  record.items = {"full_key:A", "partial_key:A", "secret_value:A",
                  "full_key:B", "partial_key:B", "secret_value:B"};
  record.live_session = true;
  return record;
}

// ---- passive ---------------------------------------------------------------

AdversaryResult ForwardSecrecyXcq11(const SystemParams& params,
                                    const Xcq11FullKeys& knowledge,
                                    const xcq11::TranscriptView& view) {
  const G1Point& s_a = Need(knowledge.full_keys[kSlotA], "S_A");
  const G1Point& s_b = Need(knowledge.full_keys[kSlotB], "S_B");
  AdversaryResult result;
  const G2Elem ab = Pair(TAt(view.t, kSlotA, kSlotB), s_b);
  const G2Elem ba = Pair(TAt(view.t, kSlotB, kSlotA), s_a);
  const G2Elem ca = Pair(TAt(view.t, kSlotC, kSlotA), s_a);
  Record(result, "e(T_AB,S_B)", ab.Serialize());
  Record(result, "e(T_BA,S_A)", ba.Serialize());
  Record(result, "e(T_CA,S_A)", ca.Serialize());
  const G2Elem k = ab * ba * ca;
  Record(result, "k", k.Serialize());
  result.key = xcq11::KeyFromShared(params, view, k);
  return result;
}

AdversaryResult ForwardSecrecyXcq11Improved(const SystemParams& params,
                                            const Xcq11FullKeys& knowledge,
                                            const xcq11::ImprovedView& view,
                                            Rng& rng) {
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    Need(knowledge.full_keys[slot], "S_" + SlotName(slot));
  }
  if (!view.t[kSlotB] || !view.t[kSlotC]) {
    throw MissingTranscriptField("T[B], T[C]");
  }
  AdversaryResult result;
  result.note =
      "full keys do not unlock e(P,P)^(abc); exponent a replaced by a guess";
  const Scalar guess = params.group->RandomScalar(rng);
  const G2Elem k = Pair(*view.t[kSlotB], *view.t[kSlotC]).Pow(guess);
  Record(result, "k", k.Serialize());
  result.key = xcq11::ImprovedKeyFromShared(params, view, k);
  return result;
}

std::array<G1Point, kParties> RecoverEphemeralPoints(
    const SystemParams& params, const Xcq11SecretValues& knowledge,
    const xcq11::TranscriptView& view) {
  std::array<Scalar, kParties> q;
  std::array<Scalar, kParties> d;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const auto& info = PartyAt(view.parties, slot);
    q[slot] = xcq11::IdentityHash(params, info.id);
    const Scalar denom =
        knowledge.secrets[slot] + xcq11::PublicKeyHash(params, info.upk);
    if (denom.IsZero()) {
      throw DegenerateDenominator("x_" + SlotName(slot) +
                                  " + H2(upk) is zero");
    }
    d[slot] = denom.Inverse();
  }
  // For sender U and recipients V, W:
  //   d_V T[U->V] - d_W T[U->W] = u (q_V - q_W) P.
  std::array<G1Point, kParties> points;
  for (std::size_t u = 0; u < kParties; ++u) {
    const std::size_t v = (u + 1) % kParties;
    const std::size_t w = (u + 2) % kParties;
    const Scalar gap = q[v] - q[w];
    if (gap.IsZero()) {
      throw DegenerateDenominator("q_" + SlotName(v) + " == q_" +
                                  SlotName(w));
    }
    points[u] = gap.Inverse() *
                (d[v] * TAt(view.t, u, v) - d[w] * TAt(view.t, u, w));
  }
  return points;
}

AdversaryResult SecretsXcq11(const SystemParams& params,
                             const Xcq11SecretValues& knowledge,
                             const xcq11::TranscriptView& view) {
  const auto points = RecoverEphemeralPoints(params, knowledge, view);
  AdversaryResult result;
  Record(result, "aP", points[kSlotA].Serialize());
  Record(result, "bP", points[kSlotB].Serialize());
  Record(result, "cP", points[kSlotC].Serialize());
  const G2Elem k =
      Pair(points[kSlotA] + points[kSlotB] + points[kSlotC], params.p);
  Record(result, "k", k.Serialize());
  result.key = xcq11::KeyFromShared(params, view, k);
  return result;
}

AdversaryResult SecretsXcq11Improved(const SystemParams& params,
                                     const Xcq11SecretValues& knowledge,
                                     const xcq11::ImprovedView& view) {
  (void)knowledge;  // The recipe has nothing left to unmask.
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    if (!view.t[slot]) {
      throw MissingTranscriptField("T[" + SlotName(slot) + "]");
    }
  }
  AdversaryResult result;
  result.note = "sum of ephemerals gives e(P,P)^(a+b+c), not e(P,P)^(abc)";
  const G2Elem k =
      Pair(*view.t[kSlotA] + *view.t[kSlotB] + *view.t[kSlotC], params.p);
  Record(result, "k", k.Serialize());
  result.key = xcq11::ImprovedKeyFromShared(params, view, k);
  return result;
}

// ---- live ------------------------------------------------------------------

KciXcq11Adversary::KciXcq11Adversary(SystemParams params,
                                     Xcq11FullKeys knowledge,
                                     xcq11::Roster roster, Rng rng)
    : params_(std::move(params)),
      knowledge_(std::move(knowledge)),
      roster_(std::move(roster)),
      rng_(std::move(rng)) {
  Need(knowledge_.full_keys[kSlotA], "S_A");
  Need(knowledge_.full_keys[kSlotB], "S_B");
}

xcq11::Outgoing KciXcq11Adversary::Emit() {
  xcq11::Outgoing out = xcq11::Round1(params_, roster_, kSlotC, rng_);
  ephemeral_ = out.ephemeral;
  return out;
}

AdversaryResult KciXcq11Adversary::Conclude(
    const xcq11::TranscriptView& view) const {
  AdversaryResult result;
  const G2Elem own = params_.BasePairing().Pow(ephemeral_);
  const G2Elem ab =
      Pair(TAt(view.t, kSlotA, kSlotB), *knowledge_.full_keys[kSlotB]);
  const G2Elem ba =
      Pair(TAt(view.t, kSlotB, kSlotA), *knowledge_.full_keys[kSlotA]);
  Record(result, "e(P,P)^c'", own.Serialize());
  Record(result, "e(T_AB,S_B)", ab.Serialize());
  Record(result, "e(T_BA,S_A)", ba.Serialize());
  const G2Elem k = own * ab * ba;
  Record(result, "k", k.Serialize());
  result.key = xcq11::KeyFromShared(params_, view, k);
  return result;
}

KciXcq11ImprovedAdversary::KciXcq11ImprovedAdversary(
    SystemParams params, Xcq11FullKeys knowledge,
    xcq11::PublicInfo impersonated, Rng rng)
    : params_(std::move(params)),
      knowledge_(std::move(knowledge)),
      impersonated_(std::move(impersonated)),
      rng_(std::move(rng)) {
  Need(knowledge_.full_keys[kSlotA], "S_A");
}

xcq11::ImprovedOutgoing KciXcq11ImprovedAdversary::Emit() {
  // Same shape as an honest round, but signed with S_A under C's identity.
  xcq11::ImprovedOutgoing out = xcq11::ImprovedRound1(
      params_, impersonated_, *knowledge_.full_keys[kSlotA], rng_);
  ephemeral_ = out.ephemeral;
  return out;
}

AdversaryResult KciXcq11ImprovedAdversary::Conclude(
    const xcq11::ImprovedView& view) const {
  if (!view.t[kSlotA] || !view.t[kSlotB]) {
    throw MissingTranscriptField("T[A], T[B]");
  }
  AdversaryResult result;
  result.note = "signature for C forged with S_A";
  const G2Elem k = Pair(*view.t[kSlotA], *view.t[kSlotB]).Pow(ephemeral_);
  Record(result, "k", k.Serialize());
  result.key = xcq11::ImprovedKeyFromShared(params_, view, k);
  return result;
}

KciKgcXcl12Adversary::KciKgcXcl12Adversary(SystemParams params,
                                           Xcl12KgcKnowledge knowledge,
                                           xcl12::Announcement impersonated,
                                           bool improved, Rng rng)
    : params_(std::move(params)),
      knowledge_(std::move(knowledge)),
      impersonated_(std::move(impersonated)),
      improved_(improved),
      rng_(std::move(rng)) {}

xcl12::Announcement KciKgcXcl12Adversary::Announce() const {
  return xcl12::Announcement{impersonated_.id, impersonated_.upk,
                             knowledge_.partials[kSlotC].r_point};
}

xcl12::Flow KciKgcXcl12Adversary::Round(
    const std::array<std::optional<xcl12::Announcement>, kParties>& parties) {
  flow_ = ImpersonatedFlow(params_, parties, rng_);
  return flow_;
}

AdversaryResult KciKgcXcl12Adversary::Conclude(
    const xcl12::TranscriptView& view) const {
  const Scalar& s_a = knowledge_.victim.partial.s;
  const Scalar& s_c = knowledge_.partials[kSlotC].s;
  const G1Point a_point = s_c * TAt(view.t, kSlotA, kSlotC);
  const G1Point b_point = s_a * TAt(view.t, kSlotB, kSlotA);
  Scalar k3_extra;
  std::string note;
  if (improved_) {
    Rng guesses = rng_;
    k3_extra = params_.group->RandomScalar(guesses);
    note = "x_C unknown to the KGC; k3 exponent uses a guess";
  }
  return ConcludeXcl12(params_, view, flow_, a_point, b_point, improved_,
                       s_c.Inverse(), k3_extra,
                       &knowledge_.victim.user.secret, std::move(note));
}

KciCommonXcl12Adversary::KciCommonXcl12Adversary(
    SystemParams params, Xcl12CommonKnowledge knowledge,
    xcl12::Announcement impersonated, bool improved, Rng rng)
    : params_(std::move(params)),
      knowledge_(std::move(knowledge)),
      impersonated_(std::move(impersonated)),
      improved_(improved),
      rng_(std::move(rng)) {}

xcl12::Announcement KciCommonXcl12Adversary::Announce() const {
  return impersonated_;
}

xcl12::Flow KciCommonXcl12Adversary::Round(
    const std::array<std::optional<xcl12::Announcement>, kParties>& parties) {
  flow_ = ImpersonatedFlow(params_, parties, rng_);
  return flow_;
}

AdversaryResult KciCommonXcl12Adversary::Conclude(
    const xcl12::TranscriptView& view) const {
  const G1Point a_point = knowledge_.b.partial.s * TAt(view.t, kSlotA, kSlotB);
  const G1Point b_point = knowledge_.a.partial.s * TAt(view.t, kSlotB, kSlotA);
  Scalar k2_extra;
  Scalar k3_extra;
  std::string note;
  if (improved_) {
    Rng guesses = rng_;
    k2_extra = params_.group->RandomScalar(guesses);
    k3_extra = params_.group->RandomScalar(guesses);
    note = "s_C^-1 and x_C unknown; k2 and k3 exponents use guesses";
  }
  return ConcludeXcl12(params_, view, flow_, a_point, b_point, improved_,
                       k2_extra, k3_extra, &knowledge_.a.user.secret,
                       std::move(note));
}

}  // namespace claka::attacks
