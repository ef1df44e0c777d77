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

#include "claka/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

#include "claka/errors.hpp"
#include "claka/hash.hpp"
#include "claka/rng.hpp"

namespace claka::harness {

namespace {

constexpr std::string_view kProtocolTags[] = {"xcq11", "xcq11i", "xcl12",
                                              "xcl12i"};
constexpr std::string_view kPhaseNames[] = {"init", "announced", "flows-sent",
                                            "derived", "aborted"};

using Ids = std::array<Identity, kParties>;

std::size_t SlotOf(const Ids& ids, const Identity& id) {
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    if (ids[slot] == id) return slot;
  }
  throw ScenarioError("message from unknown sender '" + id + "'");
}

std::string PairwiseKey(const Identity& recipient) { return "t:" + recipient; }

const std::string& FieldAt(const Message& m, const std::string& name) {
  auto it = m.fields.find(name);
  if (it == m.fields.end()) {
    throw MissingTranscriptField("field '" + name + "' from " + m.sender);
  }
  return it->second;
}

G1Point G1Field(const SystemParams& params, const Message& m,
                const std::string& name) {
  return params.group->DecodeG1(FromHex(FieldAt(m, name)));
}

void CheckEnvelope(const Message& m, std::string_view session_id,
                   Protocol protocol) {
  if (m.session_id != session_id) {
    throw ScenarioError("message from " + m.sender + " has session id '" +
                        m.session_id + "'");
  }
  if (m.protocol_tag != ProtocolTag(protocol)) {
    throw ScenarioError("message from " + m.sender + " has protocol tag '" +
                        m.protocol_tag + "'");
  }
}

Message Envelope(const std::string& session_id, const Identity& sender,
                 Protocol protocol, std::string kind) {
  Message m;
  m.session_id = session_id;
  m.sender = sender;
  m.protocol_tag = std::string(ProtocolTag(protocol));
  m.kind = std::move(kind);
  return m;
}

// ---- wire formats ----------------------------------------------------------

Message Xcq11Flows(const std::string& session_id, const Ids& ids,
                   const G1Point& upk, const xcq11::Outgoing& out) {
  Message m = Envelope(session_id, ids[out.sender], Protocol::kXcq11, "flows");
  m.fields["upk"] = ToHex(upk.Serialize());
  for (std::size_t peer = 0; peer < kParties; ++peer) {
    if (out.t[peer]) {
      m.fields[PairwiseKey(ids[peer])] = ToHex(out.t[peer]->Serialize());
    }
  }
  return m;
}

void Apply(const SystemParams& params, const Ids& ids,
           xcq11::TranscriptView& view, const Message& m) {
  if (m.kind != "flows") throw ScenarioError("unexpected kind " + m.kind);
  const std::size_t from = SlotOf(ids, m.sender);
  view.parties[from] = xcq11::PublicInfo{m.sender, G1Field(params, m, "upk")};
  for (std::size_t to = 0; to < kParties; ++to) {
    if (to != from) view.t[from][to] = G1Field(params, m, PairwiseKey(ids[to]));
  }
}

Message Xcq11iFlows(const std::string& session_id, const Identity& sender,
                    const G1Point& upk, const xcq11::ImprovedOutgoing& out) {
  Message m = Envelope(session_id, sender, Protocol::kXcq11Improved, "flows");
  m.fields["upk"] = ToHex(upk.Serialize());
  m.fields["t"] = ToHex(out.t.Serialize());
  m.fields["sigma"] = ToHex(out.sig.Serialize());
  return m;
}

void Apply(const SystemParams& params, const Ids& ids,
           xcq11::ImprovedView& view, const Message& m) {
  if (m.kind != "flows") throw ScenarioError("unexpected kind " + m.kind);
  const std::size_t from = SlotOf(ids, m.sender);
  view.parties[from] = xcq11::PublicInfo{m.sender, G1Field(params, m, "upk")};
  view.t[from] = G1Field(params, m, "t");
  view.sig[from] =
      ClSignature::Deserialize(params, FromHex(FieldAt(m, "sigma")));
}

Message Xcl12Announce(const std::string& session_id, Protocol protocol,
                      const xcl12::Announcement& a) {
  Message m = Envelope(session_id, a.id, protocol, "announce");
  m.fields["upk"] = ToHex(a.upk.Serialize());
  m.fields["r"] = ToHex(a.r_point.Serialize());
  return m;
}

Message Xcl12Flows(const std::string& session_id, Protocol protocol,
                   const Ids& ids, const xcl12::Flow& flow) {
  Message m = Envelope(session_id, ids[flow.sender], protocol, "flows");
  for (std::size_t peer = 0; peer < kParties; ++peer) {
    if (flow.t[peer]) {
      m.fields[PairwiseKey(ids[peer])] = ToHex(flow.t[peer]->Serialize());
    }
  }
  return m;
}

void Apply(const SystemParams& params, const Ids& ids,
           xcl12::TranscriptView& view, const Message& m) {
  const std::size_t from = SlotOf(ids, m.sender);
  if (m.kind == "announce") {
    view.parties[from] = xcl12::Announcement{
        m.sender, G1Field(params, m, "upk"), G1Field(params, m, "r")};
  } else if (m.kind == "flows") {
    for (std::size_t to = 0; to < kParties; ++to) {
      if (to != from) {
        view.t[from][to] = G1Field(params, m, PairwiseKey(ids[to]));
      }
    }
  } else {
    throw ScenarioError("unexpected kind " + m.kind);
  }
}

template <typename View>
View ViewFromLog(const SystemParams& params, const Ids& ids,
                 const std::vector<LoggedMessage>& log) {
  View view;
  for (const LoggedMessage& entry : log) {
    Apply(params, ids, view, entry.message);
  }
  return view;
}

// ---- honest parties --------------------------------------------------------

class PartyBase : public HonestParty {
 protected:
  PartyBase(Protocol protocol, const KeyStore& keys, std::size_t slot,
            std::uint64_t seed, std::string session_id)
      : protocol_(protocol),
        params_(keys.params),
        ids_(keys.identities()),
        slot_(slot),
        rng_(seed),
        session_id_(std::move(session_id)) {}

  // Runs `step`; any library error aborts the party.
  template <typename Step>
  void Guard(Step&& step) {
    if (phase() == Phase::kAborted) return;
    try {
      step();
    } catch (const Error& e) {
      Abort(e.what());
    }
  }

  template <typename View>
  void ApplyChecked(View& view, const Message& m) {
    Guard([&] {
      CheckEnvelope(m, session_id_, protocol_);
      Apply(params_, ids_, view, m);
    });
  }

  Protocol protocol_;
  SystemParams params_;
  Ids ids_;
  std::size_t slot_;
  Rng rng_;
  std::string session_id_;
};

class Xcq11Party final : public PartyBase {
 public:
  Xcq11Party(const KeyStore& keys, std::size_t slot, std::uint64_t seed,
             std::string session_id)
      : PartyBase(Protocol::kXcq11, keys, slot, seed, std::move(session_id)),
        self_(keys.xcq11()[slot]) {
    for (std::size_t i = 0; i < kParties; ++i) {
      roster_[i] = xcq11::PublicInfo{keys.xcq11()[i].id,
                                     keys.xcq11()[i].keys.upk};
    }
  }

  std::vector<Message> Emit(std::size_t round) override {
    std::vector<Message> out;
    if (round != 0) return out;
    Guard([&] {
      xcq11::Outgoing flows = xcq11::Round1(params_, roster_, slot_, rng_);
      ephemeral_ = flows.ephemeral;
      out.push_back(Xcq11Flows(session_id_, ids_, self_.keys.upk, flows));
      Apply(params_, ids_, view_, out.back());
      Advance(Phase::kFlowsSent);
    });
    return out;
  }

  void Receive(const Message& m) override { ApplyChecked(view_, m); }

  void Finish() override {
    Guard([&] {
      Complete(xcq11::Derive(params_, slot_, self_.keys.full_key, ephemeral_,
                             view_));
    });
  }

 private:
  Xcq11Credentials self_;
  xcq11::Roster roster_;
  xcq11::TranscriptView view_;
  Scalar ephemeral_;
};

class Xcq11iParty final : public PartyBase {
 public:
  Xcq11iParty(const KeyStore& keys, std::size_t slot, std::uint64_t seed,
              std::string session_id)
      : PartyBase(Protocol::kXcq11Improved, keys, slot, seed,
                  std::move(session_id)),
        self_(keys.xcq11()[slot]) {}

  std::vector<Message> Emit(std::size_t round) override {
    std::vector<Message> out;
    if (round != 0) return out;
    Guard([&] {
      const xcq11::PublicInfo info{self_.id, self_.keys.upk};
      xcq11::ImprovedOutgoing flows =
          xcq11::ImprovedRound1(params_, info, self_.keys.full_key, rng_);
      ephemeral_ = flows.ephemeral;
      out.push_back(Xcq11iFlows(session_id_, self_.id, info.upk, flows));
      Apply(params_, ids_, view_, out.back());
      Advance(Phase::kFlowsSent);
    });
    return out;
  }

  void Receive(const Message& m) override { ApplyChecked(view_, m); }

  void Finish() override {
    Guard([&] {
      Complete(xcq11::ImprovedDerive(params_, slot_, ephemeral_, view_));
    });
  }

 private:
  Xcq11Credentials self_;
  xcq11::ImprovedView view_;
  Scalar ephemeral_;
};

class Xcl12Party final : public PartyBase {
 public:
  Xcl12Party(Protocol protocol, const KeyStore& keys, std::size_t slot,
             std::uint64_t seed, std::string session_id)
      : PartyBase(protocol, keys, slot, seed, std::move(session_id)),
        self_(keys.xcl12()[slot]) {}

  std::vector<Message> Emit(std::size_t round) override {
    std::vector<Message> out;
    Guard([&] {
      if (round == 0) {
        out.push_back(Xcl12Announce(session_id_, protocol_,
                                    xcl12::Announce(self_.id, self_.key)));
        Apply(params_, ids_, view_, out.back());
        Advance(Phase::kAnnounced);
      } else if (round == 1) {
        flow_ = xcl12::Round(params_, slot_, self_.key, view_.parties, rng_,
                             ops_);
        out.push_back(Xcl12Flows(session_id_, protocol_, ids_, flow_));
        Apply(params_, ids_, view_, out.back());
        Advance(Phase::kFlowsSent);
      }
    });
    return out;
  }

  void Receive(const Message& m) override { ApplyChecked(view_, m); }

  void Finish() override {
    Guard([&] {
      auto derived =
          IsImproved(protocol_)
              ? xcl12::ImprovedDerive(params_, slot_, self_.key, flow_, view_,
                                      ops_)
              : xcl12::Derive(params_, slot_, self_.key, flow_, view_, ops_);
      Complete(std::move(derived.second));
    });
  }

  std::optional<xcl12::OpCounter> ops() const override { return ops_; }

 private:
  Xcl12Credentials self_;
  xcl12::TranscriptView view_;
  xcl12::Flow flow_;
  xcl12::OpCounter ops_;
};

// ---- adversary actors ------------------------------------------------------

// Common plumbing for an adversary in slot C: it records the messages it
// sees and turns its conclusion into an AdversaryResult, never throwing.
template <typename View>
class AdversaryActor : public SlotActor {
 public:
  AdversaryActor(const SystemParams& params, Ids ids)
      : params_(params), ids_(std::move(ids)) {}

  void Receive(const Message& m) override {
    try {
      Apply(params_, ids_, view_, m);
    } catch (const Error& e) {
      if (result_.note.empty()) result_.note = e.what();
    }
  }

  void Finish() override {
    try {
      std::string earlier = std::move(result_.note);
      result_ = Conclude();
      if (!earlier.empty()) result_.note = earlier;
    } catch (const Error& e) {
      result_.key.reset();
      result_.note = e.what();
    }
  }

  attacks::AdversaryResult TakeResult() { return std::move(result_); }

 protected:
  virtual attacks::AdversaryResult Conclude() = 0;

  SystemParams params_;
  Ids ids_;
  View view_;
  attacks::AdversaryResult result_;
};

class KciXcq11Actor final : public AdversaryActor<xcq11::TranscriptView> {
 public:
  KciXcq11Actor(const KeyStore& keys, attacks::Xcq11FullKeys knowledge,
                std::uint64_t seed, std::string session_id)
      : AdversaryActor(keys.params, keys.identities()),
        upk_c_(keys.xcq11()[kSlotC].keys.upk),
        session_id_(std::move(session_id)),
        adversary_(keys.params, std::move(knowledge), Roster(keys),
                   Rng(seed)) {}

  std::vector<Message> Emit(std::size_t round) override {
    if (round != 0) return {};
    Message m = Xcq11Flows(session_id_, ids_, upk_c_, adversary_.Emit());
    Apply(params_, ids_, view_, m);
    return {m};
  }

 private:
  static xcq11::Roster Roster(const KeyStore& keys) {
    xcq11::Roster roster;
    for (std::size_t i = 0; i < kParties; ++i) {
      roster[i] = {keys.xcq11()[i].id, keys.xcq11()[i].keys.upk};
    }
    return roster;
  }

  attacks::AdversaryResult Conclude() override {
    return adversary_.Conclude(view_);
  }

  G1Point upk_c_;
  std::string session_id_;
  attacks::KciXcq11Adversary adversary_;
};

class KciXcq11iActor final : public AdversaryActor<xcq11::ImprovedView> {
 public:
  KciXcq11iActor(const KeyStore& keys, attacks::Xcq11FullKeys knowledge,
                 std::uint64_t seed, std::string session_id)
      : AdversaryActor(keys.params, keys.identities()),
        impersonated_{keys.xcq11()[kSlotC].id, keys.xcq11()[kSlotC].keys.upk},
        session_id_(std::move(session_id)),
        adversary_(keys.params, std::move(knowledge), impersonated_,
                   Rng(seed)) {}

  std::vector<Message> Emit(std::size_t round) override {
    if (round != 0) return {};
    Message m = Xcq11iFlows(session_id_, impersonated_.id, impersonated_.upk,
                            adversary_.Emit());
    Apply(params_, ids_, view_, m);
    return {m};
  }

 private:
  attacks::AdversaryResult Conclude() override {
    return adversary_.Conclude(view_);
  }

  xcq11::PublicInfo impersonated_;
  std::string session_id_;
  attacks::KciXcq11ImprovedAdversary adversary_;
};

template <typename Adversary>
class Xcl12Actor final : public AdversaryActor<xcl12::TranscriptView> {
 public:
  Xcl12Actor(const KeyStore& keys, Protocol protocol, Adversary adversary,
             std::string session_id)
      : AdversaryActor(keys.params, keys.identities()),
        protocol_(protocol),
        session_id_(std::move(session_id)),
        adversary_(std::move(adversary)) {}

  std::vector<Message> Emit(std::size_t round) override {
    Message m;
    if (round == 0) {
      m = Xcl12Announce(session_id_, protocol_, adversary_.Announce());
    } else if (round == 1) {
      m = Xcl12Flows(session_id_, protocol_, ids_,
                     adversary_.Round(view_.parties));
    } else {
      return {};
    }
    Apply(params_, ids_, view_, m);
    return {m};
  }

 private:
  attacks::AdversaryResult Conclude() override {
    return adversary_.Conclude(view_);
  }

  Protocol protocol_;
  std::string session_id_;
  Adversary adversary_;
};

std::string Digest(const std::optional<Bytes>& key) {
  return key ? ToHex(Sha256(*key)) : std::string();
}

Ids IdsFromLog(const Transcript& transcript) {
  Ids ids;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    ids[slot] = transcript.parties[slot].id;
  }
  return ids;
}

}  // namespace

// ---- enums -----------------------------------------------------------------

std::string_view ProtocolTag(Protocol protocol) {
  return kProtocolTags[static_cast<std::size_t>(protocol)];
}

std::optional<Protocol> ParseProtocol(std::string_view tag) {
  for (std::size_t i = 0; i < std::size(kProtocolTags); ++i) {
    if (kProtocolTags[i] == tag) return static_cast<Protocol>(i);
  }
  return std::nullopt;
}

Family FamilyOf(Protocol protocol) {
  return protocol == Protocol::kXcq11 || protocol == Protocol::kXcq11Improved
             ? Family::kXcq11
             : Family::kXcl12;
}

std::string_view FamilyName(Family family) {
  return family == Family::kXcq11 ? "xcq11" : "xcl12";
}

bool IsImproved(Protocol protocol) {
  return protocol == Protocol::kXcq11Improved ||
         protocol == Protocol::kXcl12Improved;
}

std::size_t RoundCount(Protocol protocol) {
  return FamilyOf(protocol) == Family::kXcq11 ? 1 : 2;
}

bool AttackDefinedFor(AttackKind attack, Protocol protocol) {
  switch (attack) {
    case AttackKind::kForwardSecrecy:
    case AttackKind::kKci:
    case AttackKind::kSecrets:
      return FamilyOf(protocol) == Family::kXcq11;
    case AttackKind::kKciKgc:
    case AttackKind::kKciCommon:
      return FamilyOf(protocol) == Family::kXcl12;
  }
  return false;
}

std::string_view PhaseName(Phase phase) {
  return kPhaseNames[static_cast<std::size_t>(phase)];
}

// ---- key material ----------------------------------------------------------

const std::array<Xcq11Credentials, kParties>& KeyStore::xcq11() const {
  if (const auto* users_ptr =
          std::get_if<std::array<Xcq11Credentials, kParties>>(&users)) {
    return *users_ptr;
  }
  throw ScenarioError("key store holds xcl12 keys, not xcq11");
}

const std::array<Xcl12Credentials, kParties>& KeyStore::xcl12() const {
  if (const auto* users_ptr =
          std::get_if<std::array<Xcl12Credentials, kParties>>(&users)) {
    return *users_ptr;
  }
  throw ScenarioError("key store holds xcq11 keys, not xcl12");
}

std::array<Identity, kParties> KeyStore::identities() const {
  Ids ids;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    ids[slot] = family == Family::kXcq11 ? xcq11()[slot].id : xcl12()[slot].id;
  }
  return ids;
}

KeyStore GenerateKeyStore(Family family, GroupHandle group,
                          std::array<Identity, kParties> identities,
                          std::uint64_t seed, std::size_t key_bits) {
  const Ids ids = CanonicalOrder(std::move(identities));
  Rng rng(seed);
  KeyStore store;
  store.family = family;
  if (family == Family::kXcl12) {
    std::tie(store.params, store.master) = Setup(group, rng, key_bits);
    std::array<Xcl12Credentials, kParties> users;
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      users[slot].id = ids[slot];
      users[slot].key.partial =
          xcl12::ExtractPartialKey(store.params, store.master, ids[slot], rng);
      users[slot].key.user = xcl12::GenerateUserKeys(store.params, rng);
    }
    store.users = std::move(users);
    return store;
  }

  std::array<Xcq11Credentials, kParties> users;
  for (;;) {
    std::tie(store.params, store.master) = Setup(group, rng, key_bits);
    try {
      for (std::size_t slot = 0; slot < kParties; ++slot) {
        users[slot].id = ids[slot];
        users[slot].partial =
            xcq11::ExtractPartialKey(store.params, store.master, ids[slot]);
      }
      break;
    } catch (const DegenerateScalar&) {
      // x = -q_U for some user; only reachable on tiny groups.
    }
  }
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    users[slot].keys = xcq11::GenerateUserKeys(store.params, ids[slot],
                                               users[slot].partial, rng);
  }
  store.users = std::move(users);
  return store;
}

ScenarioConfig ScenarioConfig::FromSeed(Protocol protocol,
                                        BackendKind backend,
                                        std::string profile,
                                        std::uint64_t seed) {
  ScenarioConfig config;
  config.protocol = protocol;
  config.backend = backend;
  config.profile =
      profile.empty() ? std::string(DefaultProfile(backend)) : profile;
  config.keygen_seed = DeriveSeed(seed, "keygen");
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    config.party_seeds[slot] = DeriveSeed(seed, "party/" + SlotName(slot));
  }
  config.adversary_seed = DeriveSeed(seed, "adversary");
  char id[24];
  std::snprintf(id, sizeof(id), "s-%016llx",
                static_cast<unsigned long long>(DeriveSeed(seed, "session")));
  config.session_id = id;
  return config;
}

GroupHandle GroupFor(const ScenarioConfig& config) {
  return MakeGroup(config.backend, config.profile);
}

KeyStore ResolveKeys(const ScenarioConfig& config) {
  if (!config.keys) {
    return GenerateKeyStore(FamilyOf(config.protocol), GroupFor(config),
                            config.identities, config.keygen_seed,
                            config.key_bits);
  }
  const KeyStore& keys = *config.keys;
  if (keys.family != FamilyOf(config.protocol)) {
    throw ScenarioError("key store is for the " +
                        std::string(FamilyName(keys.family)) +
                        " family, protocol is " +
                        std::string(ProtocolTag(config.protocol)));
  }
  if (keys.params.group->kind() != config.backend ||
      keys.params.group->profile() != config.profile) {
    throw ScenarioError("key store backend/profile does not match scenario");
  }
  return keys;
}

// ---- honest party state ----------------------------------------------------

void HonestParty::Advance(Phase next) {
  if (phase_ == Phase::kAborted || next <= phase_) {
    throw std::logic_error("illegal phase transition from " +
                           std::string(PhaseName(phase_)) + " to " +
                           std::string(PhaseName(next)));
  }
  phase_ = next;
}

void HonestParty::Abort(std::string reason) {
  if (phase_ == Phase::kAborted) return;
  phase_ = Phase::kAborted;
  abort_reason_ = std::move(reason);
  key_.reset();
}

void HonestParty::Complete(SessionKey key) {
  Advance(Phase::kDerived);
  key_ = std::move(key);
}

std::unique_ptr<HonestParty> MakeHonestParty(Protocol protocol,
                                             const KeyStore& keys,
                                             std::size_t slot,
                                             std::uint64_t seed,
                                             std::string session_id) {
  if (keys.family != FamilyOf(protocol)) {
    throw ScenarioError("key store family does not match protocol");
  }
  switch (protocol) {
    case Protocol::kXcq11:
      return std::make_unique<Xcq11Party>(keys, slot, seed,
                                          std::move(session_id));
    case Protocol::kXcq11Improved:
      return std::make_unique<Xcq11iParty>(keys, slot, seed,
                                           std::move(session_id));
    case Protocol::kXcl12:
    case Protocol::kXcl12Improved:
      return std::make_unique<Xcl12Party>(protocol, keys, slot, seed,
                                          std::move(session_id));
  }
  throw ScenarioError("unknown protocol");
}

// ---- network ---------------------------------------------------------------

Transcript RunNetwork(const ScenarioConfig& config,
                      std::array<SlotActor*, kParties> actors,
                      const std::array<Identity, kParties>& ids) {
  Transcript transcript;
  transcript.session_id = config.session_id;
  transcript.protocol = config.protocol;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    transcript.parties[slot].id = ids[slot];
  }
  for (std::size_t round = 0; round < RoundCount(config.protocol); ++round) {
    std::vector<std::pair<std::size_t, Message>> batch;
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      for (Message& m : actors[slot]->Emit(round)) {
        transcript.log.push_back(LoggedMessage{round, m});
        batch.emplace_back(slot, std::move(m));
      }
    }
    for (const auto& [from, m] : batch) {
      for (std::size_t slot = 0; slot < kParties; ++slot) {
        if (slot != from) actors[slot]->Receive(m);
      }
    }
  }
  for (SlotActor* actor : actors) actor->Finish();
  return transcript;
}

HonestRun RunSessionWith(const ScenarioConfig& config, const KeyStore& keys,
                         std::array<SlotActor*, kParties> overrides) {
  const Ids ids = keys.identities();
  std::array<std::unique_ptr<HonestParty>, kParties> honest;
  std::array<SlotActor*, kParties> actors{};
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    if (overrides[slot]) {
      actors[slot] = overrides[slot];
    } else {
      honest[slot] = MakeHonestParty(config.protocol, keys, slot,
                                     config.party_seeds[slot],
                                     config.session_id);
      actors[slot] = honest[slot].get();
    }
  }

  HonestRun run;
  run.transcript = RunNetwork(config, actors, ids);
  run.agreed = true;
  std::optional<Bytes> first;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    PartyResult& result = run.transcript.parties[slot];
    if (!honest[slot]) {
      result.honest = false;
      continue;
    }
    const HonestParty& party = *honest[slot];
    result.phase = party.phase();
    result.abort_reason = party.abort_reason();
    result.ops = party.ops();
    if (party.key()) {
      result.key = party.key()->key;
      run.shared[slot] = party.key()->shared;
    }
    result.key_digest = Digest(result.key);
    if (!result.key) {
      run.agreed = false;
    } else if (!first) {
      first = result.key;
    } else if (*first != *result.key) {
      run.agreed = false;
    }
  }
  return run;
}

HonestRun RunHonestSession(const ScenarioConfig& config) {
  return RunSessionWith(config, ResolveKeys(config));
}

// ---- attacks ---------------------------------------------------------------

AttackOutcome Judge(AttackKind attack, Protocol protocol,
                    attacks::KnowledgeRecord knowledge,
                    attacks::AdversaryResult result,
                    const Transcript& transcript) {
  AttackOutcome outcome;
  outcome.attack = attack;
  outcome.protocol = protocol;
  outcome.knowledge = std::move(knowledge);
  outcome.note = std::move(result.note);
  outcome.intermediates = std::move(result.intermediates);
  if (result.key) outcome.adversary_key = std::move(result.key->key);
  for (const PartyResult& party : transcript.parties) {
    if (party.honest && party.phase == Phase::kAborted) {
      outcome.honest_abort = true;
      if (outcome.abort_reason.empty()) {
        outcome.abort_reason = party.id + ": " + party.abort_reason;
      }
    }
  }
  const PartyResult& a = transcript.parties[kSlotA];
  const PartyResult& b = transcript.parties[kSlotB];
  outcome.victim_key = a.key;
  outcome.success = !outcome.honest_abort && outcome.adversary_key &&
                    a.key && b.key && *outcome.adversary_key == *a.key &&
                    *a.key == *b.key;
  return outcome;
}

AttackRun RunAttackScenario(const ScenarioConfig& config) {
  if (!config.attack) throw ScenarioError("scenario has no attack");
  const AttackKind attack = *config.attack;
  if (!AttackDefinedFor(attack, config.protocol)) {
    throw ScenarioError("attack " + std::string(attacks::AttackName(attack)) +
                        " is not defined for " +
                        std::string(ProtocolTag(config.protocol)));
  }
  const KeyStore keys = ResolveKeys(config);
  const SystemParams& params = keys.params;
  const Ids ids = keys.identities();
  const bool improved = IsImproved(config.protocol);
  Rng adversary_rng(config.adversary_seed);

  attacks::KnowledgeRecord knowledge;
  attacks::AdversaryResult result;
  HonestRun run;

  switch (attack) {
    case AttackKind::kForwardSecrecy: {
      attacks::Xcq11FullKeys grant;
      for (std::size_t slot = 0; slot < kParties; ++slot) {
        if (slot != kSlotC || improved) {
          grant.full_keys[slot] = keys.xcq11()[slot].keys.full_key;
        }
      }
      knowledge = grant.Record();
      run = RunSessionWith(config, keys);
      try {
        result = improved
                     ? attacks::ForwardSecrecyXcq11Improved(
                           params, grant,
                           ViewFromLog<xcq11::ImprovedView>(
                               params, ids, run.transcript.log),
                           adversary_rng)
                     : attacks::ForwardSecrecyXcq11(
                           params, grant,
                           ViewFromLog<xcq11::TranscriptView>(
                               params, ids, run.transcript.log));
      } catch (const Error& e) {
        result.note = e.what();
      }
      break;
    }
    case AttackKind::kSecrets: {
      attacks::Xcq11SecretValues grant;
      for (std::size_t slot = 0; slot < kParties; ++slot) {
        grant.secrets[slot] = keys.xcq11()[slot].keys.secret;
      }
      knowledge = grant.Record();
      run = RunSessionWith(config, keys);
      // DegenerateDenominator propagates: the recipe is undefined there.
      result = improved
                   ? attacks::SecretsXcq11Improved(
                         params, grant,
                         ViewFromLog<xcq11::ImprovedView>(
                             params, ids, run.transcript.log))
                   : attacks::SecretsXcq11(
                         params, grant,
                         ViewFromLog<xcq11::TranscriptView>(
                             params, ids, run.transcript.log));
      break;
    }
    case AttackKind::kKci: {
      attacks::Xcq11FullKeys grant;
      grant.full_keys[kSlotA] = keys.xcq11()[kSlotA].keys.full_key;
      grant.full_keys[kSlotB] = keys.xcq11()[kSlotB].keys.full_key;
      knowledge = grant.Record();
      knowledge.live_session = true;
      if (improved) {
        KciXcq11iActor actor(keys, grant, config.adversary_seed,
                             config.session_id);
        run = RunSessionWith(config, keys, {nullptr, nullptr, &actor});
        result = actor.TakeResult();
      } else {
        KciXcq11Actor actor(keys, grant, config.adversary_seed,
                            config.session_id);
        run = RunSessionWith(config, keys, {nullptr, nullptr, &actor});
        result = actor.TakeResult();
      }
      break;
    }
    case AttackKind::kKciKgc: {
      const auto& users = keys.xcl12();
      attacks::Xcl12KgcKnowledge grant{
          keys.master,
          {users[kSlotA].key.partial, users[kSlotB].key.partial,
           users[kSlotC].key.partial},
          users[kSlotA].key};
      knowledge = grant.Record();
      const xcl12::Announcement public_c =
          xcl12::Announce(users[kSlotC].id, users[kSlotC].key);
      using Actor = Xcl12Actor<attacks::KciKgcXcl12Adversary>;
      Actor actor(
          keys, config.protocol,
          attacks::KciKgcXcl12Adversary(params, grant, public_c, improved,
                                        Rng(config.adversary_seed)),
          config.session_id);
      run = RunSessionWith(config, keys, {nullptr, nullptr, &actor});
      result = actor.TakeResult();
      break;
    }
    case AttackKind::kKciCommon: {
      const auto& users = keys.xcl12();
      attacks::Xcl12CommonKnowledge grant{users[kSlotA].key,
                                          users[kSlotB].key};
      knowledge = grant.Record();
      const xcl12::Announcement public_c =
          xcl12::Announce(users[kSlotC].id, users[kSlotC].key);
      using Actor = Xcl12Actor<attacks::KciCommonXcl12Adversary>;
      Actor actor(
          keys, config.protocol,
          attacks::KciCommonXcl12Adversary(params, grant, public_c, improved,
                                           Rng(config.adversary_seed)),
          config.session_id);
      run = RunSessionWith(config, keys, {nullptr, nullptr, &actor});
      result = actor.TakeResult();
      break;
    }
  }

  AttackRun out;
  out.outcome = Judge(attack, config.protocol, std::move(knowledge),
                      std::move(result), run.transcript);
  if (config.backend != BackendKind::kTransparent) {
    out.outcome.intermediates.clear();
  }
  out.transcript = std::move(run.transcript);
  return out;
}

// ---- operation counts ------------------------------------------------------

OpCountReport CountOperations(const ScenarioConfig& config) {
  if (FamilyOf(config.protocol) != Family::kXcl12) {
    throw ScenarioError("operation counts are defined for xcl12 only");
  }
  ScenarioConfig base = config;
  base.attack.reset();
  if (!base.keys) base.keys = std::make_shared<KeyStore>(ResolveKeys(base));

  OpCountReport report;
  for (Protocol protocol : {Protocol::kXcl12, Protocol::kXcl12Improved}) {
    base.protocol = protocol;
    HonestRun run = RunHonestSession(base);
    auto& counts = protocol == Protocol::kXcl12 ? report.original
                                                : report.improved;
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      counts[slot] = run.transcript.parties[slot].ops.value_or(
          xcl12::OpCounter{});
    }
    (protocol == Protocol::kXcl12 ? report.original_agreed
                                  : report.improved_agreed) = run.agreed;
  }
  return report;
}

// ---- replay ----------------------------------------------------------------

ReplayResult Replay(const ScenarioConfig& config,
                    const Transcript& transcript) {
  ReplayResult replay;
  auto mismatch = [&](std::string what) {
    replay.ok = false;
    replay.mismatches.push_back(std::move(what));
  };
  if (transcript.protocol != config.protocol) {
    mismatch("transcript protocol differs from configuration");
    return replay;
  }
  const KeyStore keys = ResolveKeys(config);
  const Ids ids = keys.identities();
  if (ids != IdsFromLog(transcript)) {
    mismatch("transcript identities differ from key store");
    return replay;
  }

  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const PartyResult& logged = transcript.parties[slot];
    if (!logged.honest) continue;
    const std::string who = "party " + ids[slot];
    auto party = MakeHonestParty(config.protocol, keys, slot,
                                 config.party_seeds[slot],
                                 transcript.session_id);
    for (std::size_t round = 0; round < RoundCount(config.protocol);
         ++round) {
      std::vector<Message> emitted = party->Emit(round);
      std::vector<Message> expected;
      for (const LoggedMessage& entry : transcript.log) {
        if (entry.round == round && entry.message.sender == ids[slot]) {
          expected.push_back(entry.message);
        }
      }
      if (emitted != expected) {
        mismatch(who + " round " + std::to_string(round) +
                 ": regenerated messages differ from the log");
      }
      for (const LoggedMessage& entry : transcript.log) {
        if (entry.round == round && entry.message.sender != ids[slot]) {
          party->Receive(entry.message);
        }
      }
    }
    party->Finish();
    if (party->phase() != logged.phase) {
      mismatch(who + ": phase " + std::string(PhaseName(party->phase())) +
               " != logged " + std::string(PhaseName(logged.phase)));
    }
    const std::string digest = Digest(
        party->key() ? std::optional<Bytes>(party->key()->key) : std::nullopt);
    if (digest != logged.key_digest) {
      mismatch(who + ": key digest differs from the log");
    }
  }
  return replay;
}

}  // namespace claka::harness
