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

// Scenario harness: key generation for one KGC and three users, a lock-step
// broadcast network with three actor slots, honest party state machines,
// attack scenarios with harness-side judging, operation counting, and
// deterministic replay.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "claka/attacks.hpp"
#include "claka/keyinfra.hpp"
#include "claka/session.hpp"
#include "claka/xcl12.hpp"
#include "claka/xcq11.hpp"

namespace claka::harness {

using attacks::AttackKind;

enum class Protocol { kXcq11, kXcq11Improved, kXcl12, kXcl12Improved };
enum class Family { kXcq11, kXcl12 };

std::string_view ProtocolTag(Protocol protocol);  // xcq11, xcq11i, ...
std::optional<Protocol> ParseProtocol(std::string_view tag);
Family FamilyOf(Protocol protocol);
std::string_view FamilyName(Family family);
bool IsImproved(Protocol protocol);
std::size_t RoundCount(Protocol protocol);

// fs and secrets target the xcq11 family, kci-kgc and kci-common the xcl12
// family, and kci only xcq11.
bool AttackDefinedFor(AttackKind attack, Protocol protocol);

// ---- key material ----------------------------------------------------------

struct Xcq11Credentials {
  Identity id;
  xcq11::PartialKey partial;
  xcq11::UserKeys keys;
};

struct Xcl12Credentials {
  Identity id;
  xcl12::FullKey key;
};

// One KGC and three users, in slot order.
struct KeyStore {
  Family family = Family::kXcq11;
  SystemParams params;
  MasterKey master;
  std::variant<std::array<Xcq11Credentials, kParties>,
               std::array<Xcl12Credentials, kParties>>
      users;

  const std::array<Xcq11Credentials, kParties>& xcq11() const;
  const std::array<Xcl12Credentials, kParties>& xcl12() const;
  std::array<Identity, kParties> identities() const;
};

// Deterministic in (family, group, identities, seed). On the xcq11 family
// a master key with x + q_U = 0 for some user is discarded and redrawn.
KeyStore GenerateKeyStore(Family family, GroupHandle group,
                          std::array<Identity, kParties> identities,
                          std::uint64_t seed, std::size_t key_bits = 256);

// ---- scenario --------------------------------------------------------------

struct ScenarioConfig {
  Protocol protocol = Protocol::kXcq11;
  BackendKind backend = BackendKind::kTransparent;
  std::string profile = "p256";
  std::array<Identity, kParties> identities{"alice", "bob", "carol"};
  std::size_t key_bits = 256;
  std::string session_id;
  std::uint64_t keygen_seed = 0;
  std::array<std::uint64_t, kParties> party_seeds{};  // by slot
  std::uint64_t adversary_seed = 0;
  std::optional<AttackKind> attack;
  // Replaces keygen_seed-based generation when present.
  std::shared_ptr<const KeyStore> keys;

  // All seeds and the session id derived from one base seed.
  static ScenarioConfig FromSeed(Protocol protocol, BackendKind backend,
                                 std::string profile, std::uint64_t seed);
};

GroupHandle GroupFor(const ScenarioConfig& config);
// The configured key store, or one generated from keygen_seed.
KeyStore ResolveKeys(const ScenarioConfig& config);

// ---- network ---------------------------------------------------------------

// Wire envelope. Field values are lowercase hex; names are kept sorted.
struct Message {
  std::string session_id;
  Identity sender;
  std::string protocol_tag;
  std::string kind;  // "flows" or "announce"
  std::map<std::string, std::string> fields;

  friend bool operator==(const Message&, const Message&) = default;
};

struct LoggedMessage {
  std::size_t round = 0;
  Message message;
};

enum class Phase { kInit, kAnnounced, kFlowsSent, kDerived, kAborted };
std::string_view PhaseName(Phase phase);

// One network slot: an honest party or an adversary.
class SlotActor {
 public:
  virtual ~SlotActor() = default;
  virtual std::vector<Message> Emit(std::size_t round) = 0;
  virtual void Receive(const Message& message) = 0;
  virtual void Finish() = 0;
};

class HonestParty : public SlotActor {
 public:
  Phase phase() const { return phase_; }
  const std::optional<SessionKey>& key() const { return key_; }
  const std::string& abort_reason() const { return abort_reason_; }
  virtual std::optional<xcl12::OpCounter> ops() const { return std::nullopt; }

 protected:
  // Phases only move forward; kAborted is terminal.
  void Advance(Phase next);
  void Abort(std::string reason);
  void Complete(SessionKey key);

 private:
  Phase phase_ = Phase::kInit;
  std::optional<SessionKey> key_;
  std::string abort_reason_;
};

std::unique_ptr<HonestParty> MakeHonestParty(Protocol protocol,
                                             const KeyStore& keys,
                                             std::size_t slot,
                                             std::uint64_t seed,
                                             std::string session_id);

struct PartyResult {
  Identity id;
  Phase phase = Phase::kInit;
  bool honest = true;
  std::optional<Bytes> key;  // in memory only
  std::string key_digest;    // SHA-256 hex of key, empty if none
  std::string abort_reason;
  std::optional<xcl12::OpCounter> ops;
};

struct Transcript {
  std::string session_id;
  Protocol protocol = Protocol::kXcq11;
  std::vector<LoggedMessage> log;  // append-only, in delivery order
  std::array<PartyResult, kParties> parties;
};

// Lock-step reliable broadcast: in each round every slot emits, then every
// message is delivered to all other slots in emission order.
Transcript RunNetwork(const ScenarioConfig& config,
                      std::array<SlotActor*, kParties> actors,
                      const std::array<Identity, kParties>& ids);

// ---- sessions --------------------------------------------------------------

struct HonestRun {
  Transcript transcript;
  // Shared G2 value per slot, kept for oracle tests.
  std::array<std::optional<G2Elem>, kParties> shared;
  bool agreed = false;  // all three derived the same key
};

HonestRun RunHonestSession(const ScenarioConfig& config);

// Same as RunHonestSession, with caller-owned actors in some slots. Null
// slots get honest parties.
HonestRun RunSessionWith(const ScenarioConfig& config, const KeyStore& keys,
                         std::array<SlotActor*, kParties> overrides = {});

struct AttackOutcome {
  AttackKind attack = AttackKind::kForwardSecrecy;
  Protocol protocol = Protocol::kXcq11;
  attacks::KnowledgeRecord knowledge;
  std::optional<Bytes> adversary_key;
  std::optional<Bytes> victim_key;  // K_A
  bool honest_abort = false;
  std::string abort_reason;
  std::string note;
  bool success = false;
  std::vector<std::pair<std::string, Bytes>> intermediates;
};

struct AttackRun {
  Transcript transcript;
  AttackOutcome outcome;
};

// Throws ScenarioError if the attack is undefined for the protocol, and
// DegenerateDenominator if the secrets recipe meets colliding identity
// hashes.
AttackRun RunAttackScenario(const ScenarioConfig& config);

// Success iff the adversary key is byte-equal to K_A and K_B, with no
// honest abort.
AttackOutcome Judge(AttackKind attack, Protocol protocol,
                    attacks::KnowledgeRecord knowledge,
                    attacks::AdversaryResult result,
                    const Transcript& transcript);

struct OpCountReport {
  std::array<xcl12::OpCounter, kParties> original;
  std::array<xcl12::OpCounter, kParties> improved;
  bool original_agreed = false;
  bool improved_agreed = false;
};

// Runs xcl12 and xcl12i with identical seeds.
OpCountReport CountOperations(const ScenarioConfig& config);

struct ReplayResult {
  bool ok = true;
  std::vector<std::string> mismatches;
};

// Rebuilds every honest slot from its seed, checks that its emissions match
// the log, feeds it the other logged messages and compares key digests.
ReplayResult Replay(const ScenarioConfig& config, const Transcript& transcript);

}  // namespace claka::harness
