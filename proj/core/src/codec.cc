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

#include "claka/codec.hpp"

#include <stdexcept>
#include <utility>

#include "claka/errors.hpp"
#include "claka/hash.hpp"

namespace claka::codec {

namespace {

using harness::Family;
using harness::KeyStore;

template <typename T>
T Get(const Json& doc, const char* name) {
  try {
    return doc.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DecodeError(std::string("member '") + name + "': " + e.what());
  }
}

const Json& Member(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw DecodeError(std::string("missing member '") + name + "'");
  }
  return doc.at(name);
}

std::string Hex(const Bytes& bytes) { return ToHex(bytes); }

Scalar ScalarAt(const GroupHandle& group, const Json& doc, const char* name) {
  return group->DecodeScalar(FromHex(Get<std::string>(doc, name)));
}

G1Point PointAt(const GroupHandle& group, const Json& doc, const char* name) {
  return group->DecodeG1(FromHex(Get<std::string>(doc, name)));
}

BackendKind ParseBackend(const std::string& name) {
  if (name == BackendName(BackendKind::kTransparent)) {
    return BackendKind::kTransparent;
  }
  if (name == BackendName(BackendKind::kCryptographic)) {
    return BackendKind::kCryptographic;
  }
  throw DecodeError("unknown backend '" + name + "'");
}

harness::Protocol ProtocolAt(const Json& doc, const char* name) {
  const auto tag = Get<std::string>(doc, name);
  auto protocol = harness::ParseProtocol(tag);
  if (!protocol) throw DecodeError("unknown protocol '" + tag + "'");
  return *protocol;
}

harness::Phase ParsePhase(const std::string& name) {
  for (auto phase : {harness::Phase::kInit, harness::Phase::kAnnounced,
                     harness::Phase::kFlowsSent, harness::Phase::kDerived,
                     harness::Phase::kAborted}) {
    if (harness::PhaseName(phase) == name) return phase;
  }
  throw DecodeError("unknown phase '" + name + "'");
}

std::string KeyDigest(const std::optional<Bytes>& key) {
  return key ? ToHex(Sha256(*key)) : std::string();
}

Json Header(std::string_view kind, const harness::ScenarioConfig& config) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["config"] = ConfigToJson(config);
  return doc;
}

}  // namespace

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json Parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DecodeError(std::string("invalid JSON: ") + e.what());
  }
}

// ---- key store -------------------------------------------------------------

Json KeyStoreToJson(const KeyStore& keys) {
  const SystemParams& params = keys.params;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["family"] = harness::FamilyName(keys.family);
  doc["backend"] = BackendName(params.group->kind());
  doc["profile"] = params.group->profile();
  doc["key_bits"] = params.key_bits;
  doc["params"] = {{"P", Hex(params.p.Serialize())},
                   {"P0", Hex(params.p0.Serialize())}};
  doc["master_key"] = Hex(keys.master.x.Serialize());
  Json users = Json::array();
  if (keys.family == Family::kXcq11) {
    for (const auto& user : keys.xcq11()) {
      users.push_back({{"id", user.id},
                       {"partial_key", Hex(user.partial.s.Serialize())},
                       {"secret_value", Hex(user.keys.secret.Serialize())},
                       {"public_key", Hex(user.keys.upk.Serialize())},
                       {"full_key", Hex(user.keys.full_key.Serialize())}});
    }
  } else {
    for (const auto& user : keys.xcl12()) {
      users.push_back(
          {{"id", user.id},
           {"partial_key", Hex(user.key.partial.s.Serialize())},
           {"r_point", Hex(user.key.partial.r_point.Serialize())},
           {"secret_value", Hex(user.key.user.secret.Serialize())},
           {"public_key", Hex(user.key.user.upk.Serialize())}});
    }
  }
  doc["users"] = std::move(users);
  return doc;
}

KeyStore KeyStoreFromJson(const Json& doc) {
  if (Get<int>(doc, "schema_version") != kSchemaVersion) {
    throw DecodeError("unsupported key store schema version");
  }
  KeyStore keys;
  const auto family = Get<std::string>(doc, "family");
  if (family == "xcq11") {
    keys.family = Family::kXcq11;
  } else if (family == "xcl12") {
    keys.family = Family::kXcl12;
  } else {
    throw DecodeError("unknown key family '" + family + "'");
  }
  GroupHandle group;
  try {
    group = MakeGroup(ParseBackend(Get<std::string>(doc, "backend")),
                      Get<std::string>(doc, "profile"));
  } catch (const std::invalid_argument& e) {
    throw DecodeError(e.what());
  }
  const Json& params = Member(doc, "params");
  keys.params.group = group;
  keys.params.p = PointAt(group, params, "P");
  keys.params.p0 = PointAt(group, params, "P0");
  keys.params.key_bits = Get<std::size_t>(doc, "key_bits");
  if (keys.params.p != group->Generator()) {
    throw DecodeError("P is not the group generator");
  }
  keys.master.x = ScalarAt(group, doc, "master_key");

  const Json& users = Member(doc, "users");
  if (!users.is_array() || users.size() != kParties) {
    throw DecodeError("key store must hold exactly three users");
  }
  std::array<Identity, kParties> ids;
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    ids[slot] = Get<std::string>(users[slot], "id");
  }
  if (CanonicalOrder(ids) != ids) {
    throw DecodeError("key store users are not in slot order");
  }
  if (keys.family == Family::kXcq11) {
    std::array<harness::Xcq11Credentials, kParties> creds;
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      const Json& u = users[slot];
      creds[slot].id = ids[slot];
      creds[slot].partial.s = PointAt(group, u, "partial_key");
      creds[slot].keys.secret = ScalarAt(group, u, "secret_value");
      creds[slot].keys.upk = PointAt(group, u, "public_key");
      creds[slot].keys.full_key = PointAt(group, u, "full_key");
    }
    keys.users = std::move(creds);
  } else {
    std::array<harness::Xcl12Credentials, kParties> creds;
    for (std::size_t slot = 0; slot < kParties; ++slot) {
      const Json& u = users[slot];
      creds[slot].id = ids[slot];
      creds[slot].key.partial.s = ScalarAt(group, u, "partial_key");
      creds[slot].key.partial.r_point = PointAt(group, u, "r_point");
      creds[slot].key.user.secret = ScalarAt(group, u, "secret_value");
      creds[slot].key.user.upk = PointAt(group, u, "public_key");
    }
    keys.users = std::move(creds);
  }
  return keys;
}

// ---- messages --------------------------------------------------------------

Json MessageToJson(const harness::Message& message) {
  return {{"session_id", message.session_id},
          {"sender", message.sender},
          {"protocol_tag", message.protocol_tag},
          {"kind", message.kind},
          {"fields", message.fields}};
}

harness::Message MessageFromJson(const Json& doc) {
  harness::Message message;
  message.session_id = Get<std::string>(doc, "session_id");
  message.sender = Get<std::string>(doc, "sender");
  message.protocol_tag = Get<std::string>(doc, "protocol_tag");
  message.kind = Get<std::string>(doc, "kind");
  message.fields =
      Get<std::map<std::string, std::string>>(doc, "fields");
  return message;
}

// ---- configuration ---------------------------------------------------------

Json ConfigToJson(const harness::ScenarioConfig& config) {
  Json doc;
  doc["protocol"] = harness::ProtocolTag(config.protocol);
  doc["backend"] = BackendName(config.backend);
  doc["profile"] = config.profile;
  doc["identities"] = config.identities;
  doc["key_bits"] = config.key_bits;
  doc["session_id"] = config.session_id;
  doc["keygen_seed"] = config.keygen_seed;
  doc["party_seeds"] = config.party_seeds;
  doc["adversary_seed"] = config.adversary_seed;
  doc["attack"] = config.attack
                      ? Json(attacks::AttackName(*config.attack))
                      : Json(nullptr);
  if (config.keys) doc["keys"] = KeyStoreToJson(*config.keys);
  return doc;
}

harness::ScenarioConfig ConfigFromJson(const Json& doc) {
  harness::ScenarioConfig config;
  config.protocol = ProtocolAt(doc, "protocol");
  config.backend = ParseBackend(Get<std::string>(doc, "backend"));
  config.profile = Get<std::string>(doc, "profile");
  config.identities =
      Get<std::array<Identity, kParties>>(doc, "identities");
  config.key_bits = Get<std::size_t>(doc, "key_bits");
  config.session_id = Get<std::string>(doc, "session_id");
  config.keygen_seed = Get<std::uint64_t>(doc, "keygen_seed");
  config.party_seeds =
      Get<std::array<std::uint64_t, kParties>>(doc, "party_seeds");
  config.adversary_seed = Get<std::uint64_t>(doc, "adversary_seed");
  const Json& attack = Member(doc, "attack");
  if (!attack.is_null()) {
    auto kind = attacks::ParseAttack(attack.get<std::string>());
    if (!kind) throw DecodeError("unknown attack in configuration");
    config.attack = kind;
  }
  if (doc.contains("keys")) {
    config.keys =
        std::make_shared<KeyStore>(KeyStoreFromJson(doc.at("keys")));
  }
  return config;
}

// ---- transcripts -----------------------------------------------------------

Json OpCounterToJson(const xcl12::OpCounter& ops) {
  return {{"point_additions", ops.point_additions},
          {"scalar_multiplications", ops.scalar_multiplications},
          {"pairings", ops.pairings},
          {"g2_exponentiations", ops.g2_exponentiations}};
}

Json TranscriptToJson(const harness::Transcript& transcript) {
  Json messages = Json::array();
  for (const auto& entry : transcript.log) {
    messages.push_back(
        {{"round", entry.round}, {"message", MessageToJson(entry.message)}});
  }
  Json parties = Json::array();
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const harness::PartyResult& p = transcript.parties[slot];
    Json party = {{"slot", SlotName(slot)},
                  {"id", p.id},
                  {"honest", p.honest}};
    if (p.honest) {
      party["phase"] = harness::PhaseName(p.phase);
      party["key_digest"] = p.key_digest;
      party["abort_reason"] = p.abort_reason;
      if (p.ops) party["ops"] = OpCounterToJson(*p.ops);
    }
    parties.push_back(std::move(party));
  }
  return {{"session_id", transcript.session_id},
          {"protocol", harness::ProtocolTag(transcript.protocol)},
          {"messages", std::move(messages)},
          {"parties", std::move(parties)}};
}

harness::Transcript TranscriptFromJson(const Json& doc) {
  harness::Transcript transcript;
  transcript.session_id = Get<std::string>(doc, "session_id");
  transcript.protocol = ProtocolAt(doc, "protocol");
  for (const Json& entry : Member(doc, "messages")) {
    transcript.log.push_back(harness::LoggedMessage{
        Get<std::size_t>(entry, "round"),
        MessageFromJson(Member(entry, "message"))});
  }
  const Json& parties = Member(doc, "parties");
  if (!parties.is_array() || parties.size() != kParties) {
    throw DecodeError("transcript must list three parties");
  }
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const Json& p = parties[slot];
    harness::PartyResult& result = transcript.parties[slot];
    result.id = Get<std::string>(p, "id");
    result.honest = Get<bool>(p, "honest");
    if (result.honest) {
      result.phase = ParsePhase(Get<std::string>(p, "phase"));
      result.key_digest = Get<std::string>(p, "key_digest");
      result.abort_reason = Get<std::string>(p, "abort_reason");
    }
  }
  return transcript;
}

// ---- reports ---------------------------------------------------------------

Json OutcomeToJson(const harness::AttackOutcome& outcome) {
  Json intermediates = Json::array();
  for (const auto& [step, value] : outcome.intermediates) {
    intermediates.push_back({{"step", step}, {"value", ToHex(value)}});
  }
  return {{"attack", attacks::AttackName(outcome.attack)},
          {"protocol", harness::ProtocolTag(outcome.protocol)},
          {"knowledge",
           {{"items", outcome.knowledge.items},
            {"live_session", outcome.knowledge.live_session}}},
          {"adversary_key_digest", KeyDigest(outcome.adversary_key)},
          {"victim_key_digest", KeyDigest(outcome.victim_key)},
          {"honest_abort", outcome.honest_abort},
          {"abort_reason", outcome.abort_reason},
          {"note", outcome.note},
          {"success", outcome.success},
          {"intermediates", std::move(intermediates)}};
}

Json SessionReport(const harness::ScenarioConfig& config,
                   const harness::HonestRun& run) {
  Json doc = Header("session", config);
  doc["transcript"] = TranscriptToJson(run.transcript);
  doc["agreed"] = run.agreed;
  return doc;
}

Json AttackReport(const harness::ScenarioConfig& config,
                  const harness::AttackRun& run) {
  Json doc = Header("attack", config);
  doc["transcript"] = TranscriptToJson(run.transcript);
  doc["outcome"] = OutcomeToJson(run.outcome);
  return doc;
}

Json OpCountReport(const harness::ScenarioConfig& config,
                   const harness::OpCountReport& report) {
  Json doc = Header("count-ops", config);
  Json parties = Json::array();
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const auto& o = report.original[slot];
    const auto& i = report.improved[slot];
    auto delta = [](std::uint64_t after, std::uint64_t before) {
      return static_cast<std::int64_t>(after) -
             static_cast<std::int64_t>(before);
    };
    parties.push_back(
        {{"slot", SlotName(slot)},
         {"original", OpCounterToJson(o)},
         {"improved", OpCounterToJson(i)},
         {"delta",
          {{"point_additions", delta(i.point_additions, o.point_additions)},
           {"scalar_multiplications",
            delta(i.scalar_multiplications, o.scalar_multiplications)},
           {"pairings", delta(i.pairings, o.pairings)},
           {"g2_exponentiations",
            delta(i.g2_exponentiations, o.g2_exponentiations)}}}});
  }
  doc["parties"] = std::move(parties);
  doc["agreed"] = {{"original", report.original_agreed},
                   {"improved", report.improved_agreed}};
  return doc;
}

LoadedReport ReportFromJson(const Json& doc) {
  if (Get<int>(doc, "schema_version") != kSchemaVersion) {
    throw DecodeError("unsupported report schema version");
  }
  LoadedReport report;
  report.kind = Get<std::string>(doc, "kind");
  if (report.kind != "session" && report.kind != "attack") {
    throw DecodeError("report kind '" + report.kind + "' has no transcript");
  }
  report.config = ConfigFromJson(Member(doc, "config"));
  report.transcript = TranscriptFromJson(Member(doc, "transcript"));
  return report;
}

}  // namespace claka::codec
