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

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "claka/codec.hpp"
#include "claka/errors.hpp"
#include "claka/harness.hpp"
#include "claka/rng.hpp"

namespace claka::cli {

namespace {

using harness::Protocol;

// Carries an exit code out of a command body.
struct Exit {
  int code;
  std::string message;
};

struct Options {
  std::string protocol;
  std::string attack;
  std::string backend = "transparent";
  std::string profile;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> ids;
  std::size_t key_bits = 256;
  std::string keys_path;
  std::string out_path;
  std::string replay_path;
  int verbosity = 0;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitIo, "cannot read " + path};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

codec::Json LoadJson(const std::string& path) {
  try {
    return codec::Parse(ReadFile(path));
  } catch (const DecodeError& e) {
    throw Exit{kExitIo, path + ": " + e.what()};
  }
}

void Emit(const Options& opts, const codec::Json& doc, std::ostream& out) {
  const std::string text = codec::Dump(doc);
  if (opts.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << text) || !file.flush()) {
    throw Exit{kExitIo, "cannot write " + opts.out_path};
  }
}

// Summaries go to stdout when the report went to a file, else to stderr.
std::ostream& SummaryStream(const Options& opts, std::ostream& out,
                            std::ostream& err) {
  return opts.out_path.empty() ? err : out;
}

Protocol ProtocolOf(const std::string& tag) {
  auto protocol = harness::ParseProtocol(tag);
  if (!protocol) throw Exit{kExitUsage, "unknown protocol '" + tag + "'"};
  return *protocol;
}

BackendKind BackendOf(const std::string& name) {
  if (name == "transparent") return BackendKind::kTransparent;
  if (name == "crypto") return BackendKind::kCryptographic;
  throw Exit{kExitUsage, "unknown backend '" + name + "'"};
}

harness::KeyStore LoadKeys(const std::string& path) {
  try {
    return codec::KeyStoreFromJson(LoadJson(path));
  } catch (const DecodeError& e) {
    throw Exit{kExitIo, path + ": " + e.what()};
  } catch (const ScenarioError& e) {
    throw Exit{kExitIo, path + ": " + e.what()};
  }
}

harness::ScenarioConfig BuildConfig(const Options& opts, Protocol protocol,
                                    bool backend_given) {
  const std::uint64_t seed = opts.seed ? *opts.seed : Rng::EntropySeed();
  BackendKind backend = BackendOf(opts.backend);
  std::string profile = opts.profile;
  std::shared_ptr<const harness::KeyStore> keys;
  if (!opts.keys_path.empty()) {
    keys = std::make_shared<harness::KeyStore>(LoadKeys(opts.keys_path));
    const GroupHandle& group = keys->params.group;
    if (backend_given && group->kind() != backend) {
      throw Exit{kExitUsage, "--backend conflicts with the key file"};
    }
    if (!profile.empty() && profile != group->profile()) {
      throw Exit{kExitUsage, "--profile conflicts with the key file"};
    }
    backend = group->kind();
    profile = group->profile();
    if (keys->family != harness::FamilyOf(protocol)) {
      throw Exit{kExitUsage, "key file is for the " +
                                 std::string(harness::FamilyName(keys->family)) +
                                 " family"};
    }
  }
  if (!profile.empty() && backend == BackendKind::kTransparent &&
      profile != "small" && profile != "p256") {
    throw Exit{kExitUsage, "unknown transparent profile '" + profile + "'"};
  }
  if (!profile.empty() && backend == BackendKind::kCryptographic &&
      profile != DefaultProfile(backend)) {
    throw Exit{kExitUsage, "unknown crypto profile '" + profile + "'"};
  }
  auto config =
      harness::ScenarioConfig::FromSeed(protocol, backend, profile, seed);
  config.key_bits = opts.key_bits;
  if (keys) {
    config.identities = keys->identities();
    config.key_bits = keys->params.key_bits;
    config.keys = std::move(keys);
  } else if (!opts.ids.empty()) {
    std::array<Identity, kParties> ids{opts.ids[0], opts.ids[1], opts.ids[2]};
    try {
      config.identities = CanonicalOrder(ids);
    } catch (const ScenarioError& e) {
      throw Exit{kExitUsage, e.what()};
    }
  }
  return config;
}

int ReplayReport(const Options& opts, const std::string& path,
                 std::ostream& out, std::ostream& err) {
  codec::LoadedReport report;
  try {
    report = codec::ReportFromJson(LoadJson(path));
  } catch (const DecodeError& e) {
    throw Exit{kExitIo, path + ": " + e.what()};
  }
  const harness::ReplayResult result =
      harness::Replay(report.config, report.transcript);
  codec::Json doc;
  doc["schema_version"] = codec::kSchemaVersion;
  doc["kind"] = "replay";
  doc["source_kind"] = report.kind;
  doc["ok"] = result.ok;
  doc["mismatches"] = result.mismatches;
  Emit(opts, doc, out);
  std::ostream& summary = SummaryStream(opts, out, err);
  summary << "replay " << (result.ok ? "ok" : "MISMATCH") << ": " << path
          << "\n";
  for (const auto& m : result.mismatches) summary << "  " << m << "\n";
  return result.ok ? kExitOk : kExitUnexpected;
}

int CmdKeygen(const Options& opts, bool backend_given, std::ostream& out,
              std::ostream& err) {
  const Protocol protocol = ProtocolOf(opts.protocol);
  const auto config = BuildConfig(opts, protocol, backend_given);
  const harness::KeyStore keys = harness::ResolveKeys(config);
  Emit(opts, codec::KeyStoreToJson(keys), out);
  if (opts.verbosity > 0) {
    err << "keygen: " << harness::FamilyName(keys.family) << " keys for";
    for (const auto& id : keys.identities()) err << " " << id;
    err << "\n";
  }
  return kExitOk;
}

int CmdRun(const Options& opts, bool backend_given, std::ostream& out,
           std::ostream& err) {
  if (!opts.replay_path.empty()) {
    return ReplayReport(opts, opts.replay_path, out, err);
  }
  const Protocol protocol = ProtocolOf(opts.protocol);
  const auto config = BuildConfig(opts, protocol, backend_given);
  const harness::HonestRun run = harness::RunHonestSession(config);
  Emit(opts, codec::SessionReport(config, run), out);

  std::ostream& summary = SummaryStream(opts, out, err);
  bool aborted = false;
  for (const auto& party : run.transcript.parties) {
    if (party.phase == harness::Phase::kAborted) {
      aborted = true;
      summary << "abort: " << party.id << ": " << party.abort_reason << "\n";
    } else if (opts.verbosity > 0) {
      summary << party.id << " " << harness::PhaseName(party.phase) << " "
              << party.key_digest << "\n";
    }
  }
  summary << harness::ProtocolTag(protocol) << " session "
          << config.session_id << ": "
          << (run.agreed ? "agreement" : aborted ? "aborted" : "DISAGREEMENT")
          << "\n";
  if (run.agreed) return kExitOk;
  return aborted ? kExitAbort : kExitUnexpected;
}

int CmdAttack(const Options& opts, bool backend_given, std::ostream& out,
              std::ostream& err) {
  const Protocol protocol = ProtocolOf(opts.protocol);
  auto attack = attacks::ParseAttack(opts.attack);
  if (!attack) throw Exit{kExitUsage, "unknown attack '" + opts.attack + "'"};
  if (!harness::AttackDefinedFor(*attack, protocol)) {
    throw Exit{kExitUsage, "attack " + opts.attack + " is not defined for " +
                               opts.protocol};
  }
  auto config = BuildConfig(opts, protocol, backend_given);
  config.attack = attack;
  const harness::AttackRun run = harness::RunAttackScenario(config);
  Emit(opts, codec::AttackReport(config, run), out);

  const harness::AttackOutcome& outcome = run.outcome;
  const bool improved = harness::IsImproved(protocol);
  // The signed repair must stop kci by abort, not by key mismatch alone.
  const bool abort_expected =
      improved && *attack == attacks::AttackKind::kKci;
  const bool expected = outcome.success == !improved &&
                        outcome.honest_abort == abort_expected;

  std::ostream& summary = SummaryStream(opts, out, err);
  summary << "attack " << opts.attack << " vs " << opts.protocol << ": "
          << (outcome.success ? "success" : "failure");
  if (outcome.honest_abort) summary << " (abort: " << outcome.abort_reason << ")";
  summary << (expected ? "" : " [unexpected]") << "\n";
  if (opts.verbosity > 0 && !outcome.note.empty()) {
    summary << "  note: " << outcome.note << "\n";
  }
  return expected ? kExitOk : kExitUnexpected;
}

int CmdCountOps(const Options& opts, bool backend_given, std::ostream& out,
                std::ostream& err) {
  const Protocol protocol =
      ProtocolOf(opts.protocol.empty() ? "xcl12" : opts.protocol);
  if (harness::FamilyOf(protocol) != harness::Family::kXcl12) {
    throw Exit{kExitUsage, "count-ops is defined for xcl12 and xcl12i"};
  }
  const auto config = BuildConfig(opts, protocol, backend_given);
  const harness::OpCountReport report = harness::CountOperations(config);
  Emit(opts, codec::OpCountReport(config, report), out);

  bool claim_holds = report.original_agreed && report.improved_agreed;
  std::ostream& summary = SummaryStream(opts, out, err);
  for (std::size_t slot = 0; slot < kParties; ++slot) {
    const auto& o = report.original[slot];
    const auto& i = report.improved[slot];
    const auto add_delta = static_cast<long long>(i.point_additions) -
                           static_cast<long long>(o.point_additions);
    const auto pairing_delta = static_cast<long long>(i.pairings) -
                               static_cast<long long>(o.pairings);
    claim_holds = claim_holds && add_delta == 4 && pairing_delta == 0;
    summary << SlotName(slot) << ": point additions " << o.point_additions
            << " -> " << i.point_additions << " (" << std::showpos
            << add_delta << "), pairings " << std::noshowpos << o.pairings
            << " -> " << i.pairings << "\n";
  }
  return claim_holds ? kExitOk : kExitUnexpected;
}

void AddScenarioFlags(CLI::App* cmd, Options& opts, bool protocol_required) {
  auto* protocol =
      cmd->add_option("--protocol", opts.protocol, "xcq11|xcq11i|xcl12|xcl12i")
          ->check(CLI::IsMember({"xcq11", "xcq11i", "xcl12", "xcl12i"}));
  if (protocol_required) protocol->required();
  cmd->add_option("--backend", opts.backend, "transparent|crypto")
      ->check(CLI::IsMember({"transparent", "crypto"}));
  cmd->add_option("--profile", opts.profile,
                  "small|p256 (transparent), type-a-512 (crypto)");
  cmd->add_option("--seed", opts.seed, "base seed for all randomness");
  cmd->add_option("--ids", opts.ids, "three identities, comma separated")
      ->delimiter(',')
      ->expected(3);
  cmd->add_option("--key-bits", opts.key_bits, "session key length in bits")
      ->check(CLI::Range(8, 4096));
  cmd->add_option("--out", opts.out_path, "write the JSON report here");
  cmd->add_flag("-v,--verbose", opts.verbosity, "more detail");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Certificateless three-party key agreement lab", "claka"};
  app.require_subcommand(1);
  Options opts;

  auto* keygen = app.add_subcommand("keygen", "generate KGC and user keys");
  AddScenarioFlags(keygen, opts, true);

  auto* run = app.add_subcommand("run", "run one honest session");
  AddScenarioFlags(run, opts, false);
  run->add_option("--keys", opts.keys_path, "key file from keygen");
  run->add_option("--replay", opts.replay_path,
                  "replay a stored report instead of running");

  auto* attack = app.add_subcommand("attack", "run one attack scenario");
  AddScenarioFlags(attack, opts, true);
  attack->add_option("--keys", opts.keys_path, "key file from keygen");
  auto* attack_pos =
      attack->add_option("name", opts.attack,
                         "fs|kci|secrets|kci-kgc|kci-common");
  auto* attack_flag = attack->add_option("--attack", opts.attack,
                                         "same as the positional name");
  attack_pos->excludes(attack_flag);
  for (auto* opt : {attack_pos, attack_flag}) {
    opt->check(CLI::IsMember({"fs", "kci", "secrets", "kci-kgc",
                              "kci-common"}));
  }

  auto* count = app.add_subcommand("count-ops",
                                   "compare xcl12 and xcl12i operation counts");
  AddScenarioFlags(count, opts, false);
  count->add_option("--keys", opts.keys_path, "key file from keygen");

  auto* replay = app.add_subcommand("replay", "replay a stored report");
  auto* replay_pos = replay->add_option("report", opts.replay_path,
                                        "session or attack report");
  auto* replay_flag =
      replay->add_option("--replay", opts.replay_path, "same as positional");
  replay_pos->excludes(replay_flag);
  replay->add_option("--out", opts.out_path, "write the JSON result here");
  replay->add_flag("-v,--verbose", opts.verbosity, "more detail");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (attack->parsed() && opts.attack.empty()) {
      throw CLI::RequiredError("attack name");
    }
    if (replay->parsed() && opts.replay_path.empty()) {
      throw CLI::RequiredError("report");
    }
    if (run->parsed() && opts.replay_path.empty() && opts.protocol.empty()) {
      throw CLI::RequiredError("--protocol");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    auto given = [](CLI::App* cmd) {
      return cmd->count("--backend") > 0;
    };
    if (keygen->parsed()) return CmdKeygen(opts, given(keygen), out, err);
    if (run->parsed()) return CmdRun(opts, given(run), out, err);
    if (attack->parsed()) return CmdAttack(opts, given(attack), out, err);
    if (count->parsed()) return CmdCountOps(opts, given(count), out, err);
    return ReplayReport(opts, opts.replay_path, out, err);
  } catch (const Exit& e) {
    err << "claka: " << e.message << "\n";
    return e.code;
  } catch (const DegenerateDenominator& e) {
    err << "claka: degenerate denominator: " << e.what() << "\n";
    return kExitCrypto;
  } catch (const DegenerateScalar& e) {
    err << "claka: degenerate scalar: " << e.what() << "\n";
    return kExitCrypto;
  } catch (const ScenarioError& e) {
    err << "claka: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "claka: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace claka::cli
