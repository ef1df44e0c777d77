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

// JSON encodings for key stores, scenario configurations, transcripts and
// reports. Objects serialize with sorted keys and all group elements as
// lowercase hex, so equal inputs produce byte-identical documents.

#include <string>

#include <nlohmann/json.hpp>

#include "claka/harness.hpp"

namespace claka::codec {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Pretty-printed, trailing newline.
std::string Dump(const Json& doc);
// Throws DecodeError on malformed JSON.
Json Parse(const std::string& text);

// All decoders throw DecodeError on missing or malformed members.
Json KeyStoreToJson(const harness::KeyStore& keys);
harness::KeyStore KeyStoreFromJson(const Json& doc);

Json MessageToJson(const harness::Message& message);
harness::Message MessageFromJson(const Json& doc);

Json ConfigToJson(const harness::ScenarioConfig& config);
harness::ScenarioConfig ConfigFromJson(const Json& doc);

Json TranscriptToJson(const harness::Transcript& transcript);
harness::Transcript TranscriptFromJson(const Json& doc);

Json OutcomeToJson(const harness::AttackOutcome& outcome);
Json OpCounterToJson(const xcl12::OpCounter& ops);

// Top-level reports; each carries schema_version, kind, config and (for
// session and attack) transcript.
Json SessionReport(const harness::ScenarioConfig& config,
                   const harness::HonestRun& run);
Json AttackReport(const harness::ScenarioConfig& config,
                  const harness::AttackRun& run);
Json OpCountReport(const harness::ScenarioConfig& config,
                   const harness::OpCountReport& report);

struct LoadedReport {
  std::string kind;
  harness::ScenarioConfig config;
  harness::Transcript transcript;
};

// Reads a session or attack report for replay.
LoadedReport ReportFromJson(const Json& doc);

}  // namespace claka::codec
