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

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "claka/bytes.hpp"
#include "claka/keyinfra.hpp"
#include "claka/pairing.hpp"

namespace claka {

inline constexpr std::size_t kParties = 3;

// Slots A, B, C are fixed by lexicographic order of the identity bytes; the
// KDF input lists are written in slot order.
inline constexpr std::size_t kSlotA = 0;
inline constexpr std::size_t kSlotB = 1;
inline constexpr std::size_t kSlotC = 2;

// Sorts identities into slot order. Throws ScenarioError on duplicates.
std::array<Identity, kParties> CanonicalOrder(std::array<Identity, kParties> ids);

// Ephemeral points indexed [sender][recipient]; the diagonal stays empty.
using PairwisePoints =
    std::array<std::array<std::optional<G1Point>, kParties>, kParties>;

struct SessionKey {
  Bytes key;
  // The G2 value fed to the KDF, kept for tests and transparent reports.
  G2Elem shared;
};

// "T[A->B]"-style field name used in MissingTranscriptField.
std::string PairwiseFieldName(std::size_t from, std::size_t to);
std::string SlotName(std::size_t slot);

}  // namespace claka
