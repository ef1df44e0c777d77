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

#include "claka/session.hpp"

#include <algorithm>

#include "claka/errors.hpp"

namespace claka {

std::array<Identity, kParties> CanonicalOrder(
    std::array<Identity, kParties> ids) {
  std::sort(ids.begin(), ids.end());
  if (ids[0] == ids[1] || ids[1] == ids[2]) {
    throw ScenarioError("session identities must be distinct");
  }
  return ids;
}

std::string SlotName(std::size_t slot) {
  return std::string(1, static_cast<char>('A' + slot));
}

std::string PairwiseFieldName(std::size_t from, std::size_t to) {
  return "T[" + SlotName(from) + "->" + SlotName(to) + "]";
}

}  // namespace claka
