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

#include "claka/rng.hpp"

#include "claka/bytes.hpp"
#include "claka/hash.hpp"

namespace claka {

void Rng::Fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t word = engine_();
    for (int k = 0; k < 8 && i < out.size(); ++k, ++i) {
      out[i] = static_cast<std::uint8_t>(word >> (8 * k));
    }
  }
}

std::uint64_t Rng::EntropySeed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

std::uint64_t DeriveSeed(std::uint64_t base, std::string_view label) {
  Bytes seed_bytes(8);
  for (int i = 0; i < 8; ++i) {
    seed_bytes[i] = static_cast<std::uint8_t>(base >> (56 - 8 * i));
  }
  const Bytes parts[] = {seed_bytes, ToBytes(label)};
  Bytes digest = ExpandHash("claka/seed", parts, 8);
  std::uint64_t out = 0;
  for (std::uint8_t b : digest) out = (out << 8) | b;
  return out;
}

}  // namespace claka
