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

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace claka {

// Deterministic byte source. All protocol randomness flows through an Rng
// so that a seed fully determines a run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  void Fill(std::span<std::uint8_t> out);

  // Seed drawn from std::random_device, for runs without --seed.
  static std::uint64_t EntropySeed();

 private:
  std::mt19937_64 engine_;
};

// Derives an independent child seed from (base, label) via SHA-256.
std::uint64_t DeriveSeed(std::uint64_t base, std::string_view label);

}  // namespace claka
