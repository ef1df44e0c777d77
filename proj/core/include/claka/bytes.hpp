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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace claka {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string ToHex(ByteView bytes);
// Throws DecodeError on odd length or non-hex characters.
Bytes FromHex(std::string_view hex);

Bytes ToBytes(std::string_view text);

// 4-byte big-endian length followed by the bytes.
void AppendLengthPrefixed(Bytes& out, ByteView part);

// Canonical, unambiguous concatenation: every part length-prefixed.
Bytes EncodeParts(std::span<const Bytes> parts);

}  // namespace claka
