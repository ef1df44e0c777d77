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

#include <cstddef>
#include <span>
#include <string_view>

#include "claka/bytes.hpp"

namespace claka {

Bytes Sha256(ByteView data);

// SHA-256 in counter mode: block i = SHA256(be32(i) || lp(tag) || lp(p1) ||
// ... || lp(pn)), concatenated and truncated to out_len bytes.
Bytes ExpandHash(std::string_view domain_tag, std::span<const Bytes> parts,
                 std::size_t out_len);

// Session-key derivation producing key_bits of output. key_bits must be a
// positive multiple of 8.
Bytes Kdf(std::string_view domain_tag, std::span<const Bytes> parts,
          std::size_t key_bits = 256);

}  // namespace claka
