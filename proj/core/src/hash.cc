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

#include "claka/hash.hpp"

#include <openssl/evp.h>

#include <memory>
#include <stdexcept>

namespace claka {

namespace {

struct MdCtxDeleter {
  void operator()(EVP_MD_CTX* ctx) const { EVP_MD_CTX_free(ctx); }
};

class Sha256Stream {
 public:
  Sha256Stream() : ctx_(EVP_MD_CTX_new()) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw std::runtime_error("EVP sha256 init failed");
    }
  }
  void Update(ByteView data) {
    if (EVP_DigestUpdate(ctx_.get(), data.data(), data.size()) != 1) {
      throw std::runtime_error("EVP digest update failed");
    }
  }
  Bytes Final() {
    Bytes out(EVP_MAX_MD_SIZE);
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx_.get(), out.data(), &len) != 1) {
      throw std::runtime_error("EVP digest final failed");
    }
    out.resize(len);
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, MdCtxDeleter> ctx_;
};

}  // namespace

Bytes Sha256(ByteView data) {
  Sha256Stream s;
  s.Update(data);
  return s.Final();
}

Bytes ExpandHash(std::string_view domain_tag, std::span<const Bytes> parts,
                 std::size_t out_len) {
  Bytes body;
  AppendLengthPrefixed(body, ToBytes(domain_tag));
  for (const Bytes& p : parts) AppendLengthPrefixed(body, p);

  Bytes out;
  out.reserve(out_len + 32);
  for (std::uint32_t counter = 0; out.size() < out_len; ++counter) {
    const std::uint8_t be[4] = {
        static_cast<std::uint8_t>(counter >> 24),
        static_cast<std::uint8_t>(counter >> 16),
        static_cast<std::uint8_t>(counter >> 8),
        static_cast<std::uint8_t>(counter)};
    Sha256Stream s;
    s.Update(be);
    s.Update(body);
    Bytes block = s.Final();
    out.insert(out.end(), block.begin(), block.end());
  }
  out.resize(out_len);
  return out;
}

Bytes Kdf(std::string_view domain_tag, std::span<const Bytes> parts,
          std::size_t key_bits) {
  if (key_bits == 0 || key_bits % 8 != 0) {
    throw std::invalid_argument("key_bits must be a positive multiple of 8");
  }
  return ExpandHash(domain_tag, parts, key_bits / 8);
}

}  // namespace claka
