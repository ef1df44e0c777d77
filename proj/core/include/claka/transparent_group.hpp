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

#include <memory>

#include "claka/pairing.hpp"

namespace claka {

// Discrete-log-exposing group. Every G1 element is held as log_P(u) mod q
// and every G2 element as log_g(w) mod q, so tests can check protocol
// algebra by plain residue arithmetic.
class TransparentGroup final : public PairingGroup {
 public:
  enum class Profile { kSmall, kP256 };

  static std::shared_ptr<const TransparentGroup> Create(Profile profile);

  BackendKind kind() const override { return BackendKind::kTransparent; }
  std::string profile() const override;
  std::size_t g1_size() const override { return scalar_size(); }
  std::size_t g2_size() const override { return scalar_size(); }

  // Test-only capability.
  mpz_class Log(const G1Point& u) const;
  mpz_class Log(const G2Elem& w) const;
  G1Point G1FromLog(const mpz_class& log) const;
  G2Elem G2FromLog(const mpz_class& log) const;

  // Shared for transparent downcasts; throws BackendMismatch otherwise.
  static const TransparentGroup& From(const GroupHandle& group);

  struct Token {};
  TransparentGroup(Token, Profile profile, mpz_class order);

 protected:
  detail::PointRepr GeneratorRepr() const override;
  detail::PointRepr AddRepr(const detail::PointRepr& a,
                            const detail::PointRepr& b) const override;
  detail::PointRepr NegRepr(const detail::PointRepr& a) const override;
  detail::PointRepr MulRepr(const mpz_class& k,
                            const detail::PointRepr& a) const override;
  detail::GtRepr PairRepr(const detail::PointRepr& a,
                          const detail::PointRepr& b) const override;
  detail::GtRepr GtOneRepr() const override;
  detail::GtRepr GtMulRepr(const detail::GtRepr& a,
                           const detail::GtRepr& b) const override;
  detail::GtRepr GtPowRepr(const detail::GtRepr& a,
                           const mpz_class& k) const override;
  detail::GtRepr GtInverseRepr(const detail::GtRepr& a) const override;
  Bytes EncodeG1Repr(const detail::PointRepr& a) const override;
  Bytes EncodeGtRepr(const detail::GtRepr& a) const override;
  detail::PointRepr DecodeG1Repr(ByteView bytes) const override;
  detail::GtRepr DecodeGtRepr(ByteView bytes) const override;

 private:
  detail::PointRepr Point(mpz_class log) const;
  mpz_class Reduce(const mpz_class& v) const;

  Profile profile_;
};

}  // namespace claka
