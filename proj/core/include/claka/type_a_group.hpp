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

// Symmetric pairing on E: y^2 = x^3 + x over F_p, p = 3 mod 4, 512-bit p.
// #E(F_p) = p + 1 = h * r with r a 256-bit prime. G1 is the order-r
// subgroup, G2 the order-r subgroup of F_p^2* (F_p^2 = F_p[i]/(i^2 + 1)).
// e(P, Q) = f_{r,P}(psi(Q))^((p^2 - 1) / r) with psi(x, y) = (-x, i*y).
class TypeAGroup final : public PairingGroup {
 public:
  static std::shared_ptr<const TypeAGroup> Create();

  static const mpz_class& SubgroupOrder();
  static const mpz_class& FieldPrime();
  static const mpz_class& Cofactor();

  BackendKind kind() const override { return BackendKind::kCryptographic; }
  std::string profile() const override { return "type-a-512"; }
  // 0x04 || x || y, or 0x00 followed by zeros for the point at infinity.
  std::size_t g1_size() const override { return 1 + 2 * field_size_; }
  // re || im.
  std::size_t g2_size() const override { return 2 * field_size_; }

  bool IsOnCurve(const detail::PointRepr& a) const;

  struct Token {};
  explicit TypeAGroup(Token);

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
  struct Jacobian {
    mpz_class x, y, z;  // z == 0 is the point at infinity
  };

  mpz_class Fp(const mpz_class& v) const;
  detail::GtRepr Fp2Mul(const detail::GtRepr& a,
                        const detail::GtRepr& b) const;
  detail::GtRepr Fp2Sqr(const detail::GtRepr& a) const;
  detail::GtRepr Fp2Pow(const detail::GtRepr& a, const mpz_class& k) const;

  Jacobian Double(const Jacobian& t) const;
  Jacobian AddMixed(const Jacobian& t, const detail::PointRepr& a) const;
  detail::PointRepr ToAffine(const Jacobian& t) const;

  mpz_class p_;
  std::size_t field_size_;
};

}  // namespace claka
