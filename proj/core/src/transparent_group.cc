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

#include "claka/transparent_group.hpp"

#include "claka/errors.hpp"
#include "claka/type_a_group.hpp"

namespace claka {

std::shared_ptr<const TransparentGroup> TransparentGroup::Create(
    Profile profile) {
  mpz_class order = profile == Profile::kSmall ? mpz_class(1009)
                                               : TypeAGroup::SubgroupOrder();
  return std::make_shared<const TransparentGroup>(Token{}, profile,
                                                  std::move(order));
}

TransparentGroup::TransparentGroup(Token, Profile profile, mpz_class order)
    : PairingGroup(std::move(order)), profile_(profile) {
  InitBasePairing();
}

std::string TransparentGroup::profile() const {
  return profile_ == Profile::kSmall ? "small" : "p256";
}

const TransparentGroup& TransparentGroup::From(const GroupHandle& group) {
  auto* t = dynamic_cast<const TransparentGroup*>(group.get());
  if (t == nullptr) throw BackendMismatch();
  return *t;
}

mpz_class TransparentGroup::Reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), order().get_mpz_t());
  return r;
}

detail::PointRepr TransparentGroup::Point(mpz_class log) const {
  detail::PointRepr p;
  p.x = Reduce(log);
  p.infinity = (p.x == 0);
  return p;
}

mpz_class TransparentGroup::Log(const G1Point& u) const {
  if (u.group().get() != this) throw BackendMismatch();
  return u.repr().x;
}

mpz_class TransparentGroup::Log(const G2Elem& w) const {
  if (w.group().get() != this) throw BackendMismatch();
  return w.repr().re;
}

G1Point TransparentGroup::G1FromLog(const mpz_class& log) const {
  return MakeScalar(log) * Generator();
}

G2Elem TransparentGroup::G2FromLog(const mpz_class& log) const {
  return BasePairing().Pow(MakeScalar(log));
}

detail::PointRepr TransparentGroup::GeneratorRepr() const { return Point(1); }

detail::PointRepr TransparentGroup::AddRepr(const detail::PointRepr& a,
                                            const detail::PointRepr& b) const {
  return Point(a.x + b.x);
}

detail::PointRepr TransparentGroup::NegRepr(const detail::PointRepr& a) const {
  return Point(-a.x);
}

detail::PointRepr TransparentGroup::MulRepr(const mpz_class& k,
                                            const detail::PointRepr& a) const {
  return Point(k * a.x);
}

// e(uP, vP) = g^(uv).
detail::GtRepr TransparentGroup::PairRepr(const detail::PointRepr& a,
                                          const detail::PointRepr& b) const {
  return detail::GtRepr{Reduce(a.x * b.x), 0};
}

// Exponent representation: the identity of G2 is exponent 0.
detail::GtRepr TransparentGroup::GtOneRepr() const {
  return detail::GtRepr{0, 0};
}

detail::GtRepr TransparentGroup::GtMulRepr(const detail::GtRepr& a,
                                           const detail::GtRepr& b) const {
  return detail::GtRepr{Reduce(a.re + b.re), 0};
}

detail::GtRepr TransparentGroup::GtPowRepr(const detail::GtRepr& a,
                                           const mpz_class& k) const {
  return detail::GtRepr{Reduce(a.re * k), 0};
}

detail::GtRepr TransparentGroup::GtInverseRepr(
    const detail::GtRepr& a) const {
  return detail::GtRepr{Reduce(-a.re), 0};
}

Bytes TransparentGroup::EncodeG1Repr(const detail::PointRepr& a) const {
  return EncodeFixed(a.x, scalar_size());
}

Bytes TransparentGroup::EncodeGtRepr(const detail::GtRepr& a) const {
  return EncodeFixed(a.re, scalar_size());
}

detail::PointRepr TransparentGroup::DecodeG1Repr(ByteView bytes) const {
  mpz_class v = DecodeFixed(bytes);
  if (v >= order()) throw DecodeError("G1 log is not reduced mod q");
  return Point(std::move(v));
}

detail::GtRepr TransparentGroup::DecodeGtRepr(ByteView bytes) const {
  mpz_class v = DecodeFixed(bytes);
  if (v >= order()) throw DecodeError("G2 log is not reduced mod q");
  return detail::GtRepr{std::move(v), 0};
}

}  // namespace claka
