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

#include "claka/pairing.hpp"

#include <stdexcept>

#include "claka/errors.hpp"
#include "claka/hash.hpp"
#include "claka/rng.hpp"
#include "claka/transparent_group.hpp"
#include "claka/type_a_group.hpp"

namespace claka {

namespace {

mpz_class Mod(const mpz_class& v, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

const PairingGroup& Of(const GroupHandle& g) {
  if (!g) throw BackendMismatch();
  return *g;
}

}  // namespace

std::string_view BackendName(BackendKind kind) {
  return kind == BackendKind::kTransparent ? "transparent" : "crypto";
}

// ---- PairingGroup ----------------------------------------------------------

PairingGroup::PairingGroup(mpz_class order)
    : order_(std::move(order)),
      scalar_size_((mpz_sizeinbase(order_.get_mpz_t(), 2) + 7) / 8) {}

void PairingGroup::InitBasePairing() {
  const detail::PointRepr p = GeneratorRepr();
  base_pairing_ = PairRepr(p, p);
}

const PairingGroup& PairingGroup::Common(const GroupHandle& a,
                                         const GroupHandle& b) {
  if (!a || !b || a.get() != b.get()) throw BackendMismatch();
  return *a;
}

Scalar PairingGroup::MakeScalar(const mpz_class& value) const {
  return Scalar(Handle(), Mod(value, order_));
}

Scalar PairingGroup::RandomScalar(Rng& rng) const {
  Bytes buf(scalar_size_ + 8);
  rng.Fill(buf);
  mpz_class v = DecodeFixed(buf);
  return Scalar(Handle(), Mod(v, order_ - 1) + 1);
}

Scalar PairingGroup::HashToScalar(std::string_view domain_tag,
                                  ByteView input) const {
  const Bytes parts[] = {Bytes(input.begin(), input.end())};
  Bytes digest = ExpandHash(domain_tag, parts, scalar_size_ + 8);
  return Scalar(Handle(), Mod(DecodeFixed(digest), order_ - 1) + 1);
}

G1Point PairingGroup::Generator() const {
  return G1Point(Handle(), GeneratorRepr());
}

G1Point PairingGroup::G1Identity() const {
  return G1Point(Handle(), detail::PointRepr{});
}

G1Point PairingGroup::RandomG1(Rng& rng) const {
  return RandomScalar(rng) * Generator();
}

G2Elem PairingGroup::G2Identity() const { return G2Elem(Handle(), GtOneRepr()); }

G2Elem PairingGroup::BasePairing() const {
  return G2Elem(Handle(), base_pairing_);
}

Scalar PairingGroup::DecodeScalar(ByteView bytes) const {
  if (bytes.size() != scalar_size_) {
    throw DecodeError("scalar encoding has wrong length");
  }
  mpz_class v = DecodeFixed(bytes);
  if (v >= order_) throw DecodeError("scalar encoding is not reduced");
  return Scalar(Handle(), std::move(v));
}

G1Point PairingGroup::DecodeG1(ByteView bytes) const {
  if (bytes.size() != g1_size()) {
    throw DecodeError("G1 encoding has wrong length");
  }
  return G1Point(Handle(), DecodeG1Repr(bytes));
}

G2Elem PairingGroup::DecodeG2(ByteView bytes) const {
  if (bytes.size() != g2_size()) {
    throw DecodeError("G2 encoding has wrong length");
  }
  return G2Elem(Handle(), DecodeGtRepr(bytes));
}

Bytes PairingGroup::EncodeFixed(const mpz_class& v, std::size_t width) {
  Bytes out(width, 0);
  std::size_t count = 0;
  if (v != 0) {
    if ((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8 > width) {
      throw std::logic_error("value does not fit fixed width");
    }
    mpz_export(out.data() + width - (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8,
               &count, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

mpz_class PairingGroup::DecodeFixed(ByteView bytes) {
  mpz_class v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

// ---- Scalar ----------------------------------------------------------------

Scalar Scalar::operator+(const Scalar& other) const {
  const PairingGroup& g = PairingGroup::Common(group_, other.group_);
  return Scalar(group_, Mod(value_ + other.value_, g.order()));
}

Scalar Scalar::operator-(const Scalar& other) const {
  const PairingGroup& g = PairingGroup::Common(group_, other.group_);
  return Scalar(group_, Mod(value_ - other.value_, g.order()));
}

Scalar Scalar::operator*(const Scalar& other) const {
  const PairingGroup& g = PairingGroup::Common(group_, other.group_);
  return Scalar(group_, Mod(value_ * other.value_, g.order()));
}

Scalar Scalar::operator-() const {
  const PairingGroup& g = Of(group_);
  return Scalar(group_, Mod(-value_, g.order()));
}

Scalar Scalar::Inverse() const {
  const PairingGroup& g = Of(group_);
  if (value_ == 0) throw ZeroScalarError("inversion of zero scalar");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), g.order().get_mpz_t());
  return Scalar(group_, std::move(inv));
}

Bytes Scalar::Serialize() const {
  const PairingGroup& g = Of(group_);
  return PairingGroup::EncodeFixed(value_, g.scalar_size());
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.group_.get() == b.group_.get() && a.value_ == b.value_;
}

// ---- G1Point ---------------------------------------------------------------

G1Point G1Point::operator+(const G1Point& other) const {
  const PairingGroup& g = PairingGroup::Common(group_, other.group_);
  return G1Point(group_, g.AddRepr(repr_, other.repr_));
}

G1Point G1Point::operator-(const G1Point& other) const {
  return *this + (-other);
}

G1Point G1Point::operator-() const {
  const PairingGroup& g = Of(group_);
  return G1Point(group_, g.NegRepr(repr_));
}

G1Point operator*(const Scalar& s, const G1Point& u) {
  const PairingGroup& g = PairingGroup::Common(s.group(), u.group_);
  return G1Point(u.group_, g.MulRepr(s.value(), u.repr_));
}

Bytes G1Point::Serialize() const { return Of(group_).EncodeG1Repr(repr_); }

bool operator==(const G1Point& a, const G1Point& b) {
  if (a.group_.get() != b.group_.get()) return false;
  if (a.repr_.infinity || b.repr_.infinity) {
    return a.repr_.infinity == b.repr_.infinity;
  }
  return a.repr_.x == b.repr_.x && a.repr_.y == b.repr_.y;
}

// ---- G2Elem ----------------------------------------------------------------

bool G2Elem::IsIdentity() const {
  const detail::GtRepr one = Of(group_).GtOneRepr();
  return repr_.re == one.re && repr_.im == one.im;
}

G2Elem G2Elem::operator*(const G2Elem& other) const {
  const PairingGroup& g = PairingGroup::Common(group_, other.group_);
  return G2Elem(group_, g.GtMulRepr(repr_, other.repr_));
}

G2Elem G2Elem::Pow(const Scalar& exponent) const {
  const PairingGroup& g = PairingGroup::Common(group_, exponent.group());
  return G2Elem(group_, g.GtPowRepr(repr_, exponent.value()));
}

G2Elem G2Elem::Inverse() const {
  return G2Elem(group_, Of(group_).GtInverseRepr(repr_));
}

Bytes G2Elem::Serialize() const { return Of(group_).EncodeGtRepr(repr_); }

bool operator==(const G2Elem& a, const G2Elem& b) {
  return a.group_.get() == b.group_.get() && a.repr_.re == b.repr_.re &&
         a.repr_.im == b.repr_.im;
}

G2Elem Pair(const G1Point& u, const G1Point& v) {
  const PairingGroup& g = PairingGroup::Common(u.group(), v.group());
  if (u.IsIdentity() || v.IsIdentity()) return g.G2Identity();
  return G2Elem(u.group(), g.PairRepr(u.repr(), v.repr()));
}

// ---- registry --------------------------------------------------------------

std::string_view DefaultProfile(BackendKind kind) {
  return kind == BackendKind::kTransparent ? "p256" : "type-a-512";
}

GroupHandle MakeGroup(BackendKind kind, std::string_view profile) {
  if (profile.empty()) profile = DefaultProfile(kind);
  if (kind == BackendKind::kTransparent) {
    if (profile == "small") {
      static const GroupHandle small =
          TransparentGroup::Create(TransparentGroup::Profile::kSmall);
      return small;
    }
    if (profile == "p256") {
      static const GroupHandle p256 =
          TransparentGroup::Create(TransparentGroup::Profile::kP256);
      return p256;
    }
  } else if (profile == "type-a-512") {
    static const GroupHandle type_a = TypeAGroup::Create();
    return type_a;
  }
  throw std::invalid_argument("unknown profile '" + std::string(profile) +
                              "' for backend " +
                              std::string(BackendName(kind)));
}

}  // namespace claka
