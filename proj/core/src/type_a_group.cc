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

#include "claka/type_a_group.hpp"

#include "claka/errors.hpp"

namespace claka {

namespace {

// Fixed constants; r = nextprime(SHA256("claka type-a r") | 2^255) and
// p = h*r - 1 the first prime = 3 mod 4 with h = 0 mod 4 found upward from
// a SHA-256-derived 256-bit h. The generator is h * (x, y) for the least
// x >= 1 with x^3 + x a square.
const char kOrderHex[] =
    "c25d5c16a9c847baaf6dde76d76190b48af0053e1d3a3c18b22f0cc9d1ce9e75";
const char kCofactorHex[] =
    "c60cb3181398e97d420431724e3b648f964318a55144f13d645203c8a99b6114";
const char kPrimeHex[] =
    "965dd99367665e3f23f1f9f42eabeef03424b3fcd2b8ffefadd905e8eb26f5e3"
    "25d3deaab27bff6c57d5100564525cbb053f065757e52b7683fa1160dc05b623";
const char kGenXHex[] =
    "4ae1e172b06d597341a6e0d0abf6d93aa91e212a1ce3e25cdcb728a7f80a98fe"
    "21eb34628b83044ca2c3a801b375e5220e7ae4363375c1521288aa877c807650";
const char kGenYHex[] =
    "63f15be20911c31347dfc37b6aa265346e5e30171a7b7258fba4924bfb26b843"
    "59638346dde789f1afc7a2337f418f18bdfdbb606687590c1ea97950e0a485c1";

}  // namespace

const mpz_class& TypeAGroup::SubgroupOrder() {
  static const mpz_class r(kOrderHex, 16);
  return r;
}

const mpz_class& TypeAGroup::FieldPrime() {
  static const mpz_class p(kPrimeHex, 16);
  return p;
}

const mpz_class& TypeAGroup::Cofactor() {
  static const mpz_class h(kCofactorHex, 16);
  return h;
}

std::shared_ptr<const TypeAGroup> TypeAGroup::Create() {
  return std::make_shared<const TypeAGroup>(Token{});
}

TypeAGroup::TypeAGroup(Token)
    : PairingGroup(SubgroupOrder()),
      p_(FieldPrime()),
      field_size_((mpz_sizeinbase(FieldPrime().get_mpz_t(), 2) + 7) / 8) {
  InitBasePairing();
}

mpz_class TypeAGroup::Fp(const mpz_class& v) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p_.get_mpz_t());
  return r;
}

bool TypeAGroup::IsOnCurve(const detail::PointRepr& a) const {
  if (a.infinity) return true;
  if (a.x < 0 || a.x >= p_ || a.y < 0 || a.y >= p_) return false;
  return Fp(a.y * a.y) == Fp(a.x * a.x * a.x + a.x);
}

detail::PointRepr TypeAGroup::GeneratorRepr() const {
  detail::PointRepr g;
  g.x = mpz_class(kGenXHex, 16);
  g.y = mpz_class(kGenYHex, 16);
  g.infinity = false;
  return g;
}

// ---- G1 --------------------------------------------------------------------

detail::PointRepr TypeAGroup::AddRepr(const detail::PointRepr& a,
                                      const detail::PointRepr& b) const {
  if (a.infinity) return b;
  if (b.infinity) return a;
  mpz_class lambda;
  if (a.x == b.x) {
    if (Fp(a.y + b.y) == 0) return detail::PointRepr{};
    // Doubling: (3x^2 + 1) / 2y.
    mpz_class den = Fp(2 * a.y);
    mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
    lambda = Fp((3 * a.x * a.x + 1) * den);
  } else {
    mpz_class den = Fp(b.x - a.x);
    mpz_invert(den.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t());
    lambda = Fp((b.y - a.y) * den);
  }
  detail::PointRepr out;
  out.x = Fp(lambda * lambda - a.x - b.x);
  out.y = Fp(lambda * (a.x - out.x) - a.y);
  out.infinity = false;
  return out;
}

detail::PointRepr TypeAGroup::NegRepr(const detail::PointRepr& a) const {
  if (a.infinity) return a;
  detail::PointRepr out = a;
  out.y = Fp(-a.y);
  return out;
}

TypeAGroup::Jacobian TypeAGroup::Double(const Jacobian& t) const {
  if (t.z == 0 || t.y == 0) return Jacobian{1, 1, 0};
  mpz_class xx = Fp(t.x * t.x);
  mpz_class yy = Fp(t.y * t.y);
  mpz_class yyyy = Fp(yy * yy);
  mpz_class zz = Fp(t.z * t.z);
  mpz_class s = Fp(2 * ((t.x + yy) * (t.x + yy) - xx - yyyy));
  mpz_class m = Fp(3 * xx + zz * zz);
  Jacobian out;
  out.x = Fp(m * m - 2 * s);
  out.y = Fp(m * (s - out.x) - 8 * yyyy);
  out.z = Fp((t.y + t.z) * (t.y + t.z) - yy - zz);
  return out;
}

TypeAGroup::Jacobian TypeAGroup::AddMixed(const Jacobian& t,
                                          const detail::PointRepr& a) const {
  if (a.infinity) return t;
  if (t.z == 0) return Jacobian{a.x, a.y, 1};
  mpz_class z1z1 = Fp(t.z * t.z);
  mpz_class u2 = Fp(a.x * z1z1);
  mpz_class s2 = Fp(a.y * t.z * z1z1);
  mpz_class h = Fp(u2 - t.x);
  mpz_class r = Fp(2 * (s2 - t.y));
  if (h == 0) {
    if (r == 0) return Double(t);
    return Jacobian{1, 1, 0};
  }
  mpz_class hh = Fp(h * h);
  mpz_class i = 4 * hh;
  mpz_class j = Fp(h * i);
  mpz_class v = Fp(t.x * i);
  Jacobian out;
  out.x = Fp(r * r - j - 2 * v);
  out.y = Fp(r * (v - out.x) - 2 * t.y * j);
  out.z = Fp((t.z + h) * (t.z + h) - z1z1 - hh);
  return out;
}

detail::PointRepr TypeAGroup::ToAffine(const Jacobian& t) const {
  if (t.z == 0) return detail::PointRepr{};
  mpz_class zinv;
  mpz_invert(zinv.get_mpz_t(), t.z.get_mpz_t(), p_.get_mpz_t());
  mpz_class zinv2 = Fp(zinv * zinv);
  detail::PointRepr out;
  out.x = Fp(t.x * zinv2);
  out.y = Fp(t.y * zinv2 * zinv);
  out.infinity = false;
  return out;
}

detail::PointRepr TypeAGroup::MulRepr(const mpz_class& k,
                                      const detail::PointRepr& a) const {
  if (a.infinity || k == 0) return detail::PointRepr{};
  Jacobian acc{1, 1, 0};
  for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1;
       bit >= 0; --bit) {
    acc = Double(acc);
    if (mpz_tstbit(k.get_mpz_t(), bit)) acc = AddMixed(acc, a);
  }
  return ToAffine(acc);
}

// ---- F_p^2 / G2 ------------------------------------------------------------

detail::GtRepr TypeAGroup::Fp2Mul(const detail::GtRepr& a,
                                  const detail::GtRepr& b) const {
  mpz_class ac = a.re * b.re;
  mpz_class bd = a.im * b.im;
  mpz_class cross = (a.re + a.im) * (b.re + b.im);
  return detail::GtRepr{Fp(ac - bd), Fp(cross - ac - bd)};
}

detail::GtRepr TypeAGroup::Fp2Sqr(const detail::GtRepr& a) const {
  return detail::GtRepr{Fp((a.re + a.im) * (a.re - a.im)),
                        Fp(2 * a.re * a.im)};
}

detail::GtRepr TypeAGroup::Fp2Pow(const detail::GtRepr& a,
                                  const mpz_class& k) const {
  detail::GtRepr acc{1, 0};
  for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 1;
       bit >= 0; --bit) {
    acc = Fp2Sqr(acc);
    if (mpz_tstbit(k.get_mpz_t(), bit)) acc = Fp2Mul(acc, a);
  }
  return acc;
}

detail::GtRepr TypeAGroup::GtOneRepr() const { return detail::GtRepr{1, 0}; }

detail::GtRepr TypeAGroup::GtMulRepr(const detail::GtRepr& a,
                                     const detail::GtRepr& b) const {
  return Fp2Mul(a, b);
}

detail::GtRepr TypeAGroup::GtPowRepr(const detail::GtRepr& a,
                                     const mpz_class& k) const {
  if (k == 0) return GtOneRepr();
  return Fp2Pow(a, k);
}

// Elements of G2 have norm 1, so the inverse is the conjugate.
detail::GtRepr TypeAGroup::GtInverseRepr(const detail::GtRepr& a) const {
  return detail::GtRepr{a.re, Fp(-a.im)};
}

// Miller loop with Jacobian T; each line is scaled by an F_p factor, which
// the (p - 1) part of the final exponentiation removes, as it does the
// vertical lines.
detail::GtRepr TypeAGroup::PairRepr(const detail::PointRepr& a,
                                    const detail::PointRepr& b) const {
  const mpz_class& r = order();
  // psi(b) = (-b.x, i * b.y); only b.x and b.y enter the line values below.
  const mpz_class& xq = b.x;
  const mpz_class& yq = b.y;

  detail::GtRepr f{1, 0};
  Jacobian t{a.x, a.y, 1};
  for (long bit = static_cast<long>(mpz_sizeinbase(r.get_mpz_t(), 2)) - 2;
       bit >= 0; --bit) {
    {
      mpz_class xx = Fp(t.x * t.x);
      mpz_class zz = Fp(t.z * t.z);
      mpz_class m = Fp(3 * xx + zz * zz);
      detail::GtRepr line{Fp(m * (zz * xq + t.x) - 2 * t.y * t.y),
                          Fp(2 * t.y * t.z * zz * yq)};
      f = Fp2Mul(Fp2Sqr(f), line);
      t = Double(t);
    }
    if (mpz_tstbit(r.get_mpz_t(), bit)) {
      mpz_class z1z1 = Fp(t.z * t.z);
      mpz_class h = Fp(a.x * z1z1 - t.x);
      if (h == 0) {
        // T = -P: vertical line, value in F_p.
        t = Jacobian{1, 1, 0};
        continue;
      }
      mpz_class n = Fp(a.y * z1z1 * t.z - t.y);
      mpz_class d = Fp(t.z * h);
      detail::GtRepr line{Fp(n * (xq + a.x) - a.y * d), Fp(d * yq)};
      f = Fp2Mul(f, line);
      t = AddMixed(t, a);
    }
  }

  // f^(p - 1) = conj(f) / f = conj(f)^2 / N(f).
  mpz_class norm = Fp(f.re * f.re + f.im * f.im);
  mpz_invert(norm.get_mpz_t(), norm.get_mpz_t(), p_.get_mpz_t());
  detail::GtRepr conj{f.re, Fp(-f.im)};
  detail::GtRepr g = Fp2Sqr(conj);
  g.re = Fp(g.re * norm);
  g.im = Fp(g.im * norm);
  return Fp2Pow(g, Cofactor());
}

// ---- encodings -------------------------------------------------------------

Bytes TypeAGroup::EncodeG1Repr(const detail::PointRepr& a) const {
  Bytes out(g1_size(), 0);
  if (a.infinity) return out;
  out[0] = 0x04;
  Bytes x = EncodeFixed(a.x, field_size_);
  Bytes y = EncodeFixed(a.y, field_size_);
  std::copy(x.begin(), x.end(), out.begin() + 1);
  std::copy(y.begin(), y.end(), out.begin() + 1 + field_size_);
  return out;
}

Bytes TypeAGroup::EncodeGtRepr(const detail::GtRepr& a) const {
  Bytes out = EncodeFixed(a.re, field_size_);
  Bytes im = EncodeFixed(a.im, field_size_);
  out.insert(out.end(), im.begin(), im.end());
  return out;
}

detail::PointRepr TypeAGroup::DecodeG1Repr(ByteView bytes) const {
  if (bytes[0] == 0x00) {
    for (std::uint8_t b : bytes) {
      if (b != 0) throw DecodeError("non-canonical encoding of infinity");
    }
    return detail::PointRepr{};
  }
  if (bytes[0] != 0x04) throw DecodeError("unknown G1 encoding tag");
  detail::PointRepr a;
  a.x = DecodeFixed(bytes.subspan(1, field_size_));
  a.y = DecodeFixed(bytes.subspan(1 + field_size_, field_size_));
  a.infinity = false;
  if (!IsOnCurve(a)) throw DecodeError("point is not on the curve");
  if (!MulRepr(order(), a).infinity) {
    throw DecodeError("point is not in the order-q subgroup");
  }
  return a;
}

detail::GtRepr TypeAGroup::DecodeGtRepr(ByteView bytes) const {
  detail::GtRepr a{DecodeFixed(bytes.subspan(0, field_size_)),
                   DecodeFixed(bytes.subspan(field_size_, field_size_))};
  if (a.re >= p_ || a.im >= p_) throw DecodeError("F_p^2 limb not reduced");
  if (Fp(a.re * a.re + a.im * a.im) != 1) {
    throw DecodeError("G2 element does not have norm 1");
  }
  detail::GtRepr check = Fp2Pow(a, order());
  if (check.re != 1 || check.im != 0) {
    throw DecodeError("G2 element is not in the order-q subgroup");
  }
  return a;
}

}  // namespace claka
