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

// Abstract symmetric bilinear group: e: G1 x G1 -> G2, both of prime order q.
//
// Elements are immutable values that keep a handle to the group that made
// them. Mixing elements from different groups throws BackendMismatch. Two
// backends implement the same interface:
//
//   * transparent: an element of G1 is stored as its discrete log to the
//     base P, and an element of G2 as its log to g = e(P, P). Pairing is
//     residue multiplication. Insecure by construction; exists so tests can
//     read off the exponent of any value a protocol computes.
//   * type-a: the supersingular curve y^2 = x^3 + x over F_p (p = 3 mod 4),
//     order-q subgroup, reduced Tate pairing composed with the distortion
//     map (x, y) -> (-x, i*y). G2 lives in the norm-1 subgroup of F_p^2.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "claka/bytes.hpp"

namespace claka {

class Rng;
class PairingGroup;
class Scalar;
class G1Point;
class G2Elem;

using GroupHandle = std::shared_ptr<const PairingGroup>;

enum class BackendKind { kTransparent, kCryptographic };

std::string_view BackendName(BackendKind kind);

namespace detail {

// Backend-interpreted storage. The transparent backend keeps the log in
// `x` (G1) or `re` (G2) and leaves the other fields zero.
struct PointRepr {
  mpz_class x;
  mpz_class y;
  bool infinity = true;
};

struct GtRepr {
  mpz_class re;
  mpz_class im;
};

}  // namespace detail

// Residue mod q.
class Scalar {
 public:
  Scalar() = default;

  const mpz_class& value() const { return value_; }
  const GroupHandle& group() const { return group_; }
  bool IsZero() const { return value_ == 0; }

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator-() const;
  // Throws ZeroScalarError for zero.
  Scalar Inverse() const;

  // Fixed-width big-endian, width = byte length of q.
  Bytes Serialize() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class PairingGroup;
  Scalar(GroupHandle group, mpz_class value)
      : group_(std::move(group)), value_(std::move(value)) {}

  GroupHandle group_;
  mpz_class value_;
};

class G1Point {
 public:
  G1Point() = default;

  const GroupHandle& group() const { return group_; }
  bool IsIdentity() const { return repr_.infinity; }

  G1Point operator+(const G1Point& other) const;
  G1Point operator-(const G1Point& other) const;
  G1Point operator-() const;
  friend G1Point operator*(const Scalar& s, const G1Point& u);

  Bytes Serialize() const;

  friend bool operator==(const G1Point& a, const G1Point& b);

  const detail::PointRepr& repr() const { return repr_; }

 private:
  friend class PairingGroup;
  G1Point(GroupHandle group, detail::PointRepr repr)
      : group_(std::move(group)), repr_(std::move(repr)) {}

  GroupHandle group_;
  detail::PointRepr repr_;
};

// Element of the multiplicative target group (written G2 to match the
// protocol descriptions this library implements).
class G2Elem {
 public:
  G2Elem() = default;

  const GroupHandle& group() const { return group_; }
  bool IsIdentity() const;

  G2Elem operator*(const G2Elem& other) const;
  G2Elem Pow(const Scalar& exponent) const;
  G2Elem Inverse() const;

  Bytes Serialize() const;

  friend bool operator==(const G2Elem& a, const G2Elem& b);

  const detail::GtRepr& repr() const { return repr_; }

 private:
  friend class PairingGroup;
  friend G2Elem Pair(const G1Point& u, const G1Point& v);
  G2Elem(GroupHandle group, detail::GtRepr repr)
      : group_(std::move(group)), repr_(std::move(repr)) {}

  GroupHandle group_;
  detail::GtRepr repr_;
};

G2Elem Pair(const G1Point& u, const G1Point& v);

class PairingGroup : public std::enable_shared_from_this<PairingGroup> {
 public:
  virtual ~PairingGroup() = default;
  PairingGroup(const PairingGroup&) = delete;
  PairingGroup& operator=(const PairingGroup&) = delete;

  virtual BackendKind kind() const = 0;
  virtual std::string profile() const = 0;

  const mpz_class& order() const { return order_; }
  std::size_t scalar_size() const { return scalar_size_; }
  virtual std::size_t g1_size() const = 0;
  virtual std::size_t g2_size() const = 0;

  // Reduces mod q.
  Scalar MakeScalar(const mpz_class& value) const;
  // Uniform in [1, q-1].
  Scalar RandomScalar(Rng& rng) const;
  // Domain-separated hash into [1, q-1]: the 64-bit-oversized digest is
  // reduced mod (q-1) and shifted up by one. The residual bias is below
  // 2^-64 on the 256-bit profiles.
  Scalar HashToScalar(std::string_view domain_tag, ByteView input) const;

  G1Point Generator() const;
  G1Point G1Identity() const;
  G1Point RandomG1(Rng& rng) const;
  G2Elem G2Identity() const;
  // g = e(P, P), computed once at construction.
  G2Elem BasePairing() const;

  Scalar DecodeScalar(ByteView bytes) const;
  G1Point DecodeG1(ByteView bytes) const;
  G2Elem DecodeG2(ByteView bytes) const;

 protected:
  explicit PairingGroup(mpz_class order);

  virtual detail::PointRepr GeneratorRepr() const = 0;
  virtual detail::PointRepr AddRepr(const detail::PointRepr& a,
                                    const detail::PointRepr& b) const = 0;
  virtual detail::PointRepr NegRepr(const detail::PointRepr& a) const = 0;
  // k is already reduced into [0, q).
  virtual detail::PointRepr MulRepr(const mpz_class& k,
                                    const detail::PointRepr& a) const = 0;
  virtual detail::GtRepr PairRepr(const detail::PointRepr& a,
                                  const detail::PointRepr& b) const = 0;
  virtual detail::GtRepr GtOneRepr() const = 0;
  virtual detail::GtRepr GtMulRepr(const detail::GtRepr& a,
                                   const detail::GtRepr& b) const = 0;
  virtual detail::GtRepr GtPowRepr(const detail::GtRepr& a,
                                   const mpz_class& k) const = 0;
  virtual detail::GtRepr GtInverseRepr(const detail::GtRepr& a) const = 0;
  virtual Bytes EncodeG1Repr(const detail::PointRepr& a) const = 0;
  virtual Bytes EncodeGtRepr(const detail::GtRepr& a) const = 0;
  // Must reject non-canonical and out-of-group encodings with DecodeError.
  virtual detail::PointRepr DecodeG1Repr(ByteView bytes) const = 0;
  virtual detail::GtRepr DecodeGtRepr(ByteView bytes) const = 0;

  // Derived constructors call this once their parameters are in place.
  void InitBasePairing();

  // Fixed-width big-endian helpers shared by both backends.
  static Bytes EncodeFixed(const mpz_class& v, std::size_t width);
  static mpz_class DecodeFixed(ByteView bytes);

 private:
  friend class Scalar;
  friend class G1Point;
  friend class G2Elem;
  friend G2Elem Pair(const G1Point& u, const G1Point& v);
  friend G1Point operator*(const Scalar& s, const G1Point& u);

  GroupHandle Handle() const { return shared_from_this(); }
  static const PairingGroup& Common(const GroupHandle& a,
                                    const GroupHandle& b);

  mpz_class order_;
  std::size_t scalar_size_;
  detail::GtRepr base_pairing_;
};

// Shared, lazily created groups. Profiles:
//   transparent: "small" (q = 1009), "p256" (256-bit q, the type-a order)
//   crypto:      "type-a-512"
// Throws std::invalid_argument for unknown combinations.
GroupHandle MakeGroup(BackendKind kind, std::string_view profile = {});
std::string_view DefaultProfile(BackendKind kind);

}  // namespace claka
