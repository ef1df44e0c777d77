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

#include <stdexcept>
#include <string>

namespace claka {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands created by different pairing backends were combined.
class BackendMismatch : public Error {
 public:
  BackendMismatch() : Error("operands belong to different pairing backends") {}
};

// Inversion of the zero scalar, or a zero scalar where Z_q^* is required.
class ZeroScalarError : public Error {
 public:
  using Error::Error;
};

// A byte string is not the canonical encoding of any element.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// Key extraction hit a denominator that is zero mod q for a fixed input
// (e.g. x + H1(ID) == 0), so no resampling is possible.
class DegenerateScalar : public Error {
 public:
  using Error::Error;
};

// A derivation step was called on a transcript that lacks a required field.
class MissingTranscriptField : public Error {
 public:
  explicit MissingTranscriptField(const std::string& field)
      : Error("transcript is missing " + field), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A peer's signature did not verify; the session must abort.
class SignatureInvalid : public Error {
 public:
  explicit SignatureInvalid(const std::string& peer)
      : Error("signature from " + peer + " is invalid"), peer_(peer) {}
  const std::string& peer() const { return peer_; }

 private:
  std::string peer_;
};

// The all-secret-values recovery needs pairwise distinct identity hashes.
class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

// An attack was requested for a protocol variant it is not defined on, or a
// scenario is otherwise malformed.
class ScenarioError : public Error {
 public:
  using Error::Error;
};

}  // namespace claka
