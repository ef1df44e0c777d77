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

// Executable adversaries. Each attack receives only its declared knowledge
// set (a dedicated struct) plus what it can see on the network, and returns
// the key it believes the honest parties hold. Judging success is the
// harness's job.
//
// Slot convention: the compromised parties are A (and B), the impersonated
// or unknown party is C.
//
// Against the repaired protocols an attack runs its recipe up to the step
// that needs missing knowledge and then substitutes its best available
// guess, so that failure shows up as a key mismatch (or, for the signed
// xcq11 repair, as an honest abort).

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "claka/keyinfra.hpp"
#include "claka/rng.hpp"
#include "claka/session.hpp"
#include "claka/xcl12.hpp"
#include "claka/xcq11.hpp"

namespace claka::attacks {

enum class AttackKind { kForwardSecrecy, kKci, kSecrets, kKciKgc, kKciCommon };

std::string_view AttackName(AttackKind kind);
std::optional<AttackKind> ParseAttack(std::string_view name);
// kci, kci-kgc and kci-common occupy slot C in a live session; fs and
// secrets post-process a finished transcript.
bool IsLive(AttackKind kind);

// Audit view of a knowledge grant, e.g. {"full_key:A", "master_key"}.
struct KnowledgeRecord {
  std::vector<std::string> items;
  bool live_session = false;

  bool Has(std::string_view item) const;
};

struct AdversaryResult {
  std::optional<SessionKey> key;
  std::string note;
  // Named intermediate encodings, in computation order.
  std::vector<std::pair<std::string, Bytes>> intermediates;
};

// ---- knowledge sets --------------------------------------------------------

// Full private keys S_U for some slots.
struct Xcq11FullKeys {
  std::array<std::optional<G1Point>, kParties> full_keys;
  KnowledgeRecord Record() const;
};

// Secret values x_U of all three users.
struct Xcq11SecretValues {
  std::array<Scalar, kParties> secrets;
  KnowledgeRecord Record() const;
};

// Malicious KGC: master key, every partial key, and A's full key. Never the
// secret values of B or C.
struct Xcl12KgcKnowledge {
  MasterKey master;
  std::array<xcl12::PartialKey, kParties> partials;
  xcl12::FullKey victim;  // slot A
  KnowledgeRecord Record() const;
};

// Common adversary: full keys (s, R, x) of A and B.
struct Xcl12CommonKnowledge {
  xcl12::FullKey a;
  xcl12::FullKey b;
  KnowledgeRecord Record() const;
};

// ---- passive attacks -------------------------------------------------------

// k = e(T_AB, S_B) e(T_BA, S_A) e(T_CA, S_A) = e(P,P)^(a+b+c).
AdversaryResult ForwardSecrecyXcq11(const SystemParams& params,
                                    const Xcq11FullKeys& knowledge,
                                    const xcq11::TranscriptView& view);

// With S_A, S_B, S_C the session value e(P,P)^(abc) is still a pairing-DH
// value; the adversary raises e(T_B, T_C) to a guessed exponent.
AdversaryResult ForwardSecrecyXcq11Improved(const SystemParams& params,
                                            const Xcq11FullKeys& knowledge,
                                            const xcq11::ImprovedView& view,
                                            Rng& rng);

// aP = (q_B - q_C)^-1 (d_B T_AB - d_C T_AC), d_U = (x_U + H2(upk_U))^-1,
// and cyclically for bP, cP. Throws DegenerateDenominator if two identity
// hashes coincide.
std::array<G1Point, kParties> RecoverEphemeralPoints(
    const SystemParams& params, const Xcq11SecretValues& knowledge,
    const xcq11::TranscriptView& view);

// k = e(aP + bP + cP, P).
AdversaryResult SecretsXcq11(const SystemParams& params,
                             const Xcq11SecretValues& knowledge,
                             const xcq11::TranscriptView& view);

// The ephemerals are already public as T_U = uP; the same final step
// e(T_A + T_B + T_C, P) yields e(P,P)^(a+b+c), not e(P,P)^(abc).
AdversaryResult SecretsXcq11Improved(const SystemParams& params,
                                     const Xcq11SecretValues& knowledge,
                                     const xcq11::ImprovedView& view);

// ---- live attacks (adversary in slot C) ------------------------------------

class KciXcq11Adversary {
 public:
  KciXcq11Adversary(SystemParams params, Xcq11FullKeys knowledge,
                    xcq11::Roster roster, Rng rng);

  // T[C->A] = c'(upk_A + H2(upk_A) Q_A), T[C->B] likewise.
  xcq11::Outgoing Emit();
  // k = e(P,P)^c' e(T_AB, S_B) e(T_BA, S_A) = e(P,P)^(a+b+c').
  AdversaryResult Conclude(const xcq11::TranscriptView& view) const;

 private:
  SystemParams params_;
  Xcq11FullKeys knowledge_;
  xcq11::Roster roster_;
  Rng rng_;
  Scalar ephemeral_;
};

// The repaired protocol needs sigma_C. Without S_C the adversary signs with
// the best key it holds (S_A) under C's identity, which the honest parties
// reject.
class KciXcq11ImprovedAdversary {
 public:
  KciXcq11ImprovedAdversary(SystemParams params, Xcq11FullKeys knowledge,
                            xcq11::PublicInfo impersonated, Rng rng);

  xcq11::ImprovedOutgoing Emit();
  // e(T_A, T_B)^c'.
  AdversaryResult Conclude(const xcq11::ImprovedView& view) const;

 private:
  SystemParams params_;
  Xcq11FullKeys knowledge_;
  xcq11::PublicInfo impersonated_;
  Rng rng_;
  Scalar ephemeral_;
};

// Malicious KGC impersonating C. Original: k1 = c'P + s_C T_AC + s_A T_BA,
// k2 = e(s_C T_AC, s_A T_BA)^c', k3 = e(upk_B, upk_C)^(x_A). Repaired: k1
// and k2 remain computable, k3 needs x_C and gets a guessed value.
class KciKgcXcl12Adversary {
 public:
  KciKgcXcl12Adversary(SystemParams params, Xcl12KgcKnowledge knowledge,
                       xcl12::Announcement impersonated, bool improved,
                       Rng rng);

  xcl12::Announcement Announce() const;
  xcl12::Flow Round(
      const std::array<std::optional<xcl12::Announcement>, kParties>& parties);
  AdversaryResult Conclude(const xcl12::TranscriptView& view) const;

 private:
  SystemParams params_;
  Xcl12KgcKnowledge knowledge_;
  xcl12::Announcement impersonated_;
  bool improved_;
  Rng rng_;
  xcl12::Flow flow_;
};

// Common adversary with A's and B's full keys impersonating C. Original:
// k1 = c''P + s_B T_AB + s_A T_BA, k2 = e(s_B T_AB, s_A T_BA)^c'',
// k3 = e(upk_B, upk_C)^(x_A). Repaired: k2 needs s_C^-1 and k3 needs x_C;
// both get guessed values.
class KciCommonXcl12Adversary {
 public:
  KciCommonXcl12Adversary(SystemParams params, Xcl12CommonKnowledge knowledge,
                          xcl12::Announcement impersonated, bool improved,
                          Rng rng);

  xcl12::Announcement Announce() const;
  xcl12::Flow Round(
      const std::array<std::optional<xcl12::Announcement>, kParties>& parties);
  AdversaryResult Conclude(const xcl12::TranscriptView& view) const;

 private:
  SystemParams params_;
  Xcl12CommonKnowledge knowledge_;
  xcl12::Announcement impersonated_;
  bool improved_;
  Rng rng_;
  xcl12::Flow flow_;
};

}  // namespace claka::attacks
