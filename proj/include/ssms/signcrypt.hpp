/*
 * Copyright (C) 2026 The ssms authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SSMS_SIGNCRYPT_HPP
#define SSMS_SIGNCRYPT_HPP

#include <optional>
#include <string_view>

#include "ssms/ec.hpp"
#include "ssms/identity.hpp"
#include "ssms/rng.hpp"

namespace ssms {

inline constexpr std::size_t kSessionKeyBits = 256;
inline constexpr std::uint8_t kEnvelopeVersion = 0x01;

// The transmitted triple (R, C, s) plus the addressing identities.
// C is the nonce-prefixed ciphertext of the message.
struct Envelope {
    Identity sender;
    Identity recipient;
    ec::Point R;
    Bytes C;
    ec::Int s{0};
};

// Session-key derivation from the agreed point K = (x_K, y_K) and both
// identities.  Folding the identities in is what ties the key to the
// intended peers.
Bytes kdf(const ec::Int& x_k, std::string_view id_a, const ec::Int& y_k,
          std::string_view id_b, std::size_t l_bits, const ec::DomainParams& dp);

// t = H(M ‖ x_R ‖ id_a ‖ y_R ‖ id_b ‖ k) reduced mod n, with 0 remapped
// to 1.  Variable-length fields are length-prefixed (M: 4-byte length,
// identities: 1-byte length); coordinates are fixed-width; k is
// appended raw.
ec::Int hash_to_scalar(ByteView m, const ec::Int& x_r, std::string_view id_a,
                       const ec::Int& y_r, std::string_view id_b, ByteView k,
                       const ec::DomainParams& dp);

// Signcrypt M from a to b: draw r in [1, n-1], R = rG,
// K = (r + x̃_R·sk_a)·pk_b (fresh r whenever K = O, at most 128 tries),
// k = kdf(K), C = E_k(M), t = hash_to_scalar(...), s = t·sk_a - r mod n.
// Throws Error("invalid_recipient_key"), Error("empty_message"),
// Error("rng_failure").
Envelope compose(ByteView m, const ec::Int& sk_a, const Identity& id_a,
                 const ec::Point& pk_b, const Identity& id_b,
                 const ec::DomainParams& dp, Rng& rng);

enum class DeliverStatus { ok, point_invalid, signature_mismatch,
                           decrypt_malformed, stale_timestamp };
const char* to_string(DeliverStatus s);

struct DeliverResult {
    DeliverStatus status = DeliverStatus::point_invalid;
    Bytes plaintext;     // filled only when status == ok
    Bytes session_key;   // filled only when status == ok
};

struct DeliverOptions {
    // Skipped only when an upstream validator (the delegated-validation
    // gateway) has already vouched for R.
    bool check_point = true;

    // Freshness check on the store-and-forward timestamp; both fields
    // must be set for it to run.
    std::optional<std::uint64_t> message_timestamp;
    std::optional<std::uint64_t> now;
    std::uint64_t window_seconds = 24 * 3600;
};

// Unsigncrypt: validate R, recover K = sk_b·(R + x̃_R·pk_a), derive k,
// decrypt, recompute t and accept iff sG + R = t·pk_a.  Never returns
// plaintext on rejection.
DeliverResult deliver(const Envelope& env, const ec::Int& sk_b,
                      const Identity& id_b, const ec::Point& pk_a,
                      const Identity& id_a, const ec::DomainParams& dp,
                      const DeliverOptions& opts = {});

// decode_envelope + deliver, mapping decode failures of the R field to
// a point_invalid verdict.  Structural failures elsewhere (bad version,
// truncation) still throw.
DeliverResult deliver_envelope_bytes(ByteView env_bytes, const ec::Int& sk_b,
                                     const Identity& id_b, const ec::Point& pk_a,
                                     const Identity& id_a,
                                     const ec::DomainParams& dp,
                                     const DeliverOptions& opts = {});

// Optional receipt tag t' = MAC_k(M') the recipient may return.
Bytes confirm(ByteView m_prime, ByteView k);
bool verify_confirm(ByteView m_prime, ByteView tag, ByteView k);

// Everything a recipient hands the judge in a dispute: the transcript
// (R, C, s) plus the claimed message and session key.
struct JudgeClaim {
    Identity sender;
    Identity recipient;
    ec::Point R;
    Bytes C;
    Bytes M;
    Bytes k;
    ec::Int s{0};
};

enum class JudgeVerdict { sender_sent, claimant_wrong_decrypt,
                          claimant_wrong_signature };
const char* to_string(JudgeVerdict v);

// Adjudicates with public inputs only: recompute D_k(C) and compare
// with M (mismatch: the claimant's message is wrong), then recompute t
// and check sG + R = t·sender_pk (mismatch: the signature does not bind
// the sender).  Throws Error("invalid_point") for invalid R/sender_pk.
JudgeVerdict judge_verify(const JudgeClaim& claim, const ec::Point& sender_pk,
                          const ec::DomainParams& dp);

// version ‖ sender_id_len(1) ‖ sender_id ‖ recipient_id_len(1) ‖
// recipient_id ‖ encode_point(R) ‖ s (scalar_byte_len, big-endian) ‖
// C_len(2, big-endian) ‖ C
Bytes encode_envelope(const Envelope& env, const ec::DomainParams& dp);

// Throws Error("bad_version"), Error("truncated"), Error("bad_identity"),
// and from the R field Error("bad_tag")/Error("point_invalid") (the
// latter only when `validate_r` is set).
Envelope decode_envelope(ByteView data, const ec::DomainParams& dp,
                         bool validate_r = true);

// Plain signature form of the same primitive, used by the validation
// servers: t = hash_to_scalar(msg, x_R, signer_id, y_R, "", empty k),
// s = t·sk - r mod n; verification checks sG + R = t·pk.
struct EcSignature {
    ec::Point R;
    ec::Int s{0};
};

EcSignature sign_detached(ByteView msg, std::string_view signer_id,
                          const ec::Int& sk, const ec::DomainParams& dp,
                          Rng& rng);
bool verify_detached(ByteView msg, std::string_view signer_id,
                     const EcSignature& sig, const ec::Point& pk,
                     const ec::DomainParams& dp);

Bytes encode_signature(const EcSignature& sig, const ec::DomainParams& dp);
EcSignature decode_signature(ByteView data, const ec::DomainParams& dp,
                             bool validate_r = true);

namespace detail {
// s = t·sk - r mod n, split out so tests can drive the verification
// identity with a chosen t.
ec::Int signature_scalar(const ec::Int& t, const ec::Int& sk, const ec::Int& r,
                         const ec::DomainParams& dp);
} // namespace detail

} // namespace ssms

#endif
