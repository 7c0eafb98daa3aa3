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

#ifndef SSMS_VALIDATION_HPP
#define SSMS_VALIDATION_HPP

#include <atomic>
#include <optional>

#include "ssms/directory.hpp"
#include "ssms/hash.hpp"
#include "ssms/keys.hpp"
#include "ssms/signcrypt.hpp"
#include "ssms/sms.hpp"

namespace ssms {

// Signed certificate-status statement.  `pk_verified` records that the
// responder re-ran point validation on the subject key; it may be true
// only for status good.
struct OcspToken {
    Identity subject;
    std::optional<ec::Point> pk;
    CertStatus status = CertStatus::unknown;
    bool pk_verified = false;
    std::uint64_t issued_at = 0;
    EcSignature sig;

    // The canonical region the signature covers:
    // 0x02 ‖ subject_len(1) ‖ subject ‖ status(1) ‖ pk_verified(1) ‖
    // pk_present(1) ‖ [encode_point(pk)] ‖ issued_at(8 BE)
    Bytes signed_bytes(const ec::DomainParams& dp) const;

    Bytes to_bytes(const ec::DomainParams& dp) const;
    static OcspToken from_bytes(ByteView data, const ec::DomainParams& dp,
                                bool validate_points = true);
};

// true iff the signature verifies under server_pk and the token says
// good with a verified key.
bool verify_ocsp(const OcspToken& token, const ec::Point& server_pk,
                 const ec::DomainParams& dp);

// Certificate-status responder.  Serves direct in-process queries and,
// via pump(), queries arriving as short messages at its gateway
// identity.
class OcspResponder {
public:
    OcspResponder(Identity server_id, KeyPair keys, const Directory& dir,
                  Smc::Clock clock = Smc::wall_clock());

    const Identity& id() const { return id_; }
    const ec::Point& public_key() const { return keys_.pk; }

    OcspToken respond(const Identity& subject, Rng& rng) const;

    // Gateway query payload: 0x10 ‖ subject_len(1) ‖ subject.
    // Response payload: 0x11 ‖ token bytes.
    static Bytes encode_query(const Identity& subject);
    static Identity decode_query(ByteView payload);

    // Answers every queued query addressed to the server identity.
    // Returns the number handled; malformed queries are dropped.
    std::size_t pump(Smc& smc, Rng& rng);

private:
    Identity id_;
    KeyPair keys_;
    const Directory* dir_;
    Smc::Clock clock_;
    std::atomic<std::uint8_t> next_ref_{1};
};

enum class DvErrorCode : std::uint8_t {
    none = 0,
    sender_revoked = 1,
    recipient_unknown = 2,
    invalid_point = 3,
    bad_envelope = 4,
    sender_unknown = 5,
    recipient_revoked = 6,
};
const char* to_string(DvErrorCode c);

// Outcome of delegated validation.  Signed only when validated
// (error == none); error reports go back to the initiator unsigned.
struct DvResponse {
    Identity sender;
    Identity recipient;
    Digest transcript_hash{};
    DvErrorCode error = DvErrorCode::bad_envelope;
    std::optional<EcSignature> sig;

    bool validated() const { return error == DvErrorCode::none; }

    // 0x03 ‖ sender_len(1) ‖ sender ‖ recipient_len(1) ‖ recipient ‖
    // error(1) ‖ transcript_hash(32)
    Bytes signed_bytes() const;

    Bytes to_bytes(const ec::DomainParams& dp) const;
    static DvResponse from_bytes(ByteView data, const ec::DomainParams& dp,
                                 bool validate_points = true);
};

// Payload the recipient polls in the delegated flow:
// resp_len(2 BE) ‖ response bytes ‖ envelope bytes.
// Error reports to the initiator use the same framing without the
// envelope.
Bytes encode_dv_payload(const DvResponse& resp, ByteView envelope_bytes,
                        const ec::DomainParams& dp);
struct DvPayload {
    DvResponse response;
    Bytes envelope;   // empty for error reports
};
DvPayload decode_dv_payload(ByteView payload, const ec::DomainParams& dp,
                            bool validate_points = true);

// Delegated-validation gateway: checks both parties' certificate
// status (via the responder), both public keys, and the ephemeral
// point, logs what passed through, and forwards validated envelopes to
// the recipient with a signed response.
//
// Log file: one line per processed envelope,
// `ISO-8601 timestamp,sender,recipient,hex transcript_hash,hex envelope`
// (the envelope column is empty when message saving is disabled).
// The log is append-only and owned by exactly one server instance.
class DvServer {
public:
    DvServer(Identity gateway_id, KeyPair keys, const Directory& dir,
             const OcspResponder& ocsp, Smc& smc, std::string log_path,
             Smc::Clock clock = Smc::wall_clock(), bool save_messages = true);

    const Identity& id() const { return id_; }
    const ec::Point& public_key() const { return keys_.pk; }

    // Validate one envelope that arrived from `from`, with all side
    // effects (log append, SMC forward or error report).
    DvResponse process(const Identity& from, ByteView envelope_bytes, Rng& rng);

    // Drains the gateway queue.  Returns the number of messages processed.
    std::size_t pump(Rng& rng);

    bool log_query(const Identity& sender, const Identity& recipient,
                   ByteView transcript_hash) const;

private:
    struct LogEntry {
        std::string sender, recipient, hash_hex;
    };

    void log_append(const Identity& sender, const Identity& recipient,
                    const Digest& hash, ByteView envelope_bytes);

    Identity id_;
    KeyPair keys_;
    const Directory* dir_;
    const OcspResponder* ocsp_;
    Smc* smc_;
    std::string log_path_;
    Smc::Clock clock_;
    bool save_messages_;
    std::vector<LogEntry> log_;
    std::uint8_t next_ref_ = 1;
    mutable std::mutex mu_;
};

} // namespace ssms

#endif
