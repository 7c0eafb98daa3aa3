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

#include "ssms/validation.hpp"

#include <algorithm>
#include <ctime>
#include <fstream>
#include <sstream>

#include "ssms/error.hpp"

namespace ssms {

namespace {

void append_id(Bytes& out, const std::string& id)
{
    if (id.size() > 255)
        throw Error("bad_identity", "identity longer than 255 bytes");
    append_u8(out, static_cast<std::uint8_t>(id.size()));
    append(out, str_bytes(id));
}

std::string iso8601(std::uint64_t ts)
{
    std::time_t t = static_cast<std::time_t>(ts);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[24];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

class Cursor {
public:
    explicit Cursor(ByteView data) : data_(data) {}

    std::uint8_t u8()
    {
        need(1);
        return data_[off_++];
    }
    std::uint16_t u16()
    {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[off_] << 8 | data_[off_ + 1]);
        off_ += 2;
        return v;
    }
    std::uint64_t u64()
    {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v = v << 8 | data_[off_ + i];
        off_ += 8;
        return v;
    }
    ByteView take(std::size_t len)
    {
        need(len);
        ByteView v = data_.subspan(off_, len);
        off_ += len;
        return v;
    }
    ByteView rest()
    {
        ByteView v = data_.subspan(off_);
        off_ = data_.size();
        return v;
    }
    bool done() const { return off_ == data_.size(); }

private:
    void need(std::size_t len) const
    {
        if (data_.size() - off_ < len)
            throw Error("truncated");
    }

    ByteView data_;
    std::size_t off_ = 0;
};

std::string take_id_str(Cursor& cur)
{
    std::size_t len = cur.u8();
    ByteView v = cur.take(len);
    return std::string(v.begin(), v.end());
}

Identity id_or_empty(const std::string& s)
{
    return s.empty() ? Identity() : Identity(s);
}

} // namespace

Bytes OcspToken::signed_bytes(const ec::DomainParams& dp) const
{
    Bytes out;
    append_u8(out, 0x02);
    append_id(out, subject.str());
    append_u8(out, static_cast<std::uint8_t>(status));
    append_u8(out, pk_verified ? 1 : 0);
    append_u8(out, pk ? 1 : 0);
    if (pk)
        append(out, ec::encode_point(*pk, dp));
    for (int i = 7; i >= 0; --i)
        append_u8(out, static_cast<std::uint8_t>(issued_at >> (8 * i)));
    return out;
}

Bytes OcspToken::to_bytes(const ec::DomainParams& dp) const
{
    Bytes out = signed_bytes(dp);
    append(out, encode_signature(sig, dp));
    return out;
}

OcspToken OcspToken::from_bytes(ByteView data, const ec::DomainParams& dp,
                                bool validate_points)
{
    Cursor cur(data);
    if (cur.u8() != 0x02)
        throw Error("bad_tag", "status token");

    OcspToken token;
    token.subject = id_or_empty(take_id_str(cur));
    std::uint8_t status = cur.u8();
    if (status > 2)
        throw Error("truncated", "bad status byte");
    token.status = static_cast<CertStatus>(status);
    std::uint8_t verified = cur.u8(), present = cur.u8();
    if (verified > 1 || present > 1)
        throw Error("truncated", "bad flag byte");
    token.pk_verified = verified == 1;
    bool pk_present = present == 1;
    if (pk_present)
        token.pk = ec::decode_point(cur.take(1 + 2 * dp.field_byte_len), dp,
                                    validate_points);
    token.issued_at = cur.u64();
    token.sig = decode_signature(
        cur.take(1 + 2 * dp.field_byte_len + dp.scalar_byte_len), dp,
        validate_points);
    if (!cur.done())
        throw Error("truncated", "trailing bytes");
    return token;
}

bool verify_ocsp(const OcspToken& token, const ec::Point& server_pk,
                 const ec::DomainParams& dp)
{
    Bytes msg;
    try {
        msg = token.signed_bytes(dp);
    } catch (const Error&) {
        return false;
    }
    return verify_detached(msg, "", token.sig, server_pk, dp) &&
           token.status == CertStatus::good && token.pk_verified;
}

OcspResponder::OcspResponder(Identity server_id, KeyPair keys,
                             const Directory& dir, Smc::Clock clock)
    : id_(std::move(server_id)), keys_(std::move(keys)), dir_(&dir),
      clock_(std::move(clock))
{
}

OcspToken OcspResponder::respond(const Identity& subject, Rng& rng) const
{
    const ec::DomainParams& dp = dir_->params();

    OcspToken token;
    token.subject = subject;
    token.issued_at = clock_();

    std::optional<CertRecord> rec = dir_->lookup(subject);
    if (rec) {
        token.status = rec->status;
        token.pk = rec->pk;
        token.pk_verified = rec->status == CertStatus::good &&
                            ec::validate_point(rec->pk, dp) == ec::PointCheck::ok;
    }

    token.sig = sign_detached(token.signed_bytes(dp), "", keys_.sk, dp, rng);
    return token;
}

Bytes OcspResponder::encode_query(const Identity& subject)
{
    Bytes out;
    append_u8(out, 0x10);
    append_id(out, subject.str());
    return out;
}

Identity OcspResponder::decode_query(ByteView payload)
{
    Cursor cur(payload);
    if (cur.u8() != 0x10)
        throw Error("bad_tag", "status query");
    Identity subject(take_id_str(cur));
    if (!cur.done())
        throw Error("truncated", "trailing bytes");
    return subject;
}

std::size_t OcspResponder::pump(Smc& smc, Rng& rng)
{
    const ec::DomainParams& dp = dir_->params();
    std::size_t handled = 0;
    for (const SmcMessage& msg : smc.poll(id_)) {
        ReassembleResult r = reassemble(msg.segments);
        if (r.status != ReassembleStatus::ok)
            continue;
        Identity subject;
        try {
            subject = decode_query(r.payload);
        } catch (const Error&) {
            continue;
        }
        OcspToken token = respond(subject, rng);
        Bytes payload;
        append_u8(payload, 0x11);
        append(payload, token.to_bytes(dp));
        std::uint8_t ref = next_ref_.fetch_add(1);
        smc.submit(id_, msg.from, segment(payload, ref, kSsmsPort, kSsmsPort));
        ++handled;
    }
    return handled;
}

const char* to_string(DvErrorCode c)
{
    switch (c) {
    case DvErrorCode::none:
        return "validated";
    case DvErrorCode::sender_revoked:
        return "sender_revoked";
    case DvErrorCode::recipient_unknown:
        return "recipient_unknown";
    case DvErrorCode::invalid_point:
        return "invalid_point";
    case DvErrorCode::bad_envelope:
        return "bad_envelope";
    case DvErrorCode::sender_unknown:
        return "sender_unknown";
    case DvErrorCode::recipient_revoked:
        return "recipient_revoked";
    }
    return "?";
}

Bytes DvResponse::signed_bytes() const
{
    Bytes out;
    append_u8(out, 0x03);
    append_id(out, sender.str());
    append_id(out, recipient.str());
    append_u8(out, static_cast<std::uint8_t>(error));
    append(out, transcript_hash);
    return out;
}

Bytes DvResponse::to_bytes(const ec::DomainParams& dp) const
{
    Bytes out = signed_bytes();
    if (validated()) {
        if (!sig)
            throw Error("bad_signature", "validated response without signature");
        append(out, encode_signature(*sig, dp));
    }
    return out;
}

DvResponse DvResponse::from_bytes(ByteView data, const ec::DomainParams& dp,
                                  bool validate_points)
{
    Cursor cur(data);
    if (cur.u8() != 0x03)
        throw Error("bad_tag", "validation response");

    DvResponse resp;
    resp.sender = id_or_empty(take_id_str(cur));
    resp.recipient = id_or_empty(take_id_str(cur));
    std::uint8_t code = cur.u8();
    if (code > static_cast<std::uint8_t>(DvErrorCode::recipient_revoked))
        throw Error("truncated", "bad error code");
    resp.error = static_cast<DvErrorCode>(code);
    ByteView h = cur.take(resp.transcript_hash.size());
    std::copy(h.begin(), h.end(), resp.transcript_hash.begin());
    if (resp.validated())
        resp.sig = decode_signature(
            cur.take(1 + 2 * dp.field_byte_len + dp.scalar_byte_len), dp,
            validate_points);
    if (!cur.done())
        throw Error("truncated", "trailing bytes");
    return resp;
}

Bytes encode_dv_payload(const DvResponse& resp, ByteView envelope_bytes,
                        const ec::DomainParams& dp)
{
    Bytes resp_bytes = resp.to_bytes(dp);
    if (resp_bytes.size() > 0xffff)
        throw Error("malformed_length", "response too long");
    Bytes out;
    append_u16_be(out, static_cast<std::uint16_t>(resp_bytes.size()));
    append(out, resp_bytes);
    append(out, envelope_bytes);
    return out;
}

DvPayload decode_dv_payload(ByteView payload, const ec::DomainParams& dp,
                            bool validate_points)
{
    Cursor cur(payload);
    std::size_t resp_len = cur.u16();
    ByteView resp_bytes = cur.take(resp_len);
    ByteView env = cur.rest();

    DvPayload out;
    out.response = DvResponse::from_bytes(resp_bytes, dp, validate_points);
    out.envelope.assign(env.begin(), env.end());
    return out;
}

DvServer::DvServer(Identity gateway_id, KeyPair keys, const Directory& dir,
                   const OcspResponder& ocsp, Smc& smc, std::string log_path,
                   Smc::Clock clock, bool save_messages)
    : id_(std::move(gateway_id)), keys_(std::move(keys)), dir_(&dir),
      ocsp_(&ocsp), smc_(&smc), log_path_(std::move(log_path)),
      clock_(std::move(clock)), save_messages_(save_messages)
{
    // Reload the on-disk log so queries keep working across restarts.
    std::ifstream in(log_path_);
    std::string line;
    std::size_t lineno = 0;
    while (in && std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string ts, sender, recipient, hash_hex;
        if (!std::getline(row, ts, ',') || !std::getline(row, sender, ',') ||
            !std::getline(row, recipient, ',') || !std::getline(row, hash_hex, ','))
            throw Error("corrupt_file", log_path_ + ":" + std::to_string(lineno));
        log_.push_back({sender, recipient, hash_hex});
    }
}

void DvServer::log_append(const Identity& sender, const Identity& recipient,
                          const Digest& hash, ByteView envelope_bytes)
{
    std::string sender_s = sender.empty() ? "-" : sender.str();
    std::string recipient_s = recipient.empty() ? "-" : recipient.str();
    std::string hash_hex = to_hex(hash);

    std::ofstream out(log_path_, std::ios::app);
    if (!out)
        throw Error("corrupt_file", "cannot append to '" + log_path_ + "'");
    out << iso8601(clock_()) << ',' << sender_s << ',' << recipient_s << ','
        << hash_hex << ',' << (save_messages_ ? to_hex(envelope_bytes) : "")
        << '\n';
    if (!out.flush())
        throw Error("corrupt_file", "cannot append to '" + log_path_ + "'");

    log_.push_back({sender_s, recipient_s, hash_hex});
}

DvResponse DvServer::process(const Identity& from, ByteView envelope_bytes,
                             Rng& rng)
{
    std::lock_guard lk(mu_);
    const ec::DomainParams& dp = dir_->params();

    DvResponse resp;
    resp.transcript_hash = sha256(envelope_bytes);

    std::optional<Envelope> env;
    try {
        env = decode_envelope(envelope_bytes, dp, false);
        resp.sender = env->sender;
        resp.recipient = env->recipient;
        resp.error = DvErrorCode::none;
    } catch (const Error&) {
        resp.error = DvErrorCode::bad_envelope;
    }

    if (resp.validated()) {
        OcspToken sender_token = ocsp_->respond(env->sender, rng);
        OcspToken recipient_token = ocsp_->respond(env->recipient, rng);
        for (const OcspToken* token : {&sender_token, &recipient_token})
            if (!verify_detached(token->signed_bytes(dp), "", token->sig,
                                 ocsp_->public_key(), dp))
                throw Error("bad_server_signature", "status responder");

        if (sender_token.status == CertStatus::unknown)
            resp.error = DvErrorCode::sender_unknown;
        else if (sender_token.status == CertStatus::revoked)
            resp.error = DvErrorCode::sender_revoked;
        else if (recipient_token.status == CertStatus::unknown)
            resp.error = DvErrorCode::recipient_unknown;
        else if (recipient_token.status == CertStatus::revoked)
            resp.error = DvErrorCode::recipient_revoked;
        else if (!sender_token.pk_verified || !recipient_token.pk_verified ||
                 ec::validate_point(*sender_token.pk, dp) != ec::PointCheck::ok ||
                 ec::validate_point(*recipient_token.pk, dp) != ec::PointCheck::ok)
            resp.error = DvErrorCode::invalid_point;
        else if (ec::validate_point(env->R, dp) != ec::PointCheck::ok)
            resp.error = DvErrorCode::invalid_point;
    }

    log_append(resp.sender, resp.recipient, resp.transcript_hash, envelope_bytes);

    if (resp.validated()) {
        resp.sig = sign_detached(resp.signed_bytes(), "", keys_.sk, dp, rng);
        Bytes payload = encode_dv_payload(resp, envelope_bytes, dp);
        smc_->submit(id_, resp.recipient, segment(payload, next_ref_++, kSsmsPort, kSsmsPort));
    } else {
        Identity initiator = resp.sender.empty() ? from : resp.sender;
        if (!initiator.empty()) {
            Bytes payload = encode_dv_payload(resp, {}, dp);
            smc_->submit(id_, initiator, segment(payload, next_ref_++, kSsmsPort, kSsmsPort));
        }
    }
    return resp;
}

std::size_t DvServer::pump(Rng& rng)
{
    std::size_t handled = 0;
    for (const SmcMessage& msg : smc_->poll(id_)) {
        ReassembleResult r = reassemble(msg.segments);
        if (r.status != ReassembleStatus::ok) {
            process(msg.from, {}, rng);
            ++handled;
            continue;
        }
        process(msg.from, r.payload, rng);
        ++handled;
    }
    return handled;
}

bool DvServer::log_query(const Identity& sender, const Identity& recipient,
                         ByteView transcript_hash) const
{
    std::lock_guard lk(mu_);
    std::string hash_hex = to_hex(transcript_hash);
    for (const LogEntry& e : log_) {
        if (e.sender == sender.str() && e.recipient == recipient.str() &&
            e.hash_hex == hash_hex)
            return true;
    }
    return false;
}

} // namespace ssms
