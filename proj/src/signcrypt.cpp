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

#include "ssms/signcrypt.hpp"

#include "ssms/cipher.hpp"
#include "ssms/error.hpp"
#include "ssms/hash.hpp"
#include "ssms/instrument.hpp"
#include "ssms/keys.hpp"

namespace ssms {

namespace {

ec::Int mod_n(const ec::Int& v, const ec::DomainParams& dp)
{
    ec::Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), dp.n.get_mpz_t());
    return r;
}

void append_id(Bytes& out, std::string_view id)
{
    if (id.size() > 255)
        throw Error("bad_identity", "identity longer than 255 bytes");
    append_u8(out, static_cast<std::uint8_t>(id.size()));
    append(out, str_bytes(id));
}

void check_scalar_range(const ec::Int& sk, const ec::DomainParams& dp)
{
    if (sk < 1 || sk >= dp.n)
        throw Error("bad_scalar", "private key out of range");
}

} // namespace

const char* to_string(DeliverStatus s)
{
    switch (s) {
    case DeliverStatus::ok:
        return "ok";
    case DeliverStatus::point_invalid:
        return "point_invalid";
    case DeliverStatus::signature_mismatch:
        return "signature_mismatch";
    case DeliverStatus::decrypt_malformed:
        return "decrypt_malformed";
    case DeliverStatus::stale_timestamp:
        return "stale_timestamp";
    }
    return "?";
}

const char* to_string(JudgeVerdict v)
{
    switch (v) {
    case JudgeVerdict::sender_sent:
        return "sender_sent";
    case JudgeVerdict::claimant_wrong_decrypt:
        return "claimant_wrong(decrypt)";
    case JudgeVerdict::claimant_wrong_signature:
        return "claimant_wrong(signature)";
    }
    return "?";
}

Bytes kdf(const ec::Int& x_k, std::string_view id_a, const ec::Int& y_k,
          std::string_view id_b, std::size_t l_bits, const ec::DomainParams& dp)
{
    instrument::kdf_calls().fetch_add(1, std::memory_order_relaxed);
    Bytes input;
    append(input, int_to_bytes_be(x_k, dp.field_byte_len));
    append_id(input, id_a);
    append(input, int_to_bytes_be(y_k, dp.field_byte_len));
    append_id(input, id_b);
    return sha256_expand(input, l_bits);
}

ec::Int hash_to_scalar(ByteView m, const ec::Int& x_r, std::string_view id_a,
                       const ec::Int& y_r, std::string_view id_b, ByteView k,
                       const ec::DomainParams& dp)
{
    Bytes input;
    append_u32_be(input, static_cast<std::uint32_t>(m.size()));
    append(input, m);
    append(input, int_to_bytes_be(x_r, dp.field_byte_len));
    append_id(input, id_a);
    append(input, int_to_bytes_be(y_r, dp.field_byte_len));
    append_id(input, id_b);
    append(input, k);

    Digest d = sha256(input);
    ec::Int t = mod_n(bytes_to_int_be(d), dp);
    if (t == 0)
        t = 1;
    return t;
}

namespace detail {

ec::Int signature_scalar(const ec::Int& t, const ec::Int& sk, const ec::Int& r,
                         const ec::DomainParams& dp)
{
    return mod_n(t * sk - r, dp);
}

} // namespace detail

Envelope compose(ByteView m, const ec::Int& sk_a, const Identity& id_a,
                 const ec::Point& pk_b, const Identity& id_b,
                 const ec::DomainParams& dp, Rng& rng)
{
    if (m.empty())
        throw Error("empty_message");
    check_scalar_range(sk_a, dp);
    if (ec::validate_point(pk_b, dp) != ec::PointCheck::ok)
        throw Error("invalid_recipient_key");

    for (int attempt = 0; attempt < 128; ++attempt) {
        ec::Int r = sample_scalar(dp, rng);
        ec::Point R = ec::scalar_mul(r, dp.G, dp);
        ec::Int e = mod_n(r + ec::half_x(R.x, dp) * sk_a, dp);
        ec::Point K = ec::scalar_mul(e, pk_b, dp);
        if (K.infinity)
            continue;

        Bytes k = kdf(K.x, id_a.str(), K.y, id_b.str(), kSessionKeyBits, dp);
        Envelope env;
        env.sender = id_a;
        env.recipient = id_b;
        env.R = R;
        env.C = encrypt_nonce_prefixed(k, m, rng);
        ec::Int t = hash_to_scalar(m, R.x, id_a.str(), R.y, id_b.str(), k, dp);
        env.s = detail::signature_scalar(t, sk_a, r, dp);
        return env;
    }
    throw Error("rng_failure", "K = O after 128 attempts");
}

DeliverResult deliver(const Envelope& env, const ec::Int& sk_b,
                      const Identity& id_b, const ec::Point& pk_a,
                      const Identity& id_a, const ec::DomainParams& dp,
                      const DeliverOptions& opts)
{
    check_scalar_range(sk_b, dp);

    if (opts.message_timestamp && opts.now) {
        std::uint64_t ts = *opts.message_timestamp, now = *opts.now;
        std::uint64_t age = now > ts ? now - ts : ts - now;
        if (age > opts.window_seconds)
            return {DeliverStatus::stale_timestamp, {}, {}};
    }

    if (opts.check_point &&
        ec::validate_point(env.R, dp) != ec::PointCheck::ok)
        return {DeliverStatus::point_invalid, {}, {}};
    if (env.R.infinity)
        return {DeliverStatus::point_invalid, {}, {}};

    ec::Point K;
    try {
        ec::Point inner = ec::point_add(
            env.R, ec::scalar_mul(ec::half_x(env.R.x, dp), pk_a, dp), dp);
        K = ec::scalar_mul(sk_b, inner, dp);
    } catch (const Error&) {
        return {DeliverStatus::point_invalid, {}, {}};
    }
    if (K.infinity)
        return {DeliverStatus::point_invalid, {}, {}};

    Bytes k = kdf(K.x, id_a.str(), K.y, id_b.str(), kSessionKeyBits, dp);

    std::optional<Bytes> m = decrypt_nonce_prefixed(k, env.C);
    if (!m || m->empty())
        return {DeliverStatus::decrypt_malformed, {}, {}};

    if (env.s < 0 || env.s >= dp.n)
        return {DeliverStatus::signature_mismatch, {}, {}};

    ec::Int t = hash_to_scalar(*m, env.R.x, id_a.str(), env.R.y, id_b.str(), k, dp);
    try {
        ec::Point lhs = ec::point_add(ec::scalar_mul(env.s, dp.G, dp), env.R, dp);
        if (lhs != ec::scalar_mul(t, pk_a, dp))
            return {DeliverStatus::signature_mismatch, {}, {}};
    } catch (const Error&) {
        return {DeliverStatus::signature_mismatch, {}, {}};
    }

    return {DeliverStatus::ok, std::move(*m), std::move(k)};
}

DeliverResult deliver_envelope_bytes(ByteView env_bytes, const ec::Int& sk_b,
                                     const Identity& id_b, const ec::Point& pk_a,
                                     const Identity& id_a,
                                     const ec::DomainParams& dp,
                                     const DeliverOptions& opts)
{
    Envelope env;
    try {
        env = decode_envelope(env_bytes, dp, opts.check_point);
    } catch (const Error& e) {
        if (e.code() == "bad_tag" || e.code() == "point_invalid")
            return {DeliverStatus::point_invalid, {}, {}};
        throw;
    }
    return deliver(env, sk_b, id_b, pk_a, id_a, dp, opts);
}

Bytes confirm(ByteView m_prime, ByteView k)
{
    Digest d = hmac_sha256(k, m_prime);
    return Bytes(d.begin(), d.end());
}

bool verify_confirm(ByteView m_prime, ByteView tag, ByteView k)
{
    return ct_equal(confirm(m_prime, k), tag);
}

JudgeVerdict judge_verify(const JudgeClaim& claim, const ec::Point& sender_pk,
                          const ec::DomainParams& dp)
{
    if (ec::validate_point(claim.R, dp) != ec::PointCheck::ok ||
        ec::validate_point(sender_pk, dp) != ec::PointCheck::ok)
        throw Error("invalid_point");
    if (claim.k.size() != kSymKeyLen)
        return JudgeVerdict::claimant_wrong_decrypt;

    std::optional<Bytes> m = decrypt_nonce_prefixed(claim.k, claim.C);
    if (!m || *m != claim.M)
        return JudgeVerdict::claimant_wrong_decrypt;

    if (claim.s < 0 || claim.s >= dp.n)
        return JudgeVerdict::claimant_wrong_signature;

    ec::Int t = hash_to_scalar(claim.M, claim.R.x, claim.sender.str(),
                               claim.R.y, claim.recipient.str(), claim.k, dp);
    try {
        ec::Point lhs =
            ec::point_add(ec::scalar_mul(claim.s, dp.G, dp), claim.R, dp);
        if (lhs != ec::scalar_mul(t, sender_pk, dp))
            return JudgeVerdict::claimant_wrong_signature;
    } catch (const Error&) {
        return JudgeVerdict::claimant_wrong_signature;
    }
    return JudgeVerdict::sender_sent;
}

Bytes encode_envelope(const Envelope& env, const ec::DomainParams& dp)
{
    if (env.C.size() > 0xffff)
        throw Error("malformed_length", "ciphertext too long");
    Bytes out;
    append_u8(out, kEnvelopeVersion);
    append_id(out, env.sender.str());
    append_id(out, env.recipient.str());
    append(out, ec::encode_point(env.R, dp));
    append(out, int_to_bytes_be(env.s, dp.scalar_byte_len));
    append_u16_be(out, static_cast<std::uint16_t>(env.C.size()));
    append(out, env.C);
    return out;
}

namespace {

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
    ByteView take(std::size_t len)
    {
        need(len);
        ByteView v = data_.subspan(off_, len);
        off_ += len;
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

std::string take_id(Cursor& cur)
{
    std::size_t len = cur.u8();
    ByteView v = cur.take(len);
    return std::string(v.begin(), v.end());
}

} // namespace

Envelope decode_envelope(ByteView data, const ec::DomainParams& dp,
                         bool validate_r)
{
    Cursor cur(data);
    if (cur.u8() != kEnvelopeVersion)
        throw Error("bad_version");

    Envelope env;
    env.sender = Identity(take_id(cur));
    env.recipient = Identity(take_id(cur));
    env.R = ec::decode_point(cur.take(1 + 2 * dp.field_byte_len), dp, validate_r);
    env.s = bytes_to_int_be(cur.take(dp.scalar_byte_len));
    std::size_t c_len = cur.u16();
    ByteView c = cur.take(c_len);
    env.C.assign(c.begin(), c.end());
    if (!cur.done())
        throw Error("truncated", "trailing bytes");
    return env;
}

EcSignature sign_detached(ByteView msg, std::string_view signer_id,
                          const ec::Int& sk, const ec::DomainParams& dp,
                          Rng& rng)
{
    check_scalar_range(sk, dp);
    ec::Int r = sample_scalar(dp, rng);
    ec::Point R = ec::scalar_mul(r, dp.G, dp);
    ec::Int t = hash_to_scalar(msg, R.x, signer_id, R.y, "", {}, dp);
    return {R, detail::signature_scalar(t, sk, r, dp)};
}

bool verify_detached(ByteView msg, std::string_view signer_id,
                     const EcSignature& sig, const ec::Point& pk,
                     const ec::DomainParams& dp)
{
    if (sig.R.infinity || sig.s < 0 || sig.s >= dp.n)
        return false;
    try {
        ec::Int t = hash_to_scalar(msg, sig.R.x, signer_id, sig.R.y, "", {}, dp);
        ec::Point lhs = ec::point_add(ec::scalar_mul(sig.s, dp.G, dp), sig.R, dp);
        return lhs == ec::scalar_mul(t, pk, dp);
    } catch (const Error&) {
        return false;
    }
}

Bytes encode_signature(const EcSignature& sig, const ec::DomainParams& dp)
{
    Bytes out = ec::encode_point(sig.R, dp);
    append(out, int_to_bytes_be(sig.s, dp.scalar_byte_len));
    return out;
}

EcSignature decode_signature(ByteView data, const ec::DomainParams& dp,
                             bool validate_r)
{
    std::size_t point_len = 1 + 2 * dp.field_byte_len;
    if (data.size() != point_len + dp.scalar_byte_len)
        throw Error("malformed_length", "signature");
    EcSignature sig;
    sig.R = ec::decode_point(data.subspan(0, point_len), dp, validate_r);
    sig.s = bytes_to_int_be(data.subspan(point_len));
    return sig;
}

} // namespace ssms
