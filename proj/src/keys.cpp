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

#include "ssms/keys.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

#include "ssms/cipher.hpp"
#include "ssms/error.hpp"
#include "ssms/hash.hpp"

namespace ssms {

ec::Int sample_scalar(const ec::DomainParams& dp, Rng& rng)
{
    // f-bit candidates, rejecting values outside [1, n-1].  Each draw
    // succeeds with probability >= 1/2, so the bound below is never hit
    // with a sane RNG.
    std::size_t width = (dp.f + 7) / 8;
    unsigned spare_bits = static_cast<unsigned>(width * 8) - dp.f;
    for (int tries = 0; tries < 1000; ++tries) {
        Bytes buf = rng.bytes(width);
        buf[0] &= static_cast<std::uint8_t>(0xff >> spare_bits);
        ec::Int v = bytes_to_int_be(buf);
        if (v >= 1 && v < dp.n)
            return v;
    }
    throw Error("rng_failure", "scalar sampling did not converge");
}

KeyPair keygen(const ec::DomainParams& dp, Rng& rng)
{
    KeyPair kp;
    kp.sk = sample_scalar(dp, rng);
    kp.pk = ec::scalar_mul(kp.sk, dp.G, dp);
    return kp;
}

namespace {

Bytes derive_kek(ByteView salt, std::string_view password, std::uint32_t iterations)
{
    Bytes block(salt.begin(), salt.end());
    append(block, str_bytes(password));
    Digest d = sha256(block);
    for (std::uint32_t i = 1; i < iterations; ++i)
        d = sha256(d);
    return Bytes(d.begin(), d.end());
}

} // namespace

EncryptedKeyFile wrap_private_key(const ec::Int& sk, std::string_view password,
                                  const ec::DomainParams& dp, Rng& rng,
                                  std::uint32_t iterations)
{
    if (password.empty())
        throw Error("empty_password");
    if (iterations < 1)
        throw Error("bad_iterations");
    if (sk < 1 || sk >= dp.n)
        throw Error("bad_scalar", "private key out of range");

    EncryptedKeyFile file;
    Bytes salt = rng.bytes(file.salt.size());
    std::copy(salt.begin(), salt.end(), file.salt.begin());
    file.iterations = iterations;

    Bytes sk_bytes = int_to_bytes_be(sk, dp.scalar_byte_len);
    file.sk_hash = sha256(sk_bytes);

    Bytes kek = derive_kek(file.salt, password, iterations);
    file.ciphertext = encrypt_nonce_prefixed(kek, sk_bytes, rng);
    return file;
}

ec::Int unwrap_private_key(const EncryptedKeyFile& file, std::string_view password,
                           const ec::DomainParams& dp)
{
    Bytes kek = derive_kek(file.salt, password, file.iterations);
    std::optional<Bytes> sk_bytes = decrypt_nonce_prefixed(kek, file.ciphertext);
    if (!sk_bytes || sk_bytes->size() != dp.scalar_byte_len)
        throw Error("corrupt_file", "ciphertext length");
    if (!ct_equal(sha256(*sk_bytes), file.sk_hash))
        throw Error("bad_password");
    ec::Int sk = bytes_to_int_be(*sk_bytes);
    if (sk < 1 || sk >= dp.n)
        throw Error("corrupt_file", "private key out of range");
    return sk;
}

Bytes encode_key_file(const EncryptedKeyFile& file)
{
    Bytes out;
    append(out, str_bytes(kKeyFileMagic));
    append(out, file.salt);
    append_u32_be(out, file.iterations);
    append(out, file.sk_hash);
    append(out, file.ciphertext);
    return out;
}

EncryptedKeyFile decode_key_file(ByteView data)
{
    constexpr std::size_t magic_len = sizeof(kKeyFileMagic) - 1;
    constexpr std::size_t header_len = magic_len + 16 + 4 + 32;
    if (data.size() < header_len + kNonceLen)
        throw Error("corrupt_file", "truncated key file");
    if (!std::equal(data.begin(), data.begin() + magic_len, kKeyFileMagic))
        throw Error("corrupt_file", "bad magic");

    EncryptedKeyFile file;
    std::size_t off = magic_len;
    std::copy_n(data.begin() + off, file.salt.size(), file.salt.begin());
    off += file.salt.size();
    file.iterations = static_cast<std::uint32_t>(data[off]) << 24 |
                      static_cast<std::uint32_t>(data[off + 1]) << 16 |
                      static_cast<std::uint32_t>(data[off + 2]) << 8 |
                      static_cast<std::uint32_t>(data[off + 3]);
    off += 4;
    if (file.iterations < 1)
        throw Error("corrupt_file", "bad iteration count");
    std::copy_n(data.begin() + off, file.sk_hash.size(), file.sk_hash.begin());
    off += file.sk_hash.size();
    file.ciphertext.assign(data.begin() + off, data.end());
    return file;
}

void store_private_key(const std::string& path, const ec::Int& sk,
                       std::string_view password, const ec::DomainParams& dp,
                       Rng& rng, std::uint32_t iterations)
{
    Bytes data = encode_key_file(wrap_private_key(sk, password, dp, rng, iterations));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(reinterpret_cast<const char*>(data.data()),
                           static_cast<std::streamsize>(data.size())))
        throw Error("corrupt_file", "cannot write '" + path + "'");
}

ec::Int load_private_key(const std::string& path, std::string_view password,
                         const ec::DomainParams& dp)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("corrupt_file", "cannot open '" + path + "'");
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return unwrap_private_key(decode_key_file(data), password, dp);
}

} // namespace ssms
