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

#ifndef SSMS_KEYS_HPP
#define SSMS_KEYS_HPP

#include <array>
#include <cstdint>
#include <string_view>

#include "ssms/ec.hpp"
#include "ssms/rng.hpp"

namespace ssms {

struct KeyPair {
    ec::Int sk;
    ec::Point pk;
};

// Uniform private key in [1, n-1] by rejection sampling, pk = sk * G.
KeyPair keygen(const ec::DomainParams& dp, Rng& rng);

// Scalar in [1, n-1] by rejection sampling over f-bit candidates.
ec::Int sample_scalar(const ec::DomainParams& dp, Rng& rng);

// Password-encrypted private key container.
//
// Wire format: "SSMSKEY1" ‖ salt(16) ‖ iterations(4 BE) ‖ sk_hash(32) ‖
// ciphertext, where ciphertext = nonce(16) ‖ AES-256-CTR(kek, sk bytes),
// kek is `iterations` rounds of SHA-256 over salt ‖ password, and
// sk_hash = SHA-256 of the fixed-width private key bytes, used to
// reject wrong passwords on load.
struct EncryptedKeyFile {
    std::array<std::uint8_t, 16> salt{};
    std::uint32_t iterations = 0;
    std::array<std::uint8_t, 32> sk_hash{};
    Bytes ciphertext;
};

inline constexpr std::uint32_t kKeyKdfIterations = 10000;
inline constexpr char kKeyFileMagic[] = "SSMSKEY1";

EncryptedKeyFile wrap_private_key(const ec::Int& sk, std::string_view password,
                                  const ec::DomainParams& dp, Rng& rng,
                                  std::uint32_t iterations = kKeyKdfIterations);

// Throws Error("bad_password") when the password is wrong.
ec::Int unwrap_private_key(const EncryptedKeyFile& file, std::string_view password,
                           const ec::DomainParams& dp);

Bytes encode_key_file(const EncryptedKeyFile& file);
EncryptedKeyFile decode_key_file(ByteView data);   // throws Error("corrupt_file")

void store_private_key(const std::string& path, const ec::Int& sk,
                       std::string_view password, const ec::DomainParams& dp,
                       Rng& rng, std::uint32_t iterations = kKeyKdfIterations);
ec::Int load_private_key(const std::string& path, std::string_view password,
                         const ec::DomainParams& dp);

} // namespace ssms

#endif
