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

#ifndef SSMS_CIPHER_HPP
#define SSMS_CIPHER_HPP

#include <optional>

#include "ssms/bytes.hpp"
#include "ssms/rng.hpp"

namespace ssms {

inline constexpr std::size_t kSymKeyLen = 32;
inline constexpr std::size_t kNonceLen = 16;

// Raw AES-256-CTR keystream application; encryption and decryption are
// the same operation.
Bytes ctr_crypt(ByteView key32, ByteView nonce16, ByteView data);

// nonce ‖ AES-256-CTR(key, nonce, plaintext).  The nonce comes from `rng`.
Bytes encrypt_nonce_prefixed(ByteView key32, ByteView plaintext, Rng& rng);

// Reverses encrypt_nonce_prefixed.  Returns nullopt if the input is too
// short to carry a nonce.
std::optional<Bytes> decrypt_nonce_prefixed(ByteView key32, ByteView data);

} // namespace ssms

#endif
