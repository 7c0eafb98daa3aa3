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

#include "ssms/cipher.hpp"

#include <memory>

#include <openssl/evp.h>

#include "ssms/error.hpp"

namespace ssms {

Bytes ctr_crypt(ByteView key32, ByteView nonce16, ByteView data)
{
    if (key32.size() != kSymKeyLen)
        throw Error("cipher_failure", "key must be 32 bytes");
    if (nonce16.size() != kNonceLen)
        throw Error("cipher_failure", "nonce must be 16 bytes");

    std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>
        ctx(EVP_CIPHER_CTX_new(), EVP_CIPHER_CTX_free);
    if (!ctx || EVP_EncryptInit_ex(ctx.get(), EVP_aes_256_ctr(), nullptr,
                                   key32.data(), nonce16.data()) != 1)
        throw Error("cipher_failure", "init");

    Bytes out(data.size());
    if (!data.empty()) {
        int len = 0;
        if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, data.data(),
                              static_cast<int>(data.size())) != 1 ||
            static_cast<std::size_t>(len) != data.size())
            throw Error("cipher_failure", "update");
    }
    return out;
}

Bytes encrypt_nonce_prefixed(ByteView key32, ByteView plaintext, Rng& rng)
{
    Bytes nonce = rng.bytes(kNonceLen);
    Bytes out = nonce;
    Bytes ct = ctr_crypt(key32, nonce, plaintext);
    out.insert(out.end(), ct.begin(), ct.end());
    return out;
}

std::optional<Bytes> decrypt_nonce_prefixed(ByteView key32, ByteView data)
{
    if (data.size() < kNonceLen)
        return std::nullopt;
    return ctr_crypt(key32, data.subspan(0, kNonceLen), data.subspan(kNonceLen));
}

} // namespace ssms
