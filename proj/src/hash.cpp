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

#include "ssms/hash.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include "ssms/error.hpp"

namespace ssms {

Digest sha256(ByteView data)
{
    Digest out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size())
        throw Error("hash_failure", "EVP_Digest");
    return out;
}

Bytes sha256_expand(ByteView input, std::size_t bits)
{
    std::size_t want = (bits + 7) / 8;
    Bytes block(input.begin(), input.end());
    block.resize(input.size() + 4);
    Bytes out;
    out.reserve(want);
    for (std::uint32_t ctr = 1; out.size() < want; ++ctr) {
        block[input.size() + 0] = static_cast<std::uint8_t>(ctr >> 24);
        block[input.size() + 1] = static_cast<std::uint8_t>(ctr >> 16);
        block[input.size() + 2] = static_cast<std::uint8_t>(ctr >> 8);
        block[input.size() + 3] = static_cast<std::uint8_t>(ctr);
        Digest d = sha256(block);
        std::size_t take = std::min(d.size(), want - out.size());
        out.insert(out.end(), d.begin(), d.begin() + take);
    }
    return out;
}

Digest hmac_sha256(ByteView key, ByteView msg)
{
    Digest out{};
    unsigned int len = 0;
    static const std::uint8_t empty = 0;
    const void* kp = key.empty() ? static_cast<const void*>(&empty) : key.data();
    if (HMAC(EVP_sha256(), kp, static_cast<int>(key.size()),
             msg.data(), msg.size(), out.data(), &len) == nullptr ||
        len != out.size())
        throw Error("hash_failure", "HMAC");
    return out;
}

bool ct_equal(ByteView a, ByteView b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

} // namespace ssms
