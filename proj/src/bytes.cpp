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

#include "ssms/bytes.hpp"

#include "ssms/error.hpp"

namespace ssms {

static const char* hex_digits = "0123456789abcdef";

std::string to_hex(ByteView data)
{
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(hex_digits[b >> 4]);
        out.push_back(hex_digits[b & 0x0f]);
    }
    return out;
}

static int hex_val(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

Bytes from_hex(const std::string& hex)
{
    if (hex.size() % 2 != 0)
        throw Error("bad_hex", "odd number of digits");
    Bytes out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_val(hex[i]), lo = hex_val(hex[i + 1]);
        if (hi < 0 || lo < 0)
            throw Error("bad_hex", "invalid digit");
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

Bytes str_bytes(std::string_view s)
{
    return Bytes(s.begin(), s.end());
}

Bytes int_to_bytes_be(const mpz_class& v, std::size_t width)
{
    if (sgn(v) < 0)
        throw Error("int_overflow", "negative value");
    Bytes out(width, 0);
    if (sgn(v) == 0)
        return out;
    std::size_t needed = (mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8;
    if (needed > width)
        throw Error("int_overflow", "value needs " + std::to_string(needed) + " bytes");
    std::size_t count = 0;
    mpz_export(out.data() + (width - needed), &count, 1, 1, 1, 0, v.get_mpz_t());
    return out;
}

mpz_class bytes_to_int_be(ByteView data)
{
    mpz_class r;
    if (!data.empty())
        mpz_import(r.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
    return r;
}

void append(Bytes& out, ByteView data)
{
    out.insert(out.end(), data.begin(), data.end());
}

void append_u8(Bytes& out, std::uint8_t v)
{
    out.push_back(v);
}

void append_u16_be(Bytes& out, std::uint16_t v)
{
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void append_u32_be(Bytes& out, std::uint32_t v)
{
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

} // namespace ssms
