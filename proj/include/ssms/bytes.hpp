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

#ifndef SSMS_BYTES_HPP
#define SSMS_BYTES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ssms {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView data);
Bytes from_hex(const std::string& hex);   // throws Error("bad_hex")

Bytes str_bytes(std::string_view s);

// Fixed-width big-endian encoding of a non-negative integer.  Throws
// Error("int_overflow") if the value does not fit in `width` bytes.
Bytes int_to_bytes_be(const mpz_class& v, std::size_t width);
mpz_class bytes_to_int_be(ByteView data);

void append(Bytes& out, ByteView data);
void append_u8(Bytes& out, std::uint8_t v);
void append_u16_be(Bytes& out, std::uint16_t v);
void append_u32_be(Bytes& out, std::uint32_t v);

} // namespace ssms

#endif
