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

#ifndef SSMS_HASH_HPP
#define SSMS_HASH_HPP

#include <array>

#include "ssms/bytes.hpp"

namespace ssms {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteView data);

// Counter-mode expansion of SHA-256 to an arbitrary bit length:
// H(input ‖ 1) ‖ H(input ‖ 2) ‖ ..., counters as 32-bit big-endian,
// truncated to ceil(bits/8) bytes.
Bytes sha256_expand(ByteView input, std::size_t bits);

Digest hmac_sha256(ByteView key, ByteView msg);

bool ct_equal(ByteView a, ByteView b);

} // namespace ssms

#endif
