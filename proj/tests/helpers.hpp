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

#ifndef SSMS_TESTS_HELPERS_HPP
#define SSMS_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "ssms/ec.hpp"
#include "ssms/identity.hpp"

#include "oracle.hpp"

namespace testutil {

inline ssms::ec::DomainParams toy_params()
{
    return ssms::ec::DomainParams::create(17, 2, 2, 5, 1, 19, 1,
                                          ssms::ec::ParamMode::test);
}

inline ssms::Identity alice() { return ssms::Identity("+15551000"); }
inline ssms::Identity bob() { return ssms::Identity("+15552000"); }

inline ssms::ec::DomainParams p256()
{
    static const ssms::ec::DomainParams dp =
        ssms::ec::DomainParams::load(SSMS_SOURCE_DIR "/params/secp256r1.conf");
    return dp;
}

inline ssms::ec::Point pt(long x, long y)
{
    return ssms::ec::Point::affine(x, y);
}

// Rng script for one compose() call on the toy curve: candidate bytes
// for the scalar draw (each masked to 5 bits), then the 16-byte cipher
// nonce.
inline std::vector<std::uint8_t> compose_script(std::vector<std::uint8_t> r_bytes,
                                                std::uint8_t nonce_byte = 0x0f)
{
    std::vector<std::uint8_t> script = std::move(r_bytes);
    for (int i = 0; i < 16; ++i)
        script.push_back(nonce_byte);
    return script;
}

} // namespace testutil

#endif
