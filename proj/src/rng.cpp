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

#include "ssms/rng.hpp"

#include <limits>

#include <openssl/rand.h>

#include "ssms/error.hpp"

namespace ssms {

void SystemRng::fill(std::uint8_t* out, std::size_t len)
{
    if (len == 0)
        return;
    if (len > static_cast<std::size_t>(std::numeric_limits<int>::max()))
        throw Error("rng_failure", "request too large");
    if (RAND_bytes(out, static_cast<int>(len)) != 1)
        throw Error("rng_failure", "RAND_bytes failed");
}

SystemRng& system_rng()
{
    static SystemRng rng;
    return rng;
}

} // namespace ssms
