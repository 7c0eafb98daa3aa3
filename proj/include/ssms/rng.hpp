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

#ifndef SSMS_RNG_HPP
#define SSMS_RNG_HPP

#include "ssms/bytes.hpp"

namespace ssms {

// Randomness source.  All key and nonce generation goes through this
// interface so tests can substitute deterministic streams.
class Rng {
public:
    virtual ~Rng() = default;
    virtual void fill(std::uint8_t* out, std::size_t len) = 0;

    Bytes bytes(std::size_t n)
    {
        Bytes out(n);
        if (n > 0)
            fill(out.data(), n);
        return out;
    }
};

// System CSPRNG.  Throws Error("rng_failure") if the kernel entropy
// source is unavailable.
class SystemRng : public Rng {
public:
    void fill(std::uint8_t* out, std::size_t len) override;
};

SystemRng& system_rng();

} // namespace ssms

#endif
