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

// Independent reference implementations the tests compare the library
// against.  Everything here is deliberately primitive: plain machine
// integers, brute-force modular inverses, repeated addition instead of
// double-and-add, and a from-scratch SHA-256.  None of it shares code
// with the library.

#ifndef SSMS_TESTS_ORACLE_HPP
#define SSMS_TESTS_ORACLE_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ssms/rng.hpp"

namespace oracle {

// The 19-point toy group over GF(17): y^2 = x^3 + 2x + 2, G = (5,1).
inline constexpr long Q = 17;
inline constexpr long A = 2;
inline constexpr long B = 2;
inline constexpr long N = 19;

struct Pt {
    bool inf = true;
    long x = 0;
    long y = 0;

    bool operator==(const Pt& o) const
    {
        if (inf || o.inf)
            return inf == o.inf;
        return x == o.x && y == o.y;
    }
};

inline long modq(long v)
{
    long r = v % Q;
    return r < 0 ? r + Q : r;
}

inline long inv_modq(long v)
{
    v = modq(v);
    for (long c = 1; c < Q; ++c)
        if (modq(v * c) == 1)
            return c;
    throw std::runtime_error("oracle: no inverse");
}

inline bool on_curve(long x, long y)
{
    return modq(y * y) == modq(x * x * x + A * x + B);
}

inline Pt g() { return Pt{false, 5, 1}; }

inline Pt add(const Pt& p, const Pt& q)
{
    if (p.inf)
        return q;
    if (q.inf)
        return p;
    if (p.x == q.x && modq(p.y + q.y) == 0)
        return Pt{};
    long lambda;
    if (p.x == q.x && p.y == q.y)
        lambda = modq((3 * p.x * p.x + A) * inv_modq(2 * p.y));
    else
        lambda = modq((q.y - p.y) * inv_modq(q.x - p.x));
    long x3 = modq(lambda * lambda - p.x - q.x);
    long y3 = modq(lambda * (p.x - x3) - p.y);
    return Pt{false, x3, y3};
}

// Repeated addition, not double-and-add, so the two implementations
// share no structure.
inline Pt mul(long k, const Pt& p)
{
    Pt r;
    for (long i = 0; i < k; ++i)
        r = add(r, p);
    return r;
}

inline std::vector<Pt> all_affine_points()
{
    std::vector<Pt> pts;
    for (long x = 0; x < Q; ++x)
        for (long y = 0; y < Q; ++y)
            if (on_curve(x, y))
                pts.push_back(Pt{false, x, y});
    return pts;
}

// f = 5 bits for n = 19, so the fold is 2^3 + (x mod 2^3).
inline long fold_x(long x) { return 8 + x % 8; }

// Reference SHA-256 (FIPS 180-4), written independently of the library's
// backend.
std::array<std::uint8_t, 32> ref_sha256(const std::vector<std::uint8_t>& data);

// Counter-mode expansion over ref_sha256, mirroring the library's
// published construction.
std::vector<std::uint8_t> ref_expand(const std::vector<std::uint8_t>& input,
                                     std::size_t bits);

// Rng handing out a fixed byte sequence; throws when it runs dry.
class ScriptedRng : public ssms::Rng {
public:
    explicit ScriptedRng(std::vector<std::uint8_t> script)
        : script_(std::move(script))
    {
    }

    void fill(std::uint8_t* out, std::size_t len) override
    {
        if (pos_ + len > script_.size())
            throw std::runtime_error("ScriptedRng exhausted");
        for (std::size_t i = 0; i < len; ++i)
            out[i] = script_[pos_++];
    }

    std::size_t consumed() const { return pos_; }

private:
    std::vector<std::uint8_t> script_;
    std::size_t pos_ = 0;
};

} // namespace oracle

#endif
