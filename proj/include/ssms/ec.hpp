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

#ifndef SSMS_EC_HPP
#define SSMS_EC_HPP

#include <string>
#include <vector>

#include "ssms/bytes.hpp"

namespace ssms::ec {

using Int = mpz_class;

// Affine point on a short Weierstrass curve y^2 = x^3 + ax + b over
// GF(q), or the point at infinity.
struct Point {
    bool infinity = true;
    Int x{0};
    Int y{0};

    static Point at_infinity() { return Point{}; }
    static Point affine(Int px, Int py)
    {
        return Point{false, std::move(px), std::move(py)};
    }

    bool operator==(const Point& o) const
    {
        if (infinity || o.infinity)
            return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

enum class ParamMode { strict, test };

// Curve domain parameters (q, a, b, G, n, h) plus derived sizes:
// f = floor(log2 n) + 1, the bit length of the group order, and the
// byte widths used by the fixed-width wire encodings.
struct DomainParams {
    Int q, a, b;
    Point G;
    Int n, h;
    unsigned f = 0;
    std::size_t field_byte_len = 0;
    std::size_t scalar_byte_len = 0;
    ParamMode mode = ParamMode::strict;

    // Basic well-formedness only (q an odd prime > 3, coordinates in
    // range, n >= 1, h >= 1); run validate_domain_params for the full
    // suitability checks.
    static DomainParams create(const Int& q, const Int& a, const Int& b,
                               const Int& gx, const Int& gy,
                               const Int& n, const Int& h,
                               ParamMode mode = ParamMode::strict);

    // Parses a key=value parameter file with keys q, a, b, Gx, Gy, n, h
    // and optional mode (strict|test).  Values are decimal or 0x-hex.
    static DomainParams load(const std::string& path);
    static DomainParams parse(const std::string& text);
};

enum class PointCheck { ok, infinity, coordinate_range, not_on_curve };
const char* to_string(PointCheck c);

// Public-key/ephemeral-point validation: P != O, coordinates in
// [0, q-1], and P satisfies the curve equation.
PointCheck validate_point(const Point& p, const DomainParams& dp);

struct ParamCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ParamCheckReport {
    std::vector<ParamCheck> checks;
    std::vector<std::string> warnings;
    bool ok = true;
    std::string first_failure;   // name of the first failed check
};

// Domain-parameter suitability.  Always checks: field primality,
// nonsingularity, base-point validity, primality of n, nG = O, n != q,
// n > 4*sqrt(q), and that the curve is not supersingular.  Strict mode
// additionally requires n > 2^160 and embedding degree > 20 (n must not
// divide q^i - 1 for i <= 20); in test mode an embedding-degree failure
// is reported as a warning instead.
ParamCheckReport validate_domain_params(const DomainParams& dp, ParamMode mode);
ParamCheckReport validate_domain_params(const DomainParams& dp);

Point point_neg(const Point& p, const DomainParams& dp);
Point point_add(const Point& p, const Point& q, const DomainParams& dp);

// Double-and-add over the full bit length of k (k >= 0).  k is used as
// given, with no reduction mod n, so that order checks like nG = O
// exercise the real group law.
Point scalar_mul(const Int& k, const Point& p, const DomainParams& dp);

// x-coordinate folding used by the signcryption key agreement:
// 2^ceil(f/2) + (x mod 2^ceil(f/2)).
Int half_x(const Int& x, const DomainParams& dp);

// Uncompressed encoding 0x04 ‖ x ‖ y with fixed-width big-endian
// coordinates.  Throws Error("point_invalid") for the point at infinity
// or an off-curve point.
Bytes encode_point(const Point& p, const DomainParams& dp);

// Throws Error("malformed_length"), Error("bad_tag"), or, when
// `validate` is set, Error("point_invalid").
Point decode_point(ByteView data, const DomainParams& dp, bool validate = true);

} // namespace ssms::ec

#endif
