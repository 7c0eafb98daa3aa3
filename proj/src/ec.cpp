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

#include "ssms/ec.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ssms/error.hpp"
#include "ssms/instrument.hpp"

namespace ssms::ec {

namespace {

Int mod(const Int& v, const Int& m)
{
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int inv_mod(const Int& v, const Int& m)
{
    Int r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("point_invalid", "degenerate addition");
    return r;
}

bool probab_prime(const Int& v)
{
    return mpz_probab_prime_p(v.get_mpz_t(), 64) >= 1;
}

// y^2 - (x^3 + ax + b) mod q
Int curve_residual(const Int& x, const Int& y, const DomainParams& dp)
{
    Int rhs = mod(x * x * x + dp.a * x + dp.b, dp.q);
    return mod(y * y - rhs, dp.q);
}

std::string trim(const std::string& s)
{
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& s)
{
    try {
        if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X'))
            return Int(s.substr(2), 16);
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw Error("corrupt_file", "bad integer '" + s + "'");
    }
}

} // namespace

const char* to_string(PointCheck c)
{
    switch (c) {
    case PointCheck::ok:
        return "ok";
    case PointCheck::infinity:
        return "infinity";
    case PointCheck::coordinate_range:
        return "coordinate_range";
    case PointCheck::not_on_curve:
        return "not_on_curve";
    }
    return "?";
}

DomainParams DomainParams::create(const Int& q, const Int& a, const Int& b,
                                  const Int& gx, const Int& gy,
                                  const Int& n, const Int& h, ParamMode mode)
{
    if (q <= 3 || mpz_even_p(q.get_mpz_t()) || !probab_prime(q))
        throw Error("bad_params", "q must be an odd prime > 3");
    for (const Int* v : {&a, &b, &gx, &gy})
        if (*v < 0 || *v >= q)
            throw Error("bad_params", "field element out of range");
    if (n < 1 || h < 1)
        throw Error("bad_params", "n and h must be >= 1");

    DomainParams dp;
    dp.q = q;
    dp.a = a;
    dp.b = b;
    dp.G = Point::affine(gx, gy);
    dp.n = n;
    dp.h = h;
    dp.f = static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2));
    dp.field_byte_len = (mpz_sizeinbase(q.get_mpz_t(), 2) + 7) / 8;
    dp.scalar_byte_len = (dp.f + 7) / 8;
    dp.mode = mode;
    return dp;
}

DomainParams DomainParams::parse(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("corrupt_file", "expected key=value, got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw Error("corrupt_file", "empty key or value");
        if (!kv.emplace(key, val).second)
            throw Error("corrupt_file", "duplicate key '" + key + "'");
    }

    for (const char* req : {"q", "a", "b", "Gx", "Gy", "n", "h"})
        if (kv.find(req) == kv.end())
            throw Error("corrupt_file", std::string("missing key '") + req + "'");

    ParamMode mode = ParamMode::strict;
    for (const auto& [key, val] : kv) {
        if (key == "mode") {
            if (val == "strict")
                mode = ParamMode::strict;
            else if (val == "test")
                mode = ParamMode::test;
            else
                throw Error("corrupt_file", "mode must be strict or test");
        } else if (key != "q" && key != "a" && key != "b" && key != "Gx" &&
                   key != "Gy" && key != "n" && key != "h") {
            throw Error("corrupt_file", "unknown key '" + key + "'");
        }
    }

    return create(parse_int(kv["q"]), parse_int(kv["a"]), parse_int(kv["b"]),
                  parse_int(kv["Gx"]), parse_int(kv["Gy"]),
                  parse_int(kv["n"]), parse_int(kv["h"]), mode);
}

DomainParams DomainParams::load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("corrupt_file", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

PointCheck validate_point(const Point& p, const DomainParams& dp)
{
    instrument::validate_point_calls().fetch_add(1, std::memory_order_relaxed);
    if (p.infinity)
        return PointCheck::infinity;
    if (p.x < 0 || p.x >= dp.q || p.y < 0 || p.y >= dp.q)
        return PointCheck::coordinate_range;
    if (curve_residual(p.x, p.y, dp) != 0)
        return PointCheck::not_on_curve;
    return PointCheck::ok;
}

Point point_neg(const Point& p, const DomainParams& dp)
{
    if (p.infinity)
        return p;
    return Point::affine(p.x, mod(-p.y, dp.q));
}

Point point_add(const Point& p, const Point& q, const DomainParams& dp)
{
    if (p.infinity)
        return q;
    if (q.infinity)
        return p;

    Int lambda;
    if (p.x == q.x) {
        if (mod(p.y + q.y, dp.q) == 0)
            return Point::at_infinity();
        if (p.y != q.y)
            throw Error("point_invalid", "degenerate addition");
        lambda = mod((3 * p.x * p.x + dp.a) * inv_mod(mod(2 * p.y, dp.q), dp.q), dp.q);
    } else {
        lambda = mod((q.y - p.y) * inv_mod(mod(q.x - p.x, dp.q), dp.q), dp.q);
    }

    Int x3 = mod(lambda * lambda - p.x - q.x, dp.q);
    Int y3 = mod(lambda * (p.x - x3) - p.y, dp.q);
    return Point::affine(std::move(x3), std::move(y3));
}

Point scalar_mul(const Int& k, const Point& p, const DomainParams& dp)
{
    if (k < 0)
        throw Error("bad_scalar", "negative scalar");
    if (k == 0 || p.infinity)
        return Point::at_infinity();

    Point r = Point::at_infinity();
    for (std::size_t i = mpz_sizeinbase(k.get_mpz_t(), 2); i-- > 0;) {
        r = point_add(r, r, dp);
        if (mpz_tstbit(k.get_mpz_t(), i))
            r = point_add(r, p, dp);
    }
    return r;
}

Int half_x(const Int& x, const DomainParams& dp)
{
    unsigned hbits = (dp.f + 1) / 2;
    Int low;
    mpz_fdiv_r_2exp(low.get_mpz_t(), x.get_mpz_t(), hbits);
    Int base = 1;
    mpz_mul_2exp(base.get_mpz_t(), base.get_mpz_t(), hbits);
    return base + low;
}

ParamCheckReport validate_domain_params(const DomainParams& dp)
{
    return validate_domain_params(dp, dp.mode);
}

ParamCheckReport validate_domain_params(const DomainParams& dp, ParamMode mode)
{
    ParamCheckReport rep;
    auto add = [&rep](const std::string& name, bool passed,
                      const std::string& reason, const std::string& detail) {
        rep.checks.push_back({name, passed, detail});
        if (!passed) {
            rep.ok = false;
            if (rep.first_failure.empty())
                rep.first_failure = reason;
        }
    };

    bool q_prime = dp.q > 3 && mpz_odd_p(dp.q.get_mpz_t()) && probab_prime(dp.q);
    add("field_prime", q_prime, "field_not_prime",
        q_prime ? "" : "q is not an odd prime > 3");

    bool nonsingular = mod(4 * dp.a * dp.a * dp.a + 27 * dp.b * dp.b, dp.q) != 0;
    add("nonsingular", nonsingular, "singular",
        nonsingular ? "" : "4a^3 + 27b^2 ≡ 0 (mod q)");

    bool g_ok = validate_point(dp.G, dp) == PointCheck::ok;
    add("base_point", g_ok, "base_point_invalid",
        g_ok ? "" : "G is not a valid curve point");

    bool n_prime = probab_prime(dp.n);
    add("order_prime", n_prime, "order_not_prime", n_prime ? "" : "n is composite");

    bool ng_identity = false;
    try {
        ng_identity = g_ok && scalar_mul(dp.n, dp.G, dp).infinity;
    } catch (const Error&) {
        ng_identity = false;
    }
    add("ng_identity", ng_identity, "base_point_order",
        ng_identity ? "" : "nG is not the point at infinity");

    bool distinct = dp.n != dp.q;
    add("order_distinct", distinct, "anomalous", distinct ? "" : "n = q");

    bool bound = dp.n * dp.n > 16 * dp.q;
    add("order_bound", bound, "subgroup_bound", bound ? "" : "n <= 4*sqrt(q)");

    Int trace = dp.q + 1 - dp.n * dp.h;
    bool ordinary = mod(trace, dp.q) != 0;
    add("non_supersingular", ordinary, "supersingular",
        ordinary ? "" : "trace of Frobenius ≡ 0 (mod q)");

    // Small embedding degree would let pairings move the discrete log
    // into a finite field.  Compute the first i <= 20 with q^i ≡ 1 (mod n).
    int weak_i = 0;
    if (dp.n > 1) {
        Int qi;
        for (int i = 1; i <= 20; ++i) {
            Int e = i;
            mpz_powm(qi.get_mpz_t(), dp.q.get_mpz_t(), e.get_mpz_t(), dp.n.get_mpz_t());
            if (qi == 1) {
                weak_i = i;
                break;
            }
        }
    }

    if (mode == ParamMode::strict) {
        Int lim = 1;
        mpz_mul_2exp(lim.get_mpz_t(), lim.get_mpz_t(), 160);
        bool big = dp.n > lim;
        add("order_bits", big, "bit_length",
            big ? "" : "n <= 2^160 (" + std::to_string(dp.f) + " bits)");

        add("embedding_degree", weak_i == 0, "embedding_degree",
            weak_i == 0 ? ""
                        : "n divides q^i - 1 for i = " + std::to_string(weak_i));
    } else if (weak_i != 0) {
        rep.warnings.push_back("embedding_degree: n divides q^i - 1 for i = " +
                               std::to_string(weak_i));
    }

    return rep;
}

Bytes encode_point(const Point& p, const DomainParams& dp)
{
    if (validate_point(p, dp) != PointCheck::ok)
        throw Error("point_invalid", "cannot encode");
    Bytes out;
    out.reserve(1 + 2 * dp.field_byte_len);
    append_u8(out, 0x04);
    append(out, int_to_bytes_be(p.x, dp.field_byte_len));
    append(out, int_to_bytes_be(p.y, dp.field_byte_len));
    return out;
}

Point decode_point(ByteView data, const DomainParams& dp, bool validate)
{
    if (data.size() != 1 + 2 * dp.field_byte_len)
        throw Error("malformed_length",
                    "expected " + std::to_string(1 + 2 * dp.field_byte_len) +
                        " bytes, got " + std::to_string(data.size()));
    if (data[0] != 0x04)
        throw Error("bad_tag", "expected uncompressed tag 0x04");

    Point p = Point::affine(bytes_to_int_be(data.subspan(1, dp.field_byte_len)),
                            bytes_to_int_be(data.subspan(1 + dp.field_byte_len)));
    if (validate) {
        PointCheck c = validate_point(p, dp);
        if (c != PointCheck::ok)
            throw Error("point_invalid", to_string(c));
    }
    return p;
}

} // namespace ssms::ec
