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

#include <doctest.h>

#include "ssms/ec.hpp"
#include "ssms/error.hpp"

#include "helpers.hpp"

using namespace ssms;
using testutil::pt;
using testutil::toy_params;

// Multiples 0G..19G of G = (5,1), frozen from the enumeration oracle.
// {-1,-1} marks the point at infinity.
static const long kToyTable[20][2] = {
    {-1, -1}, {5, 1},   {6, 3},   {10, 6},  {3, 1},   {9, 16},  {16, 13},
    {0, 6},   {13, 7},  {7, 6},   {7, 11},  {13, 10}, {0, 11},  {16, 4},
    {9, 1},   {3, 16},  {10, 11}, {6, 14},  {5, 16},  {-1, -1}};

static ec::Point table_point(int i)
{
    if (kToyTable[i][0] < 0)
        return ec::Point::at_infinity();
    return pt(kToyTable[i][0], kToyTable[i][1]);
}

static oracle::Pt oracle_table_point(int i)
{
    if (kToyTable[i][0] < 0)
        return oracle::Pt{};
    return oracle::Pt{false, kToyTable[i][0], kToyTable[i][1]};
}

TEST_CASE("frozen toy group table matches the enumeration oracle")
{
    for (int i = 0; i < 20; ++i)
        CHECK(oracle::mul(i, oracle::g()) == oracle_table_point(i));
    CHECK(oracle::all_affine_points().size() == 18);
}

TEST_CASE("scalar_mul reproduces the frozen table")
{
    auto dp = toy_params();
    for (int i = 0; i < 20; ++i) {
        ec::Point p = ec::scalar_mul(i, dp.G, dp);
        CHECK(p == table_point(i));
    }
}

TEST_CASE("group law matches the oracle over all scalar pairs")
{
    auto dp = toy_params();
    for (int i = 0; i < 19; ++i) {
        for (int j = 0; j < 19; ++j) {
            ec::Point lib =
                ec::point_add(ec::scalar_mul(i, dp.G, dp), ec::scalar_mul(j, dp.G, dp), dp);
            oracle::Pt ref = oracle::add(oracle::mul(i, oracle::g()), oracle::mul(j, oracle::g()));
            if (ref.inf) {
                CHECK(lib.infinity);
            } else {
                REQUIRE_FALSE(lib.infinity);
                CHECK(lib.x == ref.x);
                CHECK(lib.y == ref.y);
            }
        }
    }
}

TEST_CASE("scalar_mul does not reduce the scalar")
{
    auto dp = toy_params();
    CHECK(ec::scalar_mul(19, dp.G, dp).infinity);
    CHECK(ec::scalar_mul(38, dp.G, dp).infinity);
    CHECK(ec::scalar_mul(20, dp.G, dp) == dp.G);
    CHECK(ec::scalar_mul(0, dp.G, dp).infinity);
}

TEST_CASE("point negation and inverse pairs")
{
    auto dp = toy_params();
    ec::Point g = dp.G;
    ec::Point neg = ec::point_neg(g, dp);
    CHECK(neg == pt(5, 16));
    CHECK(ec::point_add(g, neg, dp).infinity);
    CHECK(ec::point_neg(ec::Point::at_infinity(), dp).infinity);
}

TEST_CASE("validate_point sweeps the whole coordinate plane like the oracle")
{
    auto dp = toy_params();
    int valid = 0;
    for (long x = 0; x < 17; ++x) {
        for (long y = 0; y < 17; ++y) {
            bool lib_ok = ec::validate_point(pt(x, y), dp) == ec::PointCheck::ok;
            CHECK(lib_ok == oracle::on_curve(x, y));
            valid += lib_ok ? 1 : 0;
        }
    }
    CHECK(valid == 18);

    CHECK(ec::validate_point(ec::Point::at_infinity(), dp) == ec::PointCheck::infinity);
    CHECK(ec::validate_point(pt(17, 1), dp) == ec::PointCheck::coordinate_range);
    CHECK(ec::validate_point(pt(1, 1), dp) == ec::PointCheck::not_on_curve);
}

TEST_CASE("half_x folds the low bits of the x-coordinate")
{
    auto dp = toy_params();
    CHECK(dp.f == 5);
    CHECK(ec::half_x(9, dp) == 9);    // 8 + (9 mod 8)
    CHECK(ec::half_x(5, dp) == 13);   // 8 + 5
    CHECK(ec::half_x(0, dp) == 8);
    CHECK(ec::half_x(16, dp) == 8);   // 8 + (16 mod 8)
}

TEST_CASE("point encoding round-trips and rejects malformed bytes")
{
    auto dp = toy_params();
    ec::Point p = pt(9, 16);
    Bytes enc = ec::encode_point(p, dp);
    CHECK(to_hex(enc) == "040910");
    CHECK(ec::decode_point(enc, dp) == p);

    SUBCASE("wrong length")
    {
        Bytes bad = enc;
        bad.push_back(0x00);
        CHECK_THROWS_WITH_AS(ec::decode_point(bad, dp), doctest::Contains("malformed_length"), Error);
    }
    SUBCASE("wrong tag")
    {
        Bytes bad = enc;
        bad[0] = 0x02;
        CHECK_THROWS_WITH_AS(ec::decode_point(bad, dp), doctest::Contains("bad_tag"), Error);
    }
    SUBCASE("off-curve")
    {
        Bytes bad = enc;
        bad[1] = 0x01;   // (1,16) is not on the curve
        CHECK_THROWS_WITH_AS(ec::decode_point(bad, dp), doctest::Contains("point_invalid"), Error);
        CHECK_NOTHROW(ec::decode_point(bad, dp, false));
    }
    SUBCASE("coordinate out of range")
    {
        Bytes bad = enc;
        bad[2] = 0x11;   // y = 17 = q
        CHECK_THROWS_WITH_AS(ec::decode_point(bad, dp), doctest::Contains("point_invalid"), Error);
    }
    SUBCASE("infinity cannot be encoded")
    {
        CHECK_THROWS_WITH_AS(ec::encode_point(ec::Point::at_infinity(), dp),
                             doctest::Contains("point_invalid"), Error);
    }
}

TEST_CASE("parameter files parse decimal and hex values")
{
    auto dp = ec::DomainParams::parse("# comment\n"
                                      "q = 17\n"
                                      "a = 0x02\n"
                                      "b = 2\n"
                                      "Gx = 5\n"
                                      "Gy = 1\n"
                                      "n = 0x13\n"
                                      "h = 1\n"
                                      "mode = test\n");
    CHECK(dp.q == 17);
    CHECK(dp.n == 19);
    CHECK(dp.f == 5);
    CHECK(dp.field_byte_len == 1);
    CHECK(dp.scalar_byte_len == 1);
    CHECK(dp.mode == ec::ParamMode::test);

    CHECK_THROWS_WITH_AS(ec::DomainParams::parse("q=17\n"), doctest::Contains("missing key"), Error);
    CHECK_THROWS_WITH_AS(ec::DomainParams::parse("q=17\nq=17\n"), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(
        ec::DomainParams::parse("q=17\na=2\nb=2\nGx=5\nGy=1\nn=19\nh=1\nmode=loose\n"),
        doctest::Contains("mode"), Error);
    CHECK_THROWS_WITH_AS(
        ec::DomainParams::parse("q=17\na=2\nb=2\nGx=5\nGy=1\nn=19\nh=1\nwat=1\n"),
        doctest::Contains("unknown key"), Error);
    CHECK_THROWS_WITH_AS(
        ec::DomainParams::parse("q=xyz\na=2\nb=2\nGx=5\nGy=1\nn=19\nh=1\n"),
        doctest::Contains("bad integer"), Error);
}

TEST_CASE("DomainParams::create rejects malformed inputs")
{
    CHECK_THROWS_WITH_AS(ec::DomainParams::create(15, 2, 2, 5, 1, 19, 1),
                         doctest::Contains("odd prime"), Error);
    CHECK_THROWS_WITH_AS(ec::DomainParams::create(17, 17, 2, 5, 1, 19, 1),
                         doctest::Contains("out of range"), Error);
    CHECK_THROWS_WITH_AS(ec::DomainParams::create(17, 2, 2, 5, 1, 0, 1),
                         doctest::Contains(">= 1"), Error);
}

static const ec::ParamCheck* find_check(const ec::ParamCheckReport& rep,
                                        const std::string& name)
{
    for (const auto& c : rep.checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

TEST_CASE("domain validation: toy curve passes test mode with a warning")
{
    auto rep = ec::validate_domain_params(toy_params());
    CHECK(rep.ok);
    CHECK(rep.first_failure.empty());
    REQUIRE(rep.warnings.size() == 1);
    CHECK(rep.warnings[0].find("embedding_degree") != std::string::npos);
    CHECK(rep.warnings[0].find("i = 9") != std::string::npos);
}

TEST_CASE("domain validation: toy curve fails strict mode on size and embedding degree")
{
    auto rep = ec::validate_domain_params(toy_params(), ec::ParamMode::strict);
    CHECK_FALSE(rep.ok);
    CHECK(rep.first_failure == "bit_length");

    const auto* bits = find_check(rep, "order_bits");
    REQUIRE(bits != nullptr);
    CHECK_FALSE(bits->passed);

    const auto* emb = find_check(rep, "embedding_degree");
    REQUIRE(emb != nullptr);
    CHECK_FALSE(emb->passed);
    CHECK(emb->detail.find("i = 9") != std::string::npos);
}

TEST_CASE("domain validation: individual failure reasons")
{
    SUBCASE("singular curve")
    {
        auto dp = ec::DomainParams::create(17, 0, 0, 5, 1, 19, 1, ec::ParamMode::test);
        auto rep = ec::validate_domain_params(dp);
        CHECK_FALSE(rep.ok);
        CHECK(rep.first_failure == "singular");
    }
    SUBCASE("base point off the curve")
    {
        auto dp = ec::DomainParams::create(17, 2, 2, 5, 2, 19, 1, ec::ParamMode::test);
        auto rep = ec::validate_domain_params(dp);
        CHECK_FALSE(rep.ok);
        CHECK(rep.first_failure == "base_point_invalid");
    }
    SUBCASE("wrong group order")
    {
        auto dp = ec::DomainParams::create(17, 2, 2, 5, 1, 23, 1, ec::ParamMode::test);
        auto rep = ec::validate_domain_params(dp);
        CHECK_FALSE(rep.ok);
        const auto* c = find_check(rep, "ng_identity");
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->passed);
    }
    SUBCASE("composite order")
    {
        auto dp = ec::DomainParams::create(17, 2, 2, 5, 1, 38, 1, ec::ParamMode::test);
        auto rep = ec::validate_domain_params(dp);
        const auto* c = find_check(rep, "order_prime");
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->passed);
    }
    SUBCASE("anomalous guard n = q")
    {
        auto dp = ec::DomainParams::create(17, 2, 2, 5, 1, 17, 1, ec::ParamMode::test);
        auto rep = ec::validate_domain_params(dp);
        const auto* c = find_check(rep, "order_distinct");
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->passed);
    }
    SUBCASE("subgroup too small")
    {
        auto dp = ec::DomainParams::create(17, 2, 2, 5, 1, 5, 1, ec::ParamMode::test);
        auto rep = ec::validate_domain_params(dp);
        const auto* c = find_check(rep, "order_bound");
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->passed);
    }
    SUBCASE("supersingular trace")
    {
        // q + 1 - n·h = 0 exactly when n·h = 18 here.
        auto dp = ec::DomainParams::create(17, 2, 2, 5, 1, 18, 1, ec::ParamMode::test);
        auto rep = ec::validate_domain_params(dp);
        const auto* c = find_check(rep, "non_supersingular");
        REQUIRE(c != nullptr);
        CHECK_FALSE(c->passed);
    }
}

TEST_CASE("toy params file ships with the repo and validates")
{
    auto dp = ec::DomainParams::load(SSMS_SOURCE_DIR "/params/toy.conf");
    CHECK(dp.mode == ec::ParamMode::test);
    CHECK(dp.q == 17);
    CHECK(ec::validate_domain_params(dp).ok);
    CHECK_FALSE(ec::validate_domain_params(dp, ec::ParamMode::strict).ok);
}

TEST_CASE("production params file passes strict validation")
{
    auto dp = ec::DomainParams::load(SSMS_SOURCE_DIR "/params/secp256r1.conf");
    CHECK(dp.mode == ec::ParamMode::strict);
    CHECK(dp.f == 256);
    CHECK(dp.field_byte_len == 32);
    auto rep = ec::validate_domain_params(dp);
    for (const auto& c : rep.checks)
        INFO(c.name, ": ", c.passed);
    CHECK(rep.ok);
    CHECK(rep.warnings.empty());
}
