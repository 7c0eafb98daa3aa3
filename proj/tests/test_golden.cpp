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

// Frozen wire-format vectors.  Any diff here is a protocol break, not a
// refactoring detail.

#include <fstream>

#include <doctest.h>

#include "ssms/error.hpp"
#include "ssms/signcrypt.hpp"
#include "ssms/sms.hpp"

#include "helpers.hpp"

using namespace ssms;

namespace {

std::vector<std::string> golden_lines(const char* name)
{
    std::ifstream in(std::string(SSMS_SOURCE_DIR "/tests/golden/") + name);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty())
            lines.push_back(line);
    return lines;
}

} // namespace

TEST_CASE("frozen envelope vector")
{
    auto dp = testutil::toy_params();
    auto lines = golden_lines("envelope_toy.hex");
    REQUIRE(lines.size() == 1);
    Bytes want = from_hex(lines[0]);

    // Deterministic compose: sk_a = 3, recipient key 7G, r = 5, nonce
    // bytes 0x0f.
    oracle::ScriptedRng rng(testutil::compose_script({0x05}));
    Envelope env = compose(str_bytes("meet at noon"), 3, testutil::alice(),
                           testutil::pt(0, 6), testutil::bob(), dp, rng);
    CHECK(encode_envelope(env, dp) == want);

    SUBCASE("field layout")
    {
        CHECK(want[0] == kEnvelopeVersion);
        CHECK(want[1] == 9);
        CHECK(std::string(want.begin() + 2, want.begin() + 11) == "+15551000");
        CHECK(Bytes(want.begin() + 21, want.begin() + 24) == from_hex("040910"));
        CHECK(want[24] == 0x0a);   // s = 10
        CHECK(want[25] == 0x00);
        CHECK(want[26] == 28);     // 16-byte nonce + 12-byte message
    }
    SUBCASE("the frozen bytes still deliver")
    {
        DeliverResult res = deliver_envelope_bytes(want, 7, testutil::bob(),
                                                   testutil::pt(10, 6),
                                                   testutil::alice(), dp);
        REQUIRE(res.status == DeliverStatus::ok);
        CHECK(res.plaintext == str_bytes("meet at noon"));
    }
}

TEST_CASE("frozen tamper-suite envelope")
{
    auto dp = testutil::toy_params();
    auto lines = golden_lines("envelope_tamper.hex");
    REQUIRE(lines.size() == 1);
    Bytes want = from_hex(lines[0]);

    // Same keys as the worked example, r = 5, pinned nonce.  The nonce
    // was chosen so that no single-bit flip of the ciphertext region
    // collides in the 18-value challenge space; the acceptance drill
    // sweeps every bit of it.
    std::vector<std::uint8_t> script{0x05};
    for (std::uint8_t v : from_hex("e085969641b075e759a47ec788aa7b85"))
        script.push_back(v);
    oracle::ScriptedRng rng(std::move(script));
    Envelope env = compose(str_bytes("ping"), 3, testutil::alice(),
                           testutil::pt(0, 6), testutil::bob(), dp, rng);
    CHECK(encode_envelope(env, dp) == want);
    CHECK(want[24] == 0x00);   // exercises the s = 0 edge

    DeliverResult res = deliver_envelope_bytes(want, 7, testutil::bob(),
                                               testutil::pt(10, 6),
                                               testutil::alice(), dp);
    REQUIRE(res.status == DeliverStatus::ok);
    CHECK(res.plaintext == str_bytes("ping"));
}

TEST_CASE("frozen transport vector")
{
    auto lines = golden_lines("segments_300.hex");
    REQUIRE(lines.size() == 3);

    Bytes payload(300);
    for (std::size_t i = 0; i < payload.size(); ++i)
        payload[i] = static_cast<std::uint8_t>((i * 7 + 13) & 0xff);

    auto segs = segment(payload, 0x2a, kSsmsPort, kSsmsPort);
    REQUIRE(segs.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(to_hex(segs[i].to_bytes()) == lines[i]);

    std::vector<Segment> parsed;
    for (const auto& line : lines)
        parsed.push_back(Segment::from_bytes(from_hex(line)));
    ReassembleResult res = reassemble(parsed);
    REQUIRE(res.status == ReassembleStatus::ok);
    CHECK(res.payload == payload);
}
