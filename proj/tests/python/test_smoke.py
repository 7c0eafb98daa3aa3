# Copyright (C) 2026 The ssms authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the python extension.

The heavy correctness drills live in the C++ suites; these check that
the binding surface round-trips cleanly and that rejects surface as
statuses and exceptions the way the C++ API defines them.
"""

import random
from pathlib import Path

import pytest

import ssms

ROOT = Path(__file__).resolve().parents[2]

ALICE = "+15551000"
BOB = "+15552000"


@pytest.fixture(scope="module")
def toy():
    return ssms.DomainParams.load(str(ROOT / "params" / "toy.conf"))


@pytest.fixture(scope="module")
def p256():
    return ssms.DomainParams.load(str(ROOT / "params" / "secp256r1.conf"))


@pytest.fixture(scope="module")
def p256_keys(p256):
    sk_a, pk_a = ssms.keygen(p256)
    sk_b, pk_b = ssms.keygen(p256)
    return sk_a, pk_a, sk_b, pk_b


def test_params_expose_curve_constants(toy):
    assert toy.q == 17
    assert toy.n == 19
    assert toy.h == 1
    assert toy.f == 5
    assert toy.mode == "test"
    assert toy.generator == bytes([0x04, 0x05, 0x01])


def test_toy_params_pass_in_test_mode_with_a_warning(toy):
    report = ssms.validate_params(toy)
    assert report["ok"]
    assert any("embedding_degree" in w for w in report["warnings"])
    passed = {c["name"] for c in report["checks"] if c["passed"]}
    assert "field_prime" in passed
    assert "base_point" in passed


def test_toy_params_fail_strict_mode_on_order_size(toy):
    report = ssms.validate_params(toy, mode="strict")
    assert not report["ok"]
    assert report["first_failure"] == "bit_length"


def test_production_params_pass_strict_mode(p256):
    report = ssms.validate_params(p256, mode="strict")
    assert report["ok"]
    assert report["warnings"] == []


def test_round_trip(toy):
    sk_a, pk_a = ssms.keygen(toy)
    sk_b, pk_b = ssms.keygen(toy)
    message = b"meet at noon"

    envelope = ssms.compose(message, sk_a, ALICE, pk_b, BOB, toy)
    result = ssms.deliver(envelope, sk_b, BOB, pk_a, ALICE, toy)

    assert result["status"] == "ok"
    assert result["plaintext"] == message
    assert len(result["session_key"]) == ssms.SESSION_KEY_BITS // 8


def test_envelope_fields_round_trip(toy):
    sk_a, _ = ssms.keygen(toy)
    _, pk_b = ssms.keygen(toy)

    envelope = ssms.compose(b"hello", sk_a, ALICE, pk_b, BOB, toy)
    fields = ssms.decode_envelope(envelope, toy)

    assert fields["sender"] == ALICE
    assert fields["recipient"] == BOB
    assert envelope[0] == ssms.ENVELOPE_VERSION
    assert 0 <= fields["s"] < toy.n

    rebuilt = ssms.encode_envelope(fields["sender"], fields["recipient"],
                                   fields["R"], fields["C"], fields["s"], toy)
    assert rebuilt == envelope


def test_ciphertext_tamper_is_rejected(p256, p256_keys):
    sk_a, pk_a, sk_b, pk_b = p256_keys
    envelope = ssms.compose(b"wire me the documents", sk_a, ALICE, pk_b, BOB, p256)

    tampered = bytearray(envelope)
    tampered[-1] ^= 0x01
    result = ssms.deliver(bytes(tampered), sk_b, BOB, pk_a, ALICE, p256)

    assert result["status"] == "signature_mismatch"
    assert result["plaintext"] is None
    assert result["session_key"] is None


def test_wrong_recipient_key_cannot_open(p256, p256_keys):
    sk_a, pk_a, _, pk_b = p256_keys
    sk_eve, _ = ssms.keygen(p256)
    envelope = ssms.compose(b"for bob only", sk_a, ALICE, pk_b, BOB, p256)

    result = ssms.deliver(envelope, sk_eve, BOB, pk_a, ALICE, p256)

    assert result["status"] != "ok"
    assert result["plaintext"] is None


def test_stale_timestamp_is_rejected(toy):
    sk_a, pk_a = ssms.keygen(toy)
    sk_b, pk_b = ssms.keygen(toy)
    envelope = ssms.compose(b"old news", sk_a, ALICE, pk_b, BOB, toy)

    result = ssms.deliver(envelope, sk_b, BOB, pk_a, ALICE, toy,
                          message_timestamp=1000, now=1000 + 25 * 3600)

    assert result["status"] == "stale_timestamp"


def test_bad_identity_is_refused(toy):
    sk_a, _ = ssms.keygen(toy)
    _, pk_b = ssms.keygen(toy)

    with pytest.raises(ssms.Error, match="bad_identity"):
        ssms.compose(b"hi", sk_a, "not-a-number", pk_b, BOB, toy)


def test_judge_verdicts(p256, p256_keys):
    sk_a, pk_a, sk_b, pk_b = p256_keys
    message = b"pay invoice 7041 by friday"
    envelope = ssms.compose(message, sk_a, ALICE, pk_b, BOB, p256)
    result = ssms.deliver(envelope, sk_b, BOB, pk_a, ALICE, p256)
    assert result["status"] == "ok"

    fields = ssms.decode_envelope(envelope, p256)
    claim = dict(sender=ALICE, recipient=BOB, R=fields["R"], C=fields["C"],
                 M=result["plaintext"], k=result["session_key"], s=fields["s"])

    assert ssms.judge(**claim, sender_pk=pk_a, params=p256) == "sender_sent"

    wrong_message = dict(claim, M=b"pay invoice 9999 by friday")
    assert (ssms.judge(**wrong_message, sender_pk=pk_a, params=p256)
            == "claimant_wrong(decrypt)")

    wrong_s = dict(claim, s=(claim["s"] + 1) % p256.n)
    assert (ssms.judge(**wrong_s, sender_pk=pk_a, params=p256)
            == "claimant_wrong(signature)")


def test_confirm_tag_round_trip(toy):
    sk_a, pk_a = ssms.keygen(toy)
    sk_b, pk_b = ssms.keygen(toy)
    envelope = ssms.compose(b"ack me", sk_a, ALICE, pk_b, BOB, toy)
    result = ssms.deliver(envelope, sk_b, BOB, pk_a, ALICE, toy)
    assert result["status"] == "ok"

    tag = ssms.confirm(result["plaintext"], result["session_key"])
    assert ssms.verify_confirm(b"ack me", tag, result["session_key"])
    assert not ssms.verify_confirm(b"ack you", tag, result["session_key"])


def test_segmentation_round_trip():
    payload = bytes((i * 7 + 13) & 0xFF for i in range(300))
    segments = ssms.segment(payload, ref=42)

    assert len(segments) == 3
    assert all(len(s) <= ssms.SMS_MAX_BYTES for s in segments)

    shuffled = list(segments)
    random.Random(0x5E6).shuffle(shuffled)
    result = ssms.reassemble(shuffled)

    assert result["status"] == "ok"
    assert result["payload"] == payload


def test_oversized_payload_is_refused():
    with pytest.raises(ssms.Error, match="payload_too_large"):
        ssms.segment(b"x" * (ssms.MAX_PAYLOAD_BYTES + 1), ref=1)


def test_missing_segment_reports_incomplete():
    segments = ssms.segment(b"y" * 300, ref=7)
    result = ssms.reassemble(segments[:-1])
    assert result["status"] == "incomplete"
    assert result["payload"] is None
