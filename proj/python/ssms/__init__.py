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

"""Signcryption-based secure SMS.

Thin re-export of the compiled extension: curve parameter handling, key
generation, envelope composition and delivery, dispute adjudication,
and SMS transport segmentation.
"""

try:
    # Installed layout: the extension lives inside the package.
    from ._ssms import (
        DomainParams,
        Error,
        compose,
        confirm,
        decode_envelope,
        deliver,
        encode_envelope,
        judge,
        keygen,
        reassemble,
        segment,
        validate_params,
        verify_confirm,
        ENVELOPE_VERSION,
        MAX_PAYLOAD_BYTES,
        MAX_SEGMENTS,
        SEGMENT_BODY_CAPACITY,
        SESSION_KEY_BITS,
        SMS_MAX_BYTES,
        SSMS_PORT,
    )
except ImportError:
    # Build-tree layout: the extension sits next to the package on
    # PYTHONPATH.
    from _ssms import (
        DomainParams,
        Error,
        compose,
        confirm,
        decode_envelope,
        deliver,
        encode_envelope,
        judge,
        keygen,
        reassemble,
        segment,
        validate_params,
        verify_confirm,
        ENVELOPE_VERSION,
        MAX_PAYLOAD_BYTES,
        MAX_SEGMENTS,
        SEGMENT_BODY_CAPACITY,
        SESSION_KEY_BITS,
        SMS_MAX_BYTES,
        SSMS_PORT,
    )

__all__ = [
    "DomainParams",
    "Error",
    "compose",
    "confirm",
    "decode_envelope",
    "deliver",
    "encode_envelope",
    "judge",
    "keygen",
    "reassemble",
    "segment",
    "validate_params",
    "verify_confirm",
    "ENVELOPE_VERSION",
    "MAX_PAYLOAD_BYTES",
    "MAX_SEGMENTS",
    "SEGMENT_BODY_CAPACITY",
    "SESSION_KEY_BITS",
    "SMS_MAX_BYTES",
    "SSMS_PORT",
]

__version__ = "0.1.0"
