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

// Python extension exposing the core operations: parameter loading and
// validation, key generation, signcryption round trips over envelope
// bytes, dispute adjudication, and SMS transport segmentation.  Scalars
// cross the boundary as Python ints, points and payloads as bytes in
// their wire encodings.

#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ssms/ec.hpp"
#include "ssms/error.hpp"
#include "ssms/identity.hpp"
#include "ssms/keys.hpp"
#include "ssms/rng.hpp"
#include "ssms/signcrypt.hpp"
#include "ssms/sms.hpp"

namespace py = pybind11;
using namespace ssms;

namespace {

py::int_ to_py_int(const ec::Int& v)
{
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

ec::Int to_mpz(const py::int_& v)
{
    return ec::Int(py::str(v).cast<std::string>());
}

Bytes to_vec(const py::bytes& b)
{
    std::string s = b;
    return Bytes(s.begin(), s.end());
}

py::bytes to_py(const Bytes& b)
{
    return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
}

py::dict report_to_dict(const ec::ParamCheckReport& report)
{
    py::list checks;
    for (const ec::ParamCheck& c : report.checks) {
        py::dict d;
        d["name"] = c.name;
        d["passed"] = c.passed;
        d["detail"] = c.detail;
        checks.append(d);
    }
    py::dict out;
    out["ok"] = report.ok;
    out["first_failure"] = report.first_failure;
    out["checks"] = checks;
    out["warnings"] = report.warnings;
    return out;
}

ec::ParamMode parse_mode(const std::string& mode)
{
    if (mode == "strict")
        return ec::ParamMode::strict;
    if (mode == "test")
        return ec::ParamMode::test;
    throw Error("bad_mode", "expected 'strict' or 'test', got '" + mode + "'");
}

} // namespace

PYBIND11_MODULE(_ssms, m)
{
    m.doc() = "Signcryption-based secure SMS: curve parameters, key "
              "generation, envelope composition and delivery, dispute "
              "adjudication, and transport segmentation.";

    py::register_exception<Error>(m, "Error");

    py::class_<ec::DomainParams>(m, "DomainParams",
            "Curve domain parameters (q, a, b, G, n, h) plus derived "
            "wire widths.")
        .def_static("load", &ec::DomainParams::load, py::arg("path"),
            "Parse a key=value parameter file.")
        .def_static("parse", &ec::DomainParams::parse, py::arg("text"),
            "Parse parameter text in the same key=value format.")
        .def_property_readonly("q", [](const ec::DomainParams& dp) {
            return to_py_int(dp.q);
        })
        .def_property_readonly("a", [](const ec::DomainParams& dp) {
            return to_py_int(dp.a);
        })
        .def_property_readonly("b", [](const ec::DomainParams& dp) {
            return to_py_int(dp.b);
        })
        .def_property_readonly("n", [](const ec::DomainParams& dp) {
            return to_py_int(dp.n);
        })
        .def_property_readonly("h", [](const ec::DomainParams& dp) {
            return to_py_int(dp.h);
        })
        .def_property_readonly("f", [](const ec::DomainParams& dp) {
            return dp.f;
        })
        .def_property_readonly("field_byte_len", [](const ec::DomainParams& dp) {
            return dp.field_byte_len;
        })
        .def_property_readonly("scalar_byte_len", [](const ec::DomainParams& dp) {
            return dp.scalar_byte_len;
        })
        .def_property_readonly("mode", [](const ec::DomainParams& dp) {
            return dp.mode == ec::ParamMode::strict ? "strict" : "test";
        })
        .def_property_readonly("generator", [](const ec::DomainParams& dp) {
            return to_py(ec::encode_point(dp.G, dp));
        });

    m.def("validate_params",
        [](const ec::DomainParams& dp, std::optional<std::string> mode) {
            ec::ParamCheckReport report = mode
                ? ec::validate_domain_params(dp, parse_mode(*mode))
                : ec::validate_domain_params(dp);
            return report_to_dict(report);
        },
        py::arg("params"), py::arg("mode") = std::nullopt,
        "Run the domain-parameter suitability checks.  `mode` overrides "
        "the mode declared in the parameter file ('strict' or 'test').");

    m.def("keygen",
        [](const ec::DomainParams& dp) {
            KeyPair kp = keygen(dp, system_rng());
            return py::make_tuple(to_py_int(kp.sk),
                                  to_py(ec::encode_point(kp.pk, dp)));
        },
        py::arg("params"),
        "Generate a key pair from the system CSPRNG.  Returns "
        "(private scalar, encoded public point).");

    m.def("compose",
        [](const py::bytes& message, const py::int_& sk, const std::string& sender,
           const py::bytes& recipient_pk, const std::string& recipient,
           const ec::DomainParams& dp) {
            Envelope env = compose(to_vec(message), to_mpz(sk), Identity(sender),
                                   ec::decode_point(to_vec(recipient_pk), dp),
                                   Identity(recipient), dp, system_rng());
            return to_py(encode_envelope(env, dp));
        },
        py::arg("message"), py::arg("sk"), py::arg("sender"),
        py::arg("recipient_pk"), py::arg("recipient"), py::arg("params"),
        "Signcrypt a message and return the envelope bytes.");

    m.def("deliver",
        [](const py::bytes& envelope, const py::int_& sk, const std::string& recipient,
           const py::bytes& sender_pk, const std::string& sender,
           const ec::DomainParams& dp, bool check_point,
           std::optional<std::uint64_t> message_timestamp,
           std::optional<std::uint64_t> now, std::uint64_t window_seconds) {
            DeliverOptions opts;
            opts.check_point = check_point;
            opts.message_timestamp = message_timestamp;
            opts.now = now;
            opts.window_seconds = window_seconds;
            DeliverResult r = deliver_envelope_bytes(
                to_vec(envelope), to_mpz(sk), Identity(recipient),
                ec::decode_point(to_vec(sender_pk), dp), Identity(sender),
                dp, opts);
            py::dict out;
            out["status"] = std::string(to_string(r.status));
            out["plaintext"] = r.status == DeliverStatus::ok
                ? py::object(to_py(r.plaintext)) : py::object(py::none());
            out["session_key"] = r.status == DeliverStatus::ok
                ? py::object(to_py(r.session_key)) : py::object(py::none());
            return out;
        },
        py::arg("envelope"), py::arg("sk"), py::arg("recipient"),
        py::arg("sender_pk"), py::arg("sender"), py::arg("params"),
        py::arg("check_point") = true,
        py::arg("message_timestamp") = std::nullopt,
        py::arg("now") = std::nullopt,
        py::arg("window_seconds") = std::uint64_t{24 * 3600},
        "Unsigncrypt envelope bytes.  Returns a dict with `status` and, "
        "on acceptance, `plaintext` and `session_key`.");

    m.def("decode_envelope",
        [](const py::bytes& envelope, const ec::DomainParams& dp, bool validate_r) {
            Envelope env = decode_envelope(to_vec(envelope), dp, validate_r);
            py::dict out;
            out["sender"] = env.sender.str();
            out["recipient"] = env.recipient.str();
            out["R"] = to_py(ec::encode_point(env.R, dp));
            out["C"] = to_py(env.C);
            out["s"] = to_py_int(env.s);
            return out;
        },
        py::arg("envelope"), py::arg("params"), py::arg("validate_r") = true,
        "Split envelope bytes into their fields.");

    m.def("encode_envelope",
        [](const std::string& sender, const std::string& recipient,
           const py::bytes& r_point, const py::bytes& ciphertext,
           const py::int_& s, const ec::DomainParams& dp) {
            Envelope env;
            env.sender = Identity(sender);
            env.recipient = Identity(recipient);
            env.R = ec::decode_point(to_vec(r_point), dp);
            env.C = to_vec(ciphertext);
            env.s = to_mpz(s);
            return to_py(encode_envelope(env, dp));
        },
        py::arg("sender"), py::arg("recipient"), py::arg("R"),
        py::arg("C"), py::arg("s"), py::arg("params"),
        "Assemble envelope bytes from their fields.");

    m.def("judge",
        [](const std::string& sender, const std::string& recipient,
           const py::bytes& r_point, const py::bytes& ciphertext,
           const py::bytes& message, const py::bytes& session_key,
           const py::int_& s, const py::bytes& sender_pk,
           const ec::DomainParams& dp) {
            JudgeClaim claim;
            claim.sender = Identity(sender);
            claim.recipient = Identity(recipient);
            claim.R = ec::decode_point(to_vec(r_point), dp, false);
            claim.C = to_vec(ciphertext);
            claim.M = to_vec(message);
            claim.k = to_vec(session_key);
            claim.s = to_mpz(s);
            JudgeVerdict v = judge_verify(
                claim, ec::decode_point(to_vec(sender_pk), dp, false), dp);
            return std::string(to_string(v));
        },
        py::arg("sender"), py::arg("recipient"), py::arg("R"), py::arg("C"),
        py::arg("M"), py::arg("k"), py::arg("s"), py::arg("sender_pk"),
        py::arg("params"),
        "Adjudicate a dispute claim from public inputs.  Returns "
        "'sender_sent', 'claimant_wrong(decrypt)' or "
        "'claimant_wrong(signature)'.");

    m.def("confirm",
        [](const py::bytes& message, const py::bytes& session_key) {
            return to_py(confirm(to_vec(message), to_vec(session_key)));
        },
        py::arg("message"), py::arg("session_key"),
        "Receipt tag the recipient may return to the sender.");

    m.def("verify_confirm",
        [](const py::bytes& message, const py::bytes& tag,
           const py::bytes& session_key) {
            return verify_confirm(to_vec(message), to_vec(tag),
                                  to_vec(session_key));
        },
        py::arg("message"), py::arg("tag"), py::arg("session_key"));

    m.def("segment",
        [](const py::bytes& payload, std::uint8_t ref, std::uint16_t dest_port,
           std::uint16_t src_port) {
            py::list out;
            for (const Segment& seg : segment(to_vec(payload), ref,
                                              dest_port, src_port))
                out.append(to_py(seg.to_bytes()));
            return out;
        },
        py::arg("payload"), py::arg("ref"),
        py::arg("dest_port") = kSsmsPort, py::arg("src_port") = kSsmsPort,
        "Split a payload into SMS-sized segments (wire bytes, UDH "
        "included).");

    m.def("reassemble",
        [](const std::vector<py::bytes>& segments) {
            std::vector<Segment> parsed;
            parsed.reserve(segments.size());
            for (const py::bytes& b : segments)
                parsed.push_back(Segment::from_bytes(to_vec(b)));
            ReassembleResult r = reassemble(parsed);
            py::dict out;
            out["status"] = std::string(to_string(r.status));
            out["payload"] = r.status == ReassembleStatus::ok
                ? py::object(to_py(r.payload)) : py::object(py::none());
            return out;
        },
        py::arg("segments"),
        "Order-independent inverse of segment().  Returns a dict with "
        "`status` and, when complete, `payload`.");

    m.attr("SMS_MAX_BYTES") = kSmsMaxBytes;
    m.attr("SEGMENT_BODY_CAPACITY") = kSegmentBodyCapacity;
    m.attr("MAX_SEGMENTS") = kMaxSegments;
    m.attr("MAX_PAYLOAD_BYTES") = kMaxPayloadBytes;
    m.attr("SSMS_PORT") = kSsmsPort;
    m.attr("SESSION_KEY_BITS") = kSessionKeyBits;
    m.attr("ENVELOPE_VERSION") = kEnvelopeVersion;
}
