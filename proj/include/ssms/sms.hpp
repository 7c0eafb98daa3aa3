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

#ifndef SSMS_SMS_HPP
#define SSMS_SMS_HPP

#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ssms/bytes.hpp"
#include "ssms/identity.hpp"

namespace ssms {

inline constexpr std::size_t kSmsMaxBytes = 140;
// 140 minus the UDH-length byte, the 5-byte concatenation element and
// the 6-byte port-addressing element.
inline constexpr std::size_t kSegmentBodyCapacity = 128;
inline constexpr unsigned kMaxSegments = 5;
inline constexpr std::size_t kMaxPayloadBytes = kMaxSegments * kSegmentBodyCapacity;
inline constexpr std::uint16_t kSsmsPort = 9200;

// One SMS-sized unit: an 8-bit concatenation reference (ref, total,
// seq with seq in 1..total) plus application port addressing, and up to
// 128 body bytes.
struct Segment {
    std::uint8_t ref = 0;
    std::uint8_t total = 1;
    std::uint8_t seq = 1;
    std::uint16_t dest_port = kSsmsPort;
    std::uint16_t src_port = kSsmsPort;
    Bytes body;

    // UDHL(1) ‖ 00 03 ref total seq ‖ 05 04 dp_hi dp_lo sp_hi sp_lo ‖ body
    Bytes to_bytes() const;
    static Segment from_bytes(ByteView data);   // throws Error("bad_segment")

    bool operator==(const Segment& o) const = default;
};

// Splits a payload into at most kMaxSegments segments.  Throws
// Error("empty_payload") or Error("payload_too_large").
std::vector<Segment> segment(ByteView payload, std::uint8_t ref,
                             std::uint16_t dest_port, std::uint16_t src_port);

enum class ReassembleStatus { ok, incomplete, mismatch };
const char* to_string(ReassembleStatus s);

struct ReassembleResult {
    ReassembleStatus status = ReassembleStatus::incomplete;
    Bytes payload;   // filled only when status == ok
};

// Order-independent inverse of segment().  `incomplete` when a seq is
// missing, `mismatch` when refs/totals disagree, a seq is out of range,
// or a duplicate seq carries a different body.
ReassembleResult reassemble(const std::vector<Segment>& segments);

struct SmcMessage {
    Identity from;
    Identity to;
    std::vector<Segment> segments;
    std::uint64_t timestamp = 0;   // seconds since epoch, set by the SMC
};

// Simulated Short Message Center: store-and-forward queues per
// recipient, FIFO, with submission timestamps from an injectable clock.
class Smc {
public:
    using Clock = std::function<std::uint64_t()>;

    explicit Smc(Clock clock = wall_clock());
    static Clock wall_clock();

    // Stamps and enqueues; returns the timestamp.  Timestamps are
    // clamped monotone non-decreasing per instance.
    std::uint64_t submit(const Identity& from, const Identity& to,
                         std::vector<Segment> segments);

    // Drains the recipient's queue in FIFO order.
    std::vector<SmcMessage> poll(const Identity& recipient);

    std::size_t pending(const Identity& recipient) const;

    // Line-delimited state dump: `from,to,timestamp,hexseg[,hexseg…]`.
    void save(const std::string& path) const;
    static Smc load(const std::string& path, Clock clock = wall_clock());

private:
    // Held through a pointer so an Smc stays movable.
    std::unique_ptr<std::mutex> mu_;
    Clock clock_;
    std::uint64_t last_ts_ = 0;
    std::map<std::string, std::deque<SmcMessage>> queues_;
};

// Dispatch by the destination port carried in a message's segments.
class PortRouter {
public:
    void register_app(std::uint16_t port, std::string app_id);

    // The registered application id, or nullopt when the message is
    // unroutable: no segments, ports disagreeing across segments, or an
    // unregistered port.
    std::optional<std::string> route(const SmcMessage& msg) const;

    // Same, for one raw segment; malformed bytes (including a missing
    // port element) are unroutable.
    std::optional<std::string> route_bytes(ByteView segment_bytes) const;

private:
    std::map<std::uint16_t, std::string> apps_;
};

// Router with the SSMS application registered on port 9200.
PortRouter default_router();

} // namespace ssms

#endif
