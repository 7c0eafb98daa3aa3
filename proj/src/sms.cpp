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

#include "ssms/sms.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "ssms/error.hpp"

namespace ssms {

const char* to_string(ReassembleStatus s)
{
    switch (s) {
    case ReassembleStatus::ok:
        return "ok";
    case ReassembleStatus::incomplete:
        return "incomplete";
    case ReassembleStatus::mismatch:
        return "mismatch";
    }
    return "?";
}

Bytes Segment::to_bytes() const
{
    if (body.size() > kSegmentBodyCapacity)
        throw Error("bad_segment", "body too long");
    Bytes out;
    out.reserve(12 + body.size());
    append_u8(out, 0x0b);               // UDHL: 5 + 6 bytes of elements
    append_u8(out, 0x00);               // concatenation, 8-bit reference
    append_u8(out, 0x03);
    append_u8(out, ref);
    append_u8(out, total);
    append_u8(out, seq);
    append_u8(out, 0x05);               // application port addressing, 16-bit
    append_u8(out, 0x04);
    append_u16_be(out, dest_port);
    append_u16_be(out, src_port);
    append(out, body);
    return out;
}

Segment Segment::from_bytes(ByteView data)
{
    if (data.empty())
        throw Error("bad_segment", "empty");
    std::size_t udhl = data[0];
    if (data.size() > kSmsMaxBytes)
        throw Error("bad_segment", "longer than 140 bytes");
    if (1 + udhl > data.size())
        throw Error("bad_segment", "UDH overruns the message");

    Segment seg;
    bool have_concat = false, have_port = false;
    std::size_t off = 1;
    const std::size_t udh_end = 1 + udhl;
    while (off < udh_end) {
        if (off + 2 > udh_end)
            throw Error("bad_segment", "truncated element header");
        std::uint8_t iei = data[off], ielen = data[off + 1];
        off += 2;
        if (off + ielen > udh_end)
            throw Error("bad_segment", "element overruns UDH");
        switch (iei) {
        case 0x00:
            if (have_concat || ielen != 3)
                throw Error("bad_segment", "bad concatenation element");
            seg.ref = data[off];
            seg.total = data[off + 1];
            seg.seq = data[off + 2];
            have_concat = true;
            break;
        case 0x05:
            if (have_port || ielen != 4)
                throw Error("bad_segment", "bad port element");
            seg.dest_port = static_cast<std::uint16_t>(data[off] << 8 | data[off + 1]);
            seg.src_port = static_cast<std::uint16_t>(data[off + 2] << 8 | data[off + 3]);
            have_port = true;
            break;
        default:
            throw Error("bad_segment", "unknown element");
        }
        off += ielen;
    }
    if (!have_concat)
        throw Error("bad_segment", "missing concatenation element");
    if (!have_port)
        throw Error("bad_segment", "missing port element");
    if (seg.total < 1 || seg.seq < 1 || seg.seq > seg.total)
        throw Error("bad_segment", "bad sequence numbers");

    seg.body.assign(data.begin() + udh_end, data.end());
    return seg;
}

std::vector<Segment> segment(ByteView payload, std::uint8_t ref,
                             std::uint16_t dest_port, std::uint16_t src_port)
{
    if (payload.empty())
        throw Error("empty_payload");
    if (payload.size() > kMaxPayloadBytes)
        throw Error("payload_too_large",
                    std::to_string(payload.size()) + " > " +
                        std::to_string(kMaxPayloadBytes) + " bytes");

    std::size_t total = (payload.size() + kSegmentBodyCapacity - 1) / kSegmentBodyCapacity;
    std::vector<Segment> out;
    out.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        Segment seg;
        seg.ref = ref;
        seg.total = static_cast<std::uint8_t>(total);
        seg.seq = static_cast<std::uint8_t>(i + 1);
        seg.dest_port = dest_port;
        seg.src_port = src_port;
        std::size_t begin = i * kSegmentBodyCapacity;
        std::size_t len = std::min(kSegmentBodyCapacity, payload.size() - begin);
        ByteView chunk = payload.subspan(begin, len);
        seg.body.assign(chunk.begin(), chunk.end());
        out.push_back(std::move(seg));
    }
    return out;
}

ReassembleResult reassemble(const std::vector<Segment>& segments)
{
    if (segments.empty())
        return {ReassembleStatus::incomplete, {}};

    std::uint8_t ref = segments[0].ref, total = segments[0].total;
    std::vector<const Segment*> by_seq(total, nullptr);
    for (const Segment& seg : segments) {
        if (seg.ref != ref || seg.total != total)
            return {ReassembleStatus::mismatch, {}};
        if (seg.seq < 1 || seg.seq > total)
            return {ReassembleStatus::mismatch, {}};
        const Segment*& slot = by_seq[seg.seq - 1];
        if (slot != nullptr && slot->body != seg.body)
            return {ReassembleStatus::mismatch, {}};
        slot = &seg;
    }

    Bytes payload;
    for (const Segment* seg : by_seq) {
        if (seg == nullptr)
            return {ReassembleStatus::incomplete, {}};
        append(payload, seg->body);
    }
    return {ReassembleStatus::ok, std::move(payload)};
}

Smc::Clock Smc::wall_clock()
{
    return [] {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::seconds>(
                std::chrono::system_clock::now().time_since_epoch())
                .count());
    };
}

Smc::Smc(Clock clock)
    : mu_(std::make_unique<std::mutex>()), clock_(std::move(clock))
{
}

std::uint64_t Smc::submit(const Identity& from, const Identity& to,
                          std::vector<Segment> segments)
{
    std::lock_guard lk(*mu_);
    std::uint64_t ts = std::max(clock_(), last_ts_);
    last_ts_ = ts;
    queues_[to.str()].push_back(SmcMessage{from, to, std::move(segments), ts});
    return ts;
}

std::vector<SmcMessage> Smc::poll(const Identity& recipient)
{
    std::lock_guard lk(*mu_);
    auto it = queues_.find(recipient.str());
    if (it == queues_.end())
        return {};
    std::vector<SmcMessage> out(it->second.begin(), it->second.end());
    queues_.erase(it);
    return out;
}

std::size_t Smc::pending(const Identity& recipient) const
{
    std::lock_guard lk(*mu_);
    auto it = queues_.find(recipient.str());
    return it == queues_.end() ? 0 : it->second.size();
}

void Smc::save(const std::string& path) const
{
    std::lock_guard lk(*mu_);
    std::ofstream out(path, std::ios::trunc);
    if (!out)
        throw Error("corrupt_file", "cannot write '" + path + "'");
    for (const auto& [to, queue] : queues_) {
        for (const SmcMessage& msg : queue) {
            out << msg.from.str() << ',' << msg.to.str() << ',' << msg.timestamp;
            for (const Segment& seg : msg.segments)
                out << ',' << to_hex(seg.to_bytes());
            out << '\n';
        }
    }
    if (!out.flush())
        throw Error("corrupt_file", "cannot write '" + path + "'");
}

Smc Smc::load(const std::string& path, Clock clock)
{
    Smc smc(std::move(clock));
    std::ifstream in(path);
    if (!in)
        return smc;   // no state yet

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string from, to, ts;
        if (!std::getline(row, from, ',') || !std::getline(row, to, ',') ||
            !std::getline(row, ts, ','))
            throw Error("corrupt_file", path + ":" + std::to_string(lineno));

        SmcMessage msg;
        try {
            msg.from = Identity(from);
            msg.to = Identity(to);
            msg.timestamp = std::stoull(ts);
            std::string hexseg;
            while (std::getline(row, hexseg, ','))
                msg.segments.push_back(Segment::from_bytes(from_hex(hexseg)));
        } catch (const std::exception& e) {
            throw Error("corrupt_file",
                        path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (msg.segments.empty())
            throw Error("corrupt_file", path + ":" + std::to_string(lineno));

        smc.last_ts_ = std::max(smc.last_ts_, msg.timestamp);
        smc.queues_[msg.to.str()].push_back(std::move(msg));
    }
    return smc;
}

void PortRouter::register_app(std::uint16_t port, std::string app_id)
{
    apps_[port] = std::move(app_id);
}

std::optional<std::string> PortRouter::route(const SmcMessage& msg) const
{
    if (msg.segments.empty())
        return std::nullopt;
    std::uint16_t port = msg.segments[0].dest_port;
    for (const Segment& seg : msg.segments)
        if (seg.dest_port != port)
            return std::nullopt;
    auto it = apps_.find(port);
    if (it == apps_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::string> PortRouter::route_bytes(ByteView segment_bytes) const
{
    try {
        Segment seg = Segment::from_bytes(segment_bytes);
        auto it = apps_.find(seg.dest_port);
        if (it == apps_.end())
            return std::nullopt;
        return it->second;
    } catch (const Error&) {
        return std::nullopt;
    }
}

PortRouter default_router()
{
    PortRouter router;
    router.register_app(kSsmsPort, "ssms");
    return router;
}

} // namespace ssms
