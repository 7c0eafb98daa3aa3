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

#include "ssms/directory.hpp"

#include <fstream>
#include <sstream>

#include "ssms/error.hpp"

namespace ssms {

const char* to_string(CertStatus s)
{
    switch (s) {
    case CertStatus::good:
        return "good";
    case CertStatus::revoked:
        return "revoked";
    case CertStatus::unknown:
        return "unknown";
    }
    return "?";
}

Directory::Directory(ec::DomainParams dp)
    : mu_(std::make_unique<std::mutex>()), dp_(std::move(dp))
{
}

Directory Directory::open(const std::string& path, ec::DomainParams dp)
{
    Directory dir(std::move(dp));
    dir.path_ = path;

    std::ifstream in(path);
    if (!in)
        return dir;   // fresh directory; file appears on first write

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        std::istringstream row(line);
        std::string serial, msisdn, pk_hex, status;
        if (!std::getline(row, serial, ',') || !std::getline(row, msisdn, ',') ||
            !std::getline(row, pk_hex, ',') || !std::getline(row, status))
            throw Error("corrupt_file", path + ":" + std::to_string(lineno));

        CertRecord rec;
        try {
            rec.serial = std::stoull(serial);
            rec.id = Identity(msisdn);
            rec.pk = ec::decode_point(from_hex(pk_hex), dir.dp_);
        } catch (const std::exception& e) {
            throw Error("corrupt_file",
                        path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        if (status == "good")
            rec.status = CertStatus::good;
        else if (status == "revoked")
            rec.status = CertStatus::revoked;
        else
            throw Error("corrupt_file",
                        path + ":" + std::to_string(lineno) + ": bad status");

        dir.by_id_[rec.id.str()] = rec;
        if (rec.serial >= dir.next_serial_)
            dir.next_serial_ = rec.serial + 1;
    }
    return dir;
}

void Directory::save_locked() const
{
    if (path_.empty())
        return;
    std::ofstream out(path_, std::ios::trunc);
    if (!out)
        throw Error("corrupt_file", "cannot write '" + path_ + "'");
    for (const auto& [id, rec] : by_id_)
        out << rec.serial << ',' << rec.id.str() << ','
            << to_hex(ec::encode_point(rec.pk, dp_)) << ','
            << to_string(rec.status) << '\n';
    if (!out.flush())
        throw Error("corrupt_file", "cannot write '" + path_ + "'");
}

CertRecord Directory::register_key(const Identity& id, const ec::Point& pk)
{
    if (ec::validate_point(pk, dp_) != ec::PointCheck::ok)
        throw Error("invalid_public_key");

    std::lock_guard lk(*mu_);
    auto it = by_id_.find(id.str());
    if (it != by_id_.end()) {
        if (it->second.pk == pk)
            return it->second;
        throw Error("duplicate_id", id.str());
    }

    CertRecord rec{next_serial_++, id, pk, CertStatus::good};
    by_id_[id.str()] = rec;
    save_locked();
    return rec;
}

std::optional<CertRecord> Directory::lookup(const Identity& id) const
{
    std::lock_guard lk(*mu_);
    auto it = by_id_.find(id.str());
    if (it == by_id_.end())
        return std::nullopt;
    return it->second;
}

void Directory::revoke(const Identity& id)
{
    std::lock_guard lk(*mu_);
    auto it = by_id_.find(id.str());
    if (it == by_id_.end())
        throw Error("not_found", id.str());
    if (it->second.status == CertStatus::revoked)
        return;
    it->second.status = CertStatus::revoked;
    save_locked();
}

CertStatus Directory::status(const Identity& id) const
{
    std::lock_guard lk(*mu_);
    auto it = by_id_.find(id.str());
    return it == by_id_.end() ? CertStatus::unknown : it->second.status;
}

std::vector<CertRecord> Directory::records() const
{
    std::lock_guard lk(*mu_);
    std::vector<CertRecord> out;
    out.reserve(by_id_.size());
    for (const auto& [id, rec] : by_id_)
        out.push_back(rec);
    return out;
}

} // namespace ssms
