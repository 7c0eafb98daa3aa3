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

#ifndef SSMS_DIRECTORY_HPP
#define SSMS_DIRECTORY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "ssms/ec.hpp"
#include "ssms/identity.hpp"

namespace ssms {

enum class CertStatus { good, revoked, unknown };
const char* to_string(CertStatus s);

struct CertRecord {
    std::uint64_t serial = 0;
    Identity id;
    ec::Point pk;
    CertStatus status = CertStatus::unknown;
};

// Certification directory: the registry both validation servers consult.
// Optionally persisted as a CSV of `serial,msisdn,hex pk,status` lines;
// mutations rewrite the file.  One Directory instance owns its file.
class Directory {
public:
    explicit Directory(ec::DomainParams dp);
    static Directory open(const std::string& path, ec::DomainParams dp);

    // Validates pk.  Registering the same id with the same key returns
    // the existing record; a different key throws Error("duplicate_id").
    CertRecord register_key(const Identity& id, const ec::Point& pk);

    std::optional<CertRecord> lookup(const Identity& id) const;

    // Idempotent on already-revoked ids; throws Error("not_found") for
    // unknown ones.
    void revoke(const Identity& id);

    CertStatus status(const Identity& id) const;
    std::vector<CertRecord> records() const;
    const ec::DomainParams& params() const { return dp_; }

private:
    void save_locked() const;

    // Held through a pointer so a Directory stays movable.
    std::unique_ptr<std::mutex> mu_;
    ec::DomainParams dp_;
    std::map<std::string, CertRecord> by_id_;
    std::uint64_t next_serial_ = 1;
    std::string path_;
};

} // namespace ssms

#endif
