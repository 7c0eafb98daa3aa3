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

#ifndef SSMS_IDENTITY_HPP
#define SSMS_IDENTITY_HPP

#include <string>

#include "ssms/bytes.hpp"

namespace ssms {

// Subscriber identity: an MSISDN-style phone number, optionally with a
// leading '+', followed by 5 to 15 digits.  Identities are bound into
// key derivation and signatures, so two strings that differ at all are
// different identities.
class Identity {
public:
    Identity() = default;
    explicit Identity(std::string msisdn);   // throws Error("bad_identity")

    const std::string& str() const { return msisdn_; }
    Bytes bytes() const { return str_bytes(msisdn_); }
    bool empty() const { return msisdn_.empty(); }

    bool operator==(const Identity& o) const { return msisdn_ == o.msisdn_; }
    bool operator!=(const Identity& o) const { return msisdn_ != o.msisdn_; }
    bool operator<(const Identity& o) const { return msisdn_ < o.msisdn_; }

private:
    std::string msisdn_;
};

} // namespace ssms

#endif
