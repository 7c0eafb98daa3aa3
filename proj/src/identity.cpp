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

#include "ssms/identity.hpp"

#include "ssms/error.hpp"

namespace ssms {

Identity::Identity(std::string msisdn) : msisdn_(std::move(msisdn))
{
    std::size_t start = msisdn_.size() > 0 && msisdn_[0] == '+' ? 1 : 0;
    std::size_t digits = msisdn_.size() - start;
    if (digits < 5 || digits > 15)
        throw Error("bad_identity", "'" + msisdn_ + "'");
    for (std::size_t i = start; i < msisdn_.size(); ++i)
        if (msisdn_[i] < '0' || msisdn_[i] > '9')
            throw Error("bad_identity", "'" + msisdn_ + "'");
}

} // namespace ssms
