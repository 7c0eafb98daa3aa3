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

#ifndef SSMS_INSTRUMENT_HPP
#define SSMS_INSTRUMENT_HPP

#include <atomic>
#include <cstdint>

// Process-wide call counters.  Tests use these to pin down which
// validation work runs on which side of the protocol (e.g. that a
// recipient relying on a gateway-verified envelope never re-checks the
// ephemeral point itself).

namespace ssms::instrument {

std::atomic<std::uint64_t>& validate_point_calls();
std::atomic<std::uint64_t>& kdf_calls();

void reset();

} // namespace ssms::instrument

#endif
