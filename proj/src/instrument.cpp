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

#include "ssms/instrument.hpp"

namespace ssms::instrument {

std::atomic<std::uint64_t>& validate_point_calls()
{
    static std::atomic<std::uint64_t> n{0};
    return n;
}

std::atomic<std::uint64_t>& kdf_calls()
{
    static std::atomic<std::uint64_t> n{0};
    return n;
}

void reset()
{
    validate_point_calls().store(0);
    kdf_calls().store(0);
}

} // namespace ssms::instrument
