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

#ifndef SSMS_ERROR_HPP
#define SSMS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ssms {

// Exception for I/O, decoding and admin failures.  `code()` is a stable
// machine-parsable token (e.g. "bad_tag", "corrupt_file"); `what()` adds
// free-form detail for humans.  Protocol verdicts (accept/reject of a
// message, judge rulings) are ordinary return values, not exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(std::string code, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace ssms

#endif
