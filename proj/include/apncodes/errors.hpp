/*
 * Copyright 2026 The apncodes Authors
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

#ifndef APNCODES_ERRORS_HPP
#define APNCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace apncodes {

enum class Errc {
    NotIrreducible,
    NotPrimitive,
    UnsupportedSize,
    DivisionByZero,
    FieldMismatch,
    NotASubfield,
    EmptySequence,
    ExponentOutOfRange,
    LengthMismatch,
    InvalidModulus,
    NotADivisor,
    ZeroPolynomial,
    InvalidParameter,
    InternalInvariant,
};

const char* errc_name(Errc c) noexcept;

/// Single exception type for the whole library; `code()` identifies the
/// failure class so callers (CLI, bindings) can map it to exit codes.
class Error : public std::runtime_error {
   public:
    Error(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool cond, Errc c, const std::string& msg) {
    if (!cond) raise(c, msg);
}

}  // namespace apncodes

#endif
