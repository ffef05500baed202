// Copyright (c) 2026 The cmhl authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMHL_ERRORS_HPP
#define CMHL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmhl {

// Base for every error the library raises on bad input or an unusable
// configuration.  `kind()` is a stable machine-readable tag surfaced by
// the CLI as error.kind.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error("domain", msg) {}
};

class PoleError : public Error {
public:
    explicit PoleError(const std::string& msg) : Error("pole", msg) {}
};

class InvalidModulus : public Error {
public:
    explicit InvalidModulus(const std::string& msg) : Error("invalid_modulus", msg) {}
};

class GroupMismatch : public Error {
public:
    explicit GroupMismatch(const std::string& msg) : Error("group_mismatch", msg) {}
};

class NotACMType : public Error {
public:
    explicit NotACMType(const std::string& msg) : Error("not_a_cm_type", msg) {}
};

class NotCMField : public Error {
public:
    explicit NotCMField(const std::string& msg) : Error("not_cm_field", msg) {}
};

class UnsupportedCharacter : public Error {
public:
    explicit UnsupportedCharacter(const std::string& msg)
        : Error("unsupported_character", msg) {}
};

class SingularSystem : public Error {
public:
    explicit SingularSystem(const std::string& msg) : Error("singular_system", msg) {}
};

class ZeroCharacterPairing : public Error {
public:
    explicit ZeroCharacterPairing(const std::string& msg)
        : Error("zero_character_pairing", msg) {}
};

class PrecisionTooLow : public Error {
public:
    explicit PrecisionTooLow(const std::string& msg) : Error("precision_too_low", msg) {}
};

class CalibrationFailed : public Error {
public:
    explicit CalibrationFailed(const std::string& msg)
        : Error("calibration_failed", msg) {}
};

} // namespace cmhl

#endif
