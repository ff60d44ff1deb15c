// Copyright 2026 The sparsto Authors
//
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sparsto {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or non-canonical input document.
class FormatError : public Error {
public:
    using Error::Error;
};

/// A precondition on the mathematical inputs does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Problem size exceeds what a dense or enumerative routine accepts.
class SizeGuardError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The linear ansatz violates its regularity condition p_j < 1.
class InfeasibleError : public DomainError {
public:
    InfeasibleError(const std::string& what, std::size_t index)
        : DomainError(what), index_(index) {}

    /// First inactive index (in the sorted term order) with p_j >= 1.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Command line misuse.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace sparsto
