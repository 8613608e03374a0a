// Copyright 2026 The chist authors
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

#include <stdexcept>
#include <string>

namespace chist {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimError : Error {
    explicit DimError(const std::string& msg) : Error(msg) {}
};

struct HermiticityError : Error {
    explicit HermiticityError(const std::string& msg) : Error(msg) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

struct DegenerateStateError : Error {
    explicit DegenerateStateError(const std::string& msg) : Error(msg) {}
};

// Closed-form spin-1 eigenstate requested outside the formula's domain
// (a denominator is singular there).
struct FormulaDomainError : Error {
    explicit FormulaDomainError(const std::string& msg) : Error(msg) {}
};

struct InconsistencyError : Error {
    explicit InconsistencyError(const std::string& msg) : Error(msg) {}
};

// Conditioning event has (numerically) zero probability.
struct UndefinedConditional : Error {
    explicit UndefinedConditional(const std::string& msg) : Error(msg) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

struct SharedEventMismatchError : Error {
    explicit SharedEventMismatchError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace chist
