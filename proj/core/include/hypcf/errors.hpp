/*
   Copyright 2026 the hypcf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace hypcf {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input does not satisfy an operation's precondition (caller error).
struct InvalidInput : Error {
    using Error::Error;
};

struct FieldMismatch : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct DivisionByZero : InvalidInput {
    using InvalidInput::InvalidInput;
};

/// Reduction requested for an element with negative valuation.
struct NegativeValuation : InvalidInput {
    int coefficientIndex = -1;
    explicit NegativeValuation(const std::string& msg, int idx = -1)
        : InvalidInput(msg), coefficientIndex(idx) {}
};

/// A Laurent series was read outside its provably correct window.
struct WindowError : Error {
    using Error::Error;
};

/// D is a square polynomial where a non-square is required.
struct SquareInput : InvalidInput {
    using InvalidInput::InvalidInput;
};

struct ParseError : InvalidInput {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos) : InvalidInput(msg), position(pos) {}
};

/// Toeplitz system rank deficiency; carries dim ker.
struct RankDeficiency : Error {
    int kernelDim;
    RankDeficiency(const std::string& msg, int dim) : Error(msg), kernelDim(dim) {}
};

/// Internal consistency failure (a bug, not a caller error).
struct InternalError : Error {
    using Error::Error;
};

}  // namespace hypcf
