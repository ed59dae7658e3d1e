/*
 * Copyright 2026 The frobthick Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FROBTHICK_ERRORS_HPP
#define FROBTHICK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frobthick {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Mismatched rings, degrees, or matrix dimensions.
class ShapeError : public Error {
   public:
    using Error::Error;
};

class DivisionByZero : public Error {
   public:
    DivisionByZero() : Error("division by zero in F_p") {}
};

/// A documented precondition of an operation was violated by its arguments.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

/// Čech level lowered, or a level below the minimal faithful one was requested.
class LevelError : public Error {
   public:
    using Error::Error;
};

/// Polynomial text rejected by the parser. `position` is a 0-based byte offset.
class ParseError : public Error {
   public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

class NameError : public ParseError {
   public:
    using ParseError::ParseError;
};

class DegreeMixtureError : public ParseError {
   public:
    using ParseError::ParseError;
};

/// A computation would exceed the configured size ceiling.
class GuardrailError : public Error {
   public:
    GuardrailError(const std::string& what, double estimate) : Error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

   private:
    double estimate_;
};

/// An internal cross-check disagreed with the primary computation.
class InvariantViolation : public Error {
   public:
    using Error::Error;
};

}  // namespace frobthick

#endif
