/*
 * Copyright 2026 the ptskit authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ptskit {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two values from different algebra instances were combined.
class InstanceMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed textual input (formula, literal, model file).
/// `offset` is the byte position of the problem in the input.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A name (state, proposition, algebra) did not resolve.
class UnknownName : public Error {
public:
  using Error::Error;
};

/// A structural invariant of a model or relation was violated.
class ValidationError : public Error {
public:
  using Error::Error;
};

} // namespace ptskit
