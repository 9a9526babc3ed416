// Copyright 2026 The gaploc Authors
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

#ifndef GAPLOC_ERRORS_HPP_
#define GAPLOC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gaploc {

// Root of every exception thrown by the library. The CLI maps the concrete
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (not JSON, truncated document, wrong token types).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed JSON that is missing a required field or has the wrong shape.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Structurally complete input that violates a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

class MalformedProblem : public Error {
 public:
  using Error::Error;
};

class InfeasibleWarmStart : public Error {
 public:
  using Error::Error;
};

class DegenerateRange : public Error {
 public:
  using Error::Error;
};

class StageFailed : public Error {
 public:
  using Error::Error;
};

class EmptyPool : public Error {
 public:
  using Error::Error;
};

class MissingSiteDistances : public Error {
 public:
  using Error::Error;
};

class UnknownPolicy : public Error {
 public:
  using Error::Error;
};

class ExportWithoutCoordinates : public Error {
 public:
  using Error::Error;
};

}  // namespace gaploc

#endif  // GAPLOC_ERRORS_HPP_
