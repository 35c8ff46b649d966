// Copyright 2026 The gdiscord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GDISCORD_ERRORS_HPP
#define GDISCORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gdiscord {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (b < 1, r <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation produced an inconsistent intermediate (negative radicand,
/// singular matrix) that cannot be attributed to a domain violation.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// (tau, eta) violate eta >= |1 - tau|.
class InvalidChannelParams : public Error {
 public:
  using Error::Error;
};

class NotSqueezedThermalForm : public Error {
 public:
  using Error::Error;
};

/// No decomposition witness exists for the state within the searched domain.
class OutOfFamily : public Error {
 public:
  using Error::Error;
};

/// Malformed or physically invalid input (bad JSON, not bona fide, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace gdiscord

#endif  // GDISCORD_ERRORS_HPP
