// Copyright 2026 The Entrobound Authors
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

#ifndef ENTROBOUND_ERROR_HPP_
#define ENTROBOUND_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace entrobound {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind {
  kNumeric = 1,    // a solver produced an inconsistent result
  kInstance = 2,   // malformed or invalid problem data
  kParameter = 2,  // out-of-range numeric parameter
  kResource = 3,   // a configured size guard refused the request
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InstanceError : public Error {
 public:
  explicit InstanceError(const std::string& what)
      : Error(ErrorKind::kInstance, what) {}
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what)
      : Error(ErrorKind::kParameter, what) {}
};

class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what)
      : Error(ErrorKind::kNumeric, what) {}
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::kResource, what) {}
};

}  // namespace entrobound

#endif  // ENTROBOUND_ERROR_HPP_
