// Copyright 2026 The HIRO Authors
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

#ifndef HIRO_ERRORS_H_
#define HIRO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace hiro {

// Every failure raised by the library derives from Error. The CLI maps the
// kind onto its process exit code.
enum class ErrorKind { kParameter = 2, kCapacity = 3, kIo = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Invalid arguments: dimension mismatches, out-of-range parameters.
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what)
      : Error(ErrorKind::kParameter, what) {}
};

// A request exceeds an exact or enumerative method's capacity.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error(ErrorKind::kCapacity, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

// Malformed input file. Carries the offending 1-based line number.
class ParseError : public IoError {
 public:
  ParseError(const std::string& path, int line, const std::string& what)
      : IoError(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hiro

#endif  // HIRO_ERRORS_H_
