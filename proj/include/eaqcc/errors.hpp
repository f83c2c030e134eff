// Copyright 2026 The eaqcc Authors
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

namespace eaqcc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(
            "line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

// A finite-weight operation met an entry with a nontrivial denominator.
class RationalEntry : public Error {
 public:
  using Error::Error;
};

class ZeroScale : public Error {
 public:
  ZeroScale() : Error("row scaled by zero") {}
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class InconsistentFrameSize : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(int l_max)
      : Error(
            "step 4: no standard form reached for any expansion factor l <= " +
            std::to_string(l_max)),
        l_max_(l_max) {}
  int l_max() const { return l_max_; }

 private:
  int l_max_;
};

class ReductionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace eaqcc
