// Copyright 2026 The Fermat Reals Authors
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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace fermat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// dt[a] or a potential exponent with a <= 0. When raised by the parser it
/// carries the byte offset of the offending literal.
class NonPositiveOrder : public Error {
 public:
  NonPositiveOrder() : Error("order must be positive") {}
  explicit NonPositiveOrder(const std::string& what, std::optional<std::size_t> offset = {})
      : Error(what), offset_(offset) {}

  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  std::optional<std::size_t> offset_;
};

/// Inverse requested for a Fermat real whose standard part is zero.
class NotInvertible : public Error {
 public:
  NotInvertible() : Error("not invertible: standard part is 0") {}
};

/// Standard part outside the domain of an elementary function, or a violated
/// numeric precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ProductIsZero : public Error {
 public:
  ProductIsZero() : Error("product of powers is zero") {}
};

class NoFiniteOrder : public Error {
 public:
  NoFiniteOrder() : Error("no finite order: sum j_i/(alpha_i+1) >= 1") {}
};

class NotInIdeal : public Error {
 public:
  using Error::Error;
};

class NotSmoothAtPoint : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable: " + name), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Malformed expression text. offset is the byte offset of the first
/// offending byte (equal to the input length at end of input).
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found)
      : Error("parse error at offset " + std::to_string(offset) + ": expected " +
              expected + ", found " + found),
        offset_(offset),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

}  // namespace fermat
