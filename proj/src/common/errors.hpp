/*
 * Copyright (c) 2026, The lggnn Authors.
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

#include <stdexcept>
#include <string>

namespace lggnn {

/// Failure categories surfaced through the C API as status codes.
enum class ErrorCode {
  kParameter = 1,
  kUnsupportedModel = 2,
  kSingularSystem = 3,
  kEmptyData = 4,
  kParse = 5,
  kIo = 6,
  kConfig = 7,
  kUnsupportedOrder = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what) : Error(ErrorCode::kParameter, what) {}
};

class UnsupportedModelError : public Error {
 public:
  explicit UnsupportedModelError(const std::string& what)
      : Error(ErrorCode::kUnsupportedModel, what) {}
};

class SingularSystemError : public Error {
 public:
  explicit SingularSystemError(const std::string& what)
      : Error(ErrorCode::kSingularSystem, what) {}
};

class EmptyDataError : public Error {
 public:
  explicit EmptyDataError(const std::string& what) : Error(ErrorCode::kEmptyData, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(ErrorCode::kParse, what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::kConfig, what) {}
};

class UnsupportedOrderError : public Error {
 public:
  explicit UnsupportedOrderError(const std::string& what)
      : Error(ErrorCode::kUnsupportedOrder, what) {}
};

}  // namespace lggnn
