// Copyright 2026 The pgqlab Authors
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

#ifndef PGQLAB_ERROR_H_
#define PGQLAB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pgqlab {

enum class ErrorCode {
  kArityMismatch,
  kIndexOutOfRange,
  kInvalidView,
  kUnknownId,
  kUnknownRelation,
  kSyntaxError,
  kStaticError,
  kArityUndetermined,
  kUnboundVariable,
  kVarOrderMismatch,
  kOrderMismatch,
  kParseError,
  kMissingAmount,
  kSchemaMismatch,
  kPathLimit,
};

std::string_view ErrorCodeName(ErrorCode code);

// Whether an error is detectable before evaluation touches any data.
bool IsStaticError(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(size_t position, const std::string& message)
      : Error(ErrorCode::kSyntaxError,
              "at offset " + std::to_string(position) + ": " + message),
        position_(position) {}

  size_t position() const { return position_; }

 private:
  size_t position_;
};

}  // namespace pgqlab

#endif  // PGQLAB_ERROR_H_
