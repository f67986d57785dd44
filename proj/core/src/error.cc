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

#include "pgqlab/error.h"

namespace pgqlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidView: return "InvalidView";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kUnknownRelation: return "UnknownRelation";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kStaticError: return "StaticError";
    case ErrorCode::kArityUndetermined: return "ArityUndetermined";
    case ErrorCode::kUnboundVariable: return "UnboundVariable";
    case ErrorCode::kVarOrderMismatch: return "VarOrderMismatch";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kMissingAmount: return "MissingAmount";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kPathLimit: return "PathLimit";
  }
  return "Unknown";
}

bool IsStaticError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArityMismatch:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kUnknownRelation:
    case ErrorCode::kSyntaxError:
    case ErrorCode::kStaticError:
    case ErrorCode::kArityUndetermined:
    case ErrorCode::kUnboundVariable:
    case ErrorCode::kVarOrderMismatch:
    case ErrorCode::kOrderMismatch:
    case ErrorCode::kParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace pgqlab
