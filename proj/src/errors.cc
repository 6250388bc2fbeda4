// Copyright 2026 The Hintgen Authors.
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

#include "hintgen/errors.h"

namespace hintgen {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
    case ErrorCode::kNotAQuestion:
      return "NotAQuestion";
    case ErrorCode::kUnsupportedStructure:
      return "UnsupportedStructure";
    case ErrorCode::kNonInvertible:
      return "NonInvertible";
    case ErrorCode::kUndefinedForShortText:
      return "UndefinedForShortText";
    case ErrorCode::kEmptyCorpus:
      return "EmptyCorpus";
    case ErrorCode::kEntityNotInBank:
      return "EntityNotInBank";
    case ErrorCode::kMalformedRecord:
      return "MalformedRecord";
    case ErrorCode::kTooFewRecords:
      return "TooFewRecords";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kIo:
      return "Io";
  }
  return "Unknown";
}

}  // namespace hintgen
