// Copyright 2026 The DiskLab Authors
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

#include "disklab/error.hpp"

namespace disklab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegreeExceeded: return "DegreeExceeded";
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kInvalidIndex: return "InvalidIndex";
    case ErrorCode::kDeleteMissingEdge: return "DeleteMissingEdge";
    case ErrorCode::kInsertExistingEdge: return "InsertExistingEdge";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEmptySubset: return "EmptySubset";
    case ErrorCode::kRadiusMismatch: return "RadiusMismatch";
    case ErrorCode::kSearchCapExceeded: return "SearchCapExceeded";
    case ErrorCode::kEmptyProperty: return "EmptyProperty";
    case ErrorCode::kInfeasibleDegreeBound: return "InfeasibleDegreeBound";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kInvalidSize: return "InvalidSize";
    case ErrorCode::kEmptySet: return "EmptySet";
    case ErrorCode::kTooLarge: return "TooLarge";
  }
  return "Unknown";
}

}  // namespace disklab
