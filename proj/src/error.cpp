// Copyright 2026 The hnfsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hnfsub/error.hpp"

namespace hnfsub {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kZeroInput: return "ZeroInput";
    case ErrorCode::kBothZero: return "BothZero";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kSingularMatrix: return "SingularMatrix";
    case ErrorCode::kNotReduced: return "NotReduced";
    case ErrorCode::kGcdNotOne: return "GcdNotOne";
    case ErrorCode::kHrowViolated: return "HrowViolated";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotMinimalBasis: return "NotMinimalBasis";
    case ErrorCode::kDegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace hnfsub
