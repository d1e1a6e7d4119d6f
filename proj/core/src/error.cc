// Copyright 2026 The Gyrator Authors.
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

#include "gyrator/error.h"

#include <string>

namespace gyrator {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShape:
      return "shape error";
    case ErrorKind::kRange:
      return "range error";
    case ErrorKind::kSingularAngle:
      return "singular-angle error";
    case ErrorKind::kSingularParameter:
      return "singular-parameter error";
    case ErrorKind::kNumerical:
      return "numerical error";
    case ErrorKind::kFormat:
      return "format error";
    case ErrorKind::kUsage:
      return "usage error";
    case ErrorKind::kValidation:
      return "validation error";
    case ErrorKind::kConfig:
      return "configuration error";
    case ErrorKind::kConditioning:
      return "conditioning error";
    case ErrorKind::kInsufficientData:
      return "insufficient-data error";
    case ErrorKind::kWeakKey:
      return "weak-key error";
    case ErrorKind::kDegenerateKey:
      return "degenerate-key error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
      kind_(kind) {}

void Fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gyrator
