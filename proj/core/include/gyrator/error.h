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

#ifndef GYRATOR_ERROR_H_
#define GYRATOR_ERROR_H_

#include <stdexcept>
#include <string>

namespace gyrator {

enum class ErrorKind {
  kShape,
  kRange,
  kSingularAngle,
  kSingularParameter,
  kNumerical,
  kFormat,
  kUsage,
  kValidation,
  kConfig,
  kConditioning,
  kInsufficientData,
  kWeakKey,
  kDegenerateKey,
};

const char* ErrorKindName(ErrorKind kind);

// All library failures are reported with this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& what);

}  // namespace gyrator

#endif  // GYRATOR_ERROR_H_
