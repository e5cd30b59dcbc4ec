// Copyright 2026 The wbforge Authors.
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

#ifndef WBFORGE_ERROR_H_
#define WBFORGE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace wbforge {

enum class ErrorCode {
  kSyntaxError,
  kUnknownPrefix,
  kReservedPrefix,
  kInvalidIri,
  kDuplicateDeclaration,
  kUnknownClass,
  kFeatureDisabled,
  kMalformedValue,
  kBlankNodeUnsupported,
  kLanguageTagUnsupported,
  kUnresolvedName,
  kTypeMismatch,
  kMissingRequired,
  kDuplicateValue,
  kPatternInapplicable,
  kUnknownCode,
  kUnknownFixture,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported as Error. Parse errors carry a 1-based
// source position; line == 0 means no position applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, int line = 0, int col = 0);

  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  ErrorCode code_;
  int line_;
  int col_;
};

}  // namespace wbforge

#endif  // WBFORGE_ERROR_H_
