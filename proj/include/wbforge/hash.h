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
#ifndef WBFORGE_HASH_H_
#define WBFORGE_HASH_H_

#include <string>
#include <string_view>

namespace wbforge {

// Lowercase hex SHA-256 of the UTF-8 bytes of text (64 chars).
std::string sha256_hex(std::string_view text);

// The first 40 hex chars of sha256_hex: the id used for hash nodes.
std::string hash_id(std::string_view text);

}  // namespace wbforge

#endif  // WBFORGE_HASH_H_
