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
#include "wbforge/fixtures.h"

#include <set>
#include <string_view>
#include <utility>

#include "wbforge/error.h"

namespace wbforge {

namespace internal {
extern const std::pair<std::string_view, std::string_view> kFixtureFiles[];
extern const int kFixtureFileCount;
}  // namespace internal

std::vector<std::string> fixture_names() {
  std::set<std::string> names;
  for (int i = 0; i < internal::kFixtureFileCount; ++i) {
    std::string_view file = internal::kFixtureFiles[i].first;
    if (file.ends_with(".wbs")) names.emplace(file.substr(0, file.size() - 4));
  }
  return {names.begin(), names.end()};
}

std::string_view fixture_file(std::string_view file_name) {
  for (int i = 0; i < internal::kFixtureFileCount; ++i) {
    if (internal::kFixtureFiles[i].first == file_name) return internal::kFixtureFiles[i].second;
  }
  throw Error(ErrorCode::kUnknownFixture, "no fixture file '" + std::string(file_name) + "'");
}

Fixture load_fixture(std::string_view name, std::string_view root) {
  const std::string base(name);
  Fixture f{base, parse_schema(fixture_file(base + ".wbs"), root),
            parse_instances(fixture_file(base + ".wbi"), root)};
  return f;
}

}  // namespace wbforge
