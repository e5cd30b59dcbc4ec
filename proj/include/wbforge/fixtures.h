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
#ifndef WBFORGE_FIXTURES_H_
#define WBFORGE_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

#include "wbforge/dsl.h"
#include "wbforge/model.h"

namespace wbforge {

struct Fixture {
  std::string name;
  SchemaDocument schema;
  InstanceDoc doc;
};

// Names of the embedded fixtures, sorted.
std::vector<std::string> fixture_names();

// Raw text of an embedded corpus file such as "AgeRecord.wbs". Throws kUnknownFixture.
std::string_view fixture_file(std::string_view file_name);

// Parses the schema and instance document of a fixture. Throws kUnknownFixture.
Fixture load_fixture(std::string_view name, std::string_view root = kDefaultRoot);

}  // namespace wbforge

#endif  // WBFORGE_FIXTURES_H_
