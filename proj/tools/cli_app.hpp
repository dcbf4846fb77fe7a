// Copyright 2026 The physinfo Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace physinfo::cli {

// Runs one invocation of the tool (args without the program name) and
// returns its exit status: 0 success, 1 runtime/input error, 2 usage error.
// Output goes to the given streams so tests can capture it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace physinfo::cli
