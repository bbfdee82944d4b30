// Copyright 2026 The Medalloc Authors
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

#ifndef MEDALLOC_CLI_HPP_
#define MEDALLOC_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace medalloc {

// Command-line driver. Exit status 0 on success, 1 on validation errors in
// inputs (message names the file/field), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv);

}  // namespace medalloc

#endif  // MEDALLOC_CLI_HPP_
