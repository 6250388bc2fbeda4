// Copyright 2026 The Hintgen Authors.
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

#ifndef HINTGEN_CLI_H_
#define HINTGEN_CLI_H_

#include <iosfwd>

namespace hintgen {

// Exit codes: 0 success, 1 domain error (bad data, failed validation),
// 2 usage error. Payload goes to `out`, diagnostics to `err`; `in` backs "-"
// input paths.
int RunCli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace hintgen

#endif  // HINTGEN_CLI_H_
