// Copyright 2026 The dment Authors
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

namespace dment::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitUnwritable = 3;

/// Entry point shared by the dment binary and the CLI tests. `args` excludes
/// the program name. `jobs_env` is the value of DMENT_JOBS, if set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* jobs_env = nullptr);

/// Repro targets in the order `repro all` runs them.
const std::vector<std::string>& repro_targets();

}  // namespace dment::cli
