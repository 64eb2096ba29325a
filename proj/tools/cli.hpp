/*
 * Copyright 2026 The adhmquot Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adhmquot::cli {

/// Exit codes: 0 verified success, 1 property violation, 2 input or usage error.
enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

/// Runs the tool on args (without the program name). The report goes to out
/// as one JSON document, a one-line summary to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adhmquot::cli
