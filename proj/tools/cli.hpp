/* Copyright 2026 The Succession Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef SUCCESSION_TOOLS_CLI_HPP_
#define SUCCESSION_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "succession/rational.hpp"

namespace succession::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kModelContradiction = 3,
  kResourceLimit = 4,
};

// One computed quantity together with the parameters that produced it.
struct OutputRecord {
  std::string rule;
  std::vector<std::pair<std::string, std::string>> inputs;
  Rational exact;
};

enum class Format { kPlain, kJson, kCsv };

inline constexpr unsigned kDefaultDigits = 12;
inline constexpr unsigned kMaxDigits = 10000;

// Renders records. JSON emits an object for a single record when
// `single_object` is set and an array otherwise; CSV always starts with the
// header row "rule,inputs,num,den,decimal".
std::string render(const std::vector<OutputRecord>& records, Format format, unsigned digits,
                   bool single_object);

// Reads a flat key=value file. Blank lines and lines starting with '#' are
// skipped; keys may be written with or without a leading "--".
std::vector<std::pair<std::string, std::string>> read_config(const std::string& path);

// Runs one invocation. `args` excludes the program name.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace succession::cli

#endif  // SUCCESSION_TOOLS_CLI_HPP_
