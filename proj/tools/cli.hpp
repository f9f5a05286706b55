// Copyright 2026 The zerocenter Authors.
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

// Command-line driver: `resolve` prints the interpretations of discourse
// files, `check` compares records output against `.expected` fixtures.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zerocenter::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResolutionError = 3;
inline constexpr int kUsage = 64;

struct CliOptions {
  enum class Command { Resolve, Check };

  Command command = Command::Resolve;
  std::vector<std::string> inputs;
  std::string language = "ja";  // ja | en | custom
  std::string config_path;       // required when language == "custom"
  std::string lexicon_path;      // extends the empathy lexicon
  std::string format = "trace";  // trace | records
  bool verbose = false;
};

int run(const CliOptions& options, std::ostream& out, std::ostream& err);

// Parses argv and runs. Unknown flags print usage and return kUsage.
int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err);

}  // namespace zerocenter::cli
