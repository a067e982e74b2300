// Copyright 2026 The djq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DJQ_TOOLS_CLI_H
#define DJQ_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace djq::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kDiscrepancy = 1,
    kUsage = 2,
    kIo = 3,
};

enum class Mode { Exact, Float, Auto };
enum class Format { Plain, Json, Csv };

/// Parsed flags for any subcommand.
struct RunConfig {
    std::string subcommand;
    std::string quantity;
    std::optional<int> n;
    std::optional<uint64_t> k;
    std::optional<uint64_t> m;
    uint64_t trials = 100000;
    uint64_t seed = 0;
    Mode mode = Mode::Auto;
    Format format = Format::Plain;
    std::string output;
    std::string procedure;
    std::string fm;
    std::string function_file;
    int majority = 0;
    bool transcript = true;
    std::string which = "all";
    std::string out_dir = ".";
    unsigned threads = 0;
};

/// Runs the djq command line. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace djq::cli

#endif  // DJQ_TOOLS_CLI_H
