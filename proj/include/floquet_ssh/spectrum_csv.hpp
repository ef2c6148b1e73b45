// Copyright 2026 The floquet-ssh Authors
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

#include "floquet_ssh/config.hpp"
#include "floquet_ssh/sweep.hpp"

namespace fssh {

struct CsvWriteOptions {
  bool reproducible = false;  // drop the timestamp comment
  const RunConfig* config = nullptr;  // echoed into comments when given
};

/// Writes `# ` metadata lines, the header
/// `g,quasienergy,population,edge_weight,state_index` and one row per
/// (g, state) with 12 significant digits.
void write_spectrum_csv(std::ostream& out, const SweepResult& result, const CsvWriteOptions& options = {});

// Throws IoError if `path` cannot be opened for writing.
void write_spectrum_csv(const std::string& path, const SweepResult& result, const CsvWriteOptions& options = {});

struct SpectrumTable {
  std::vector<std::string> comments;  // without the leading "# "
  std::vector<SweepRow> rows;
};

SpectrumTable read_spectrum_csv(std::istream& in);
SpectrumTable read_spectrum_csv(const std::string& path);

}  // namespace fssh
