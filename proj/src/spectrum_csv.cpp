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

#include "floquet_ssh/spectrum_csv.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"

namespace fssh {

namespace {

constexpr const char* kHeader = "g,quasienergy,population,edge_weight,state_index";

std::string number(double x) { return fmt::format("{:.12g}", x); }

double parse_double(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw IoError(fmt::format("spectrum csv line {}: '{}' is not a number", line, field));
  }
  return value;
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const SweepResult& result, const CsvWriteOptions& options) {
  const SweepMetadata& m = result.metadata;
  out << "# floquet-ssh " << m.code_version << '\n';
  if (!options.reproducible) {
    const auto now = std::chrono::time_point_cast<std::chrono::seconds>(std::chrono::system_clock::now());
    out << fmt::format("# generated {:%Y-%m-%dT%H:%M:%SZ}\n", now);
  }
  out << fmt::format("# units: hbar = w = 1\n");
  out << fmt::format("# geometry: n_dimers={} v={} w={} r={}\n", m.geometry.n_dimers, number(m.geometry.v),
                     number(m.geometry.w), number(m.geometry.r));
  out << fmt::format("# drive: kind={} omega={} c={} omega_env={} phase_offset={}\n", to_string(m.drive.kind),
                     number(m.drive.omega_drive), number(m.drive.c), number(m.drive.omega_env),
                     number(m.drive.phase_offset));
  out << fmt::format("# floquet: replicas={} base_frequency={} method={} samples={} rule={}\n", m.m_max,
                     number(m.base_frequency), to_string(m.method), m.quadrature.samples_per_period,
                     to_string(m.quadrature.rule));
  if (options.config != nullptr) {
    out << "# config:\n";
    std::istringstream echo(serialize_config(*options.config));
    for (std::string line; std::getline(echo, line);) {
      if (!line.empty()) out << "#   " << line << '\n';
    }
  }
  for (const SweepPoint& p : result.points) {
    if (!p.ok) out << fmt::format("# failed g={}: {}\n", number(p.g), p.error);
  }
  out << kHeader << '\n';
  for (const SweepRow& row : result.rows) {
    out << number(row.g) << ',' << number(row.quasienergy) << ',' << number(row.population) << ','
        << number(row.edge_weight) << ',' << row.state_index << '\n';
  }
}

void write_spectrum_csv(const std::string& path, const SweepResult& result, const CsvWriteOptions& options) {
  if (path == "-") {
    write_spectrum_csv(std::cout, result, options);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot open '{}' for writing", path));
  write_spectrum_csv(out, result, options);
  out.flush();
  if (!out) throw IoError(fmt::format("write to '{}' failed", path));
}

SpectrumTable read_spectrum_csv(std::istream& in) {
  SpectrumTable table;
  bool header_seen = false;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.comments.push_back(line.size() > 2 ? line.substr(2) : std::string{});
      continue;
    }
    if (!header_seen) {
      if (line != kHeader) throw IoError(fmt::format("spectrum csv line {}: unexpected header '{}'", line_no, line));
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t comma; (comma = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, comma));
      rest.remove_prefix(comma + 1);
    }
    fields.push_back(rest);
    if (fields.size() != 5) {
      throw IoError(fmt::format("spectrum csv line {}: expected 5 fields, got {}", line_no, fields.size()));
    }
    int index = 0;
    const auto [end, ec] = std::from_chars(fields[4].data(), fields[4].data() + fields[4].size(), index);
    if (ec != std::errc{} || end != fields[4].data() + fields[4].size()) {
      throw IoError(fmt::format("spectrum csv line {}: bad state_index '{}'", line_no, fields[4]));
    }
    table.rows.push_back({parse_double(fields[0], line_no), parse_double(fields[1], line_no),
                          parse_double(fields[2], line_no), parse_double(fields[3], line_no), index});
  }
  if (!header_seen) throw IoError("spectrum csv: header row missing");
  return table;
}

SpectrumTable read_spectrum_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  return read_spectrum_csv(in);
}

}  // namespace fssh
