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

#include "floquet_ssh/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "floquet_ssh/errors.hpp"

namespace fssh {

namespace {

namespace pt = boost::property_tree;

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"geometry", {"n_dimers", "v", "w", "r"}},
      {"drive", {"kind", "omega", "c", "omega_env", "phase_offset"}},
      {"sweep", {"g_min", "g_max", "g_steps", "energy_window", "edge_weight_threshold", "edge_cells"}},
      {"floquet", {"replicas", "method", "samples", "rule", "population", "fold", "window_center"}},
      {"output", {"path", "format"}},
  };
  return keys;
}

class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  std::optional<std::string> raw(const std::string& section, const std::string& key) const {
    const auto sec = tree_.get_child_optional(section);
    if (!sec) return std::nullopt;
    const auto value = sec->get_optional<std::string>(pt::ptree::path_type(key, '\0'));
    if (!value) return std::nullopt;
    return *value;
  }

  double real(const std::string& section, const std::string& key, double fallback) {
    const auto text = raw(section, key);
    if (!text) {
      note_default(section, key, fmt::format("{}", fallback));
      return fallback;
    }
    return parse_real(section, key, *text);
  }

  std::optional<double> optional_real(const std::string& section, const std::string& key) const {
    const auto text = raw(section, key);
    if (!text) return std::nullopt;
    return parse_real(section, key, *text);
  }

  int integer(const std::string& section, const std::string& key, int fallback) {
    const auto text = raw(section, key);
    if (!text) {
      note_default(section, key, fmt::format("{}", fallback));
      return fallback;
    }
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(*text, &used, 10);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text->size() || value < -1000000000L || value > 1000000000L) {
      throw ConfigError(fmt::format("[{}] {}: '{}' is not an integer", section, key, *text));
    }
    return static_cast<int>(value);
  }

  std::string word(const std::string& section, const std::string& key, const std::string& fallback) {
    const auto text = raw(section, key);
    if (!text) {
      note_default(section, key, fallback);
      return fallback;
    }
    return *text;
  }

  bool boolean(const std::string& section, const std::string& key, bool fallback) {
    const auto text = raw(section, key);
    if (!text) {
      note_default(section, key, fallback ? "true" : "false");
      return fallback;
    }
    if (*text == "true" || *text == "yes" || *text == "1") return true;
    if (*text == "false" || *text == "no" || *text == "0") return false;
    throw ConfigError(fmt::format("[{}] {}: '{}' is not a boolean", section, key, *text));
  }

  void note_default(const std::string& section, const std::string& key, const std::string& value) {
    provenance_.push_back(fmt::format("default applied: [{}] {} = {}", section, key, value));
  }

  std::vector<std::string> take_provenance() { return std::move(provenance_); }

 private:
  static double parse_real(const std::string& section, const std::string& key, const std::string& text) {
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value)) {
      throw ConfigError(fmt::format("[{}] {}: '{}' is not a finite number", section, key, text));
    }
    return value;
  }

  const pt::ptree& tree_;
  std::vector<std::string> provenance_;
};

void check_structure(const pt::ptree& tree) {
  for (const auto& [name, node] : tree) {
    const auto section = schema().find(name);
    if (node.empty()) {
      throw ConfigError(fmt::format("key '{}' appears outside of any section", name));
    }
    if (section == schema().end()) throw ConfigError(fmt::format("unknown section [{}]", name));
    for (const auto& [key, value] : node) {
      if (!section->second.contains(key)) throw ConfigError(fmt::format("unknown key [{}] {}", name, key));
    }
  }
}

DriveKind parse_kind(const std::string& text) {
  if (text == "monochromatic") return DriveKind::Monochromatic;
  if (text == "gaussian") return DriveKind::Gaussian;
  if (text == "beating") return DriveKind::Beating;
  throw ConfigError(fmt::format("[drive] kind: '{}' is not one of monochromatic, gaussian, beating", text));
}

AssemblyMethod parse_method(const std::string& text) {
  if (text == "analytic") return AssemblyMethod::Analytic;
  if (text == "numeric") return AssemblyMethod::Numeric;
  throw ConfigError(fmt::format("[floquet] method: '{}' is not one of analytic, numeric", text));
}

QuadratureRule parse_rule(const std::string& text) {
  if (text == "simpson") return QuadratureRule::Simpson;
  if (text == "trapezoid") return QuadratureRule::Trapezoid;
  throw ConfigError(fmt::format("[floquet] rule: '{}' is not one of simpson, trapezoid", text));
}

PopulationMeasure parse_population(const std::string& text) {
  if (text == "central") return PopulationMeasure::CentralReplica;
  if (text == "max") return PopulationMeasure::MaxReplica;
  throw ConfigError(fmt::format("[floquet] population: '{}' is not one of central, max", text));
}

}  // namespace

std::string_view to_string(AssemblyMethod method) {
  return method == AssemblyMethod::Analytic ? "analytic" : "numeric";
}

std::string_view to_string(QuadratureRule rule) { return rule == QuadratureRule::Simpson ? "simpson" : "trapezoid"; }

std::string_view to_string(PopulationMeasure measure) {
  return measure == PopulationMeasure::CentralReplica ? "central" : "max";
}

std::vector<double> SweepGrid::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(g_steps) + 1);
  for (int i = 0; i < g_steps; ++i) out.push_back(g_min + (g_max - g_min) * i / g_steps);
  out.push_back(g_max);
  return out;
}

bool RunConfig::operator==(const RunConfig& other) const {
  const SweepOptions& a = floquet;
  const SweepOptions& b = other.floquet;
  return geometry == other.geometry && drive == other.drive && grid == other.grid && output == other.output &&
         a.m_max == b.m_max && a.method == b.method && a.quadrature == b.quadrature &&
         a.base_frequency == b.base_frequency && a.window_center == b.window_center &&
         a.population == b.population && a.fold == b.fold && a.edges == b.edges;
}

void validate_config(const RunConfig& c) {
  auto wrap = [](const char* section, auto&& check) {
    try {
      check();
    } catch (const ContractError& e) {
      throw ConfigError(fmt::format("[{}] {}", section, e.what()));
    }
  };
  wrap("geometry", [&] { c.geometry.validate(); });
  wrap("drive", [&] { c.drive.validate(); });
  try {
    c.floquet.quadrature.validate();
  } catch (const ContractError& e) {
    throw ConfigError(fmt::format("[floquet] samples = {}: {}", c.floquet.quadrature.samples_per_period, e.what()));
  }

  const SweepGrid& grid = c.grid;
  if (grid.g_min < 0.0) throw ConfigError(fmt::format("[sweep] g_min = {} violates g >= 0", grid.g_min));
  if (grid.g_max > 100.0) throw ConfigError(fmt::format("[sweep] g_max = {} exceeds the supported 100", grid.g_max));
  if (grid.g_steps < 0) throw ConfigError("[sweep] g_steps must be >= 0");
  if (grid.g_steps == 0 && grid.g_max != grid.g_min) {
    throw ConfigError("[sweep] g_steps = 0 requires g_max == g_min");
  }
  if (grid.g_steps > 0 && !(grid.g_max > grid.g_min)) throw ConfigError("[sweep] g_max must exceed g_min");
  const EdgeDetection& edges = c.floquet.edges;
  if (!(edges.energy_window > 0.0)) throw ConfigError("[sweep] energy_window must be positive");
  if (!(edges.weight_threshold > 0.0 && edges.weight_threshold < 1.0)) {
    throw ConfigError("[sweep] edge_weight_threshold must lie in (0, 1)");
  }
  if (edges.edge_cells < 1 || 2 * edges.edge_cells > c.geometry.n_dimers) {
    throw ConfigError(fmt::format("[sweep] edge_cells = {} must lie in [1, n_dimers/2]", edges.edge_cells));
  }
  if (c.floquet.m_max < 0 || c.floquet.m_max > 200) throw ConfigError("[floquet] replicas must lie in [0, 200]");
  if (!std::isfinite(c.floquet.window_center)) throw ConfigError("[floquet] window_center must be finite");
  if (c.floquet.method == AssemblyMethod::Analytic) {
    if (c.drive.kind == DriveKind::Gaussian) {
      throw ConfigError("[floquet] method = analytic is not available for kind = gaussian; use numeric");
    }
    if (c.drive.kind == DriveKind::Beating) {
      const double ratio = c.drive.omega_plus() / c.drive.omega_minus();
      if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
        throw ConfigError(fmt::format(
            "[floquet] method = analytic needs (omega + omega_env)/(omega - omega_env) to be an integer, got {:.12g}",
            ratio));
      }
    }
  }
  if (c.output.format != "csv") throw ConfigError(fmt::format("[output] format: '{}' is not supported", c.output.format));
  if (c.output.path.empty()) throw ConfigError("[output] path must not be empty");
}

LoadedConfig load_config(std::string_view text) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(fmt::format("config line {}: {}", e.line(), e.message()));
  }
  check_structure(tree);

  Reader reader(tree);
  RunConfig c;
  c.geometry.n_dimers = reader.integer("geometry", "n_dimers", 20);
  c.geometry.v = reader.real("geometry", "v", 0.3);
  c.geometry.w = reader.real("geometry", "w", 1.0);
  c.geometry.r = reader.real("geometry", "r", 0.0);

  c.drive.kind = parse_kind(reader.word("drive", "kind", "monochromatic"));
  c.drive.omega_drive = reader.real("drive", "omega", 10.0);
  c.drive.phase_offset = reader.real("drive", "phase_offset", 0.0);
  const auto width = reader.optional_real("drive", "c");
  const auto envelope = reader.optional_real("drive", "omega_env");
  if (c.drive.kind == DriveKind::Gaussian) {
    if (!width) throw ConfigError("[drive] c is required for kind = gaussian");
    c.drive.c = *width;
  } else if (width) {
    throw ConfigError("[drive] c only applies to kind = gaussian");
  }
  if (c.drive.kind == DriveKind::Beating) {
    if (!envelope) throw ConfigError("[drive] omega_env is required for kind = beating");
    c.drive.omega_env = *envelope;
  } else if (envelope) {
    throw ConfigError("[drive] omega_env only applies to kind = beating");
  }

  c.grid.g_min = reader.real("sweep", "g_min", 0.0);
  c.grid.g_max = reader.real("sweep", "g_max", 8.0);
  c.grid.g_steps = reader.integer("sweep", "g_steps", 400);
  c.floquet.edges.energy_window = reader.real("sweep", "energy_window", 0.05);
  c.floquet.edges.weight_threshold = reader.real("sweep", "edge_weight_threshold", 0.6);
  c.floquet.edges.edge_cells = reader.integer("sweep", "edge_cells", 2);

  c.floquet.m_max = reader.integer("floquet", "replicas", 20);
  const std::string default_method = c.drive.kind == DriveKind::Gaussian ? "numeric" : "analytic";
  c.floquet.method = parse_method(reader.word("floquet", "method", default_method));
  c.floquet.quadrature.samples_per_period = reader.integer("floquet", "samples", 1024);
  c.floquet.quadrature.rule = parse_rule(reader.word("floquet", "rule", "simpson"));
  c.floquet.population = parse_population(reader.word("floquet", "population", "central"));
  c.floquet.fold = reader.boolean("floquet", "fold", true);
  c.floquet.window_center = reader.real("floquet", "window_center", 0.0);

  c.output.path = reader.word("output", "path", "spectrum.csv");
  c.output.format = reader.word("output", "format", "csv");

  validate_config(c);
  return {std::move(c), reader.take_provenance()};
}

LoadedConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open config file '{}'", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_config(buffer.str());
}

std::string serialize_config(const RunConfig& c) {
  std::string out;
  auto line = [&out](std::string_view key, const auto& value) {
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(value)>>) {
      out += fmt::format("{} = {}\n", key, value);
    } else {
      out += fmt::format("{} = {}\n", key, value);
    }
  };
  out += "[geometry]\n";
  line("n_dimers", c.geometry.n_dimers);
  line("v", c.geometry.v);
  line("w", c.geometry.w);
  line("r", c.geometry.r);
  out += "\n[drive]\n";
  line("kind", to_string(c.drive.kind));
  line("omega", c.drive.omega_drive);
  if (c.drive.kind == DriveKind::Gaussian) line("c", c.drive.c);
  if (c.drive.kind == DriveKind::Beating) line("omega_env", c.drive.omega_env);
  line("phase_offset", c.drive.phase_offset);
  out += "\n[sweep]\n";
  line("g_min", c.grid.g_min);
  line("g_max", c.grid.g_max);
  line("g_steps", c.grid.g_steps);
  line("energy_window", c.floquet.edges.energy_window);
  line("edge_weight_threshold", c.floquet.edges.weight_threshold);
  line("edge_cells", c.floquet.edges.edge_cells);
  out += "\n[floquet]\n";
  line("replicas", c.floquet.m_max);
  line("method", to_string(c.floquet.method));
  line("samples", c.floquet.quadrature.samples_per_period);
  line("rule", to_string(c.floquet.quadrature.rule));
  line("population", to_string(c.floquet.population));
  line("fold", c.floquet.fold ? "true" : "false");
  line("window_center", c.floquet.window_center);
  out += "\n[output]\n";
  line("path", c.output.path);
  line("format", c.output.format);
  return out;
}

}  // namespace fssh
