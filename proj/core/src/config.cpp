// Copyright 2026 The qroute Authors
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

#include "qroute/config.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace qroute {

namespace {

using nlohmann::json;

std::string format_number(double value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ConfigError(field + ": " + message);
}

// Walks a JSON object and rejects keys nobody asked for.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (not node_.is_object()) {
      fail(path_.empty() ? "<root>" : path_, "must be an object");
    }
  }

  ~Section() = default;

  std::string field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (not seen_.contains(key)) {
        fail(field(key), "unknown key");
      }
    }
  }

  double number(const std::string& key, double fallback) {
    const auto* v = find(key);
    if (v == nullptr) {
      return fallback;
    }
    if (not v->is_number()) {
      fail(field(key), "must be a number");
    }
    return v->get<double>();
  }

  std::size_t count(const std::string& key, std::size_t fallback) {
    const auto* v = find(key);
    if (v == nullptr) {
      return fallback;
    }
    if (not v->is_number_unsigned()) {
      fail(field(key), "must be a non-negative integer");
    }
    return v->get<std::size_t>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    const auto* v = find(key);
    if (v == nullptr) {
      return fallback;
    }
    if (not v->is_string()) {
      fail(field(key), "must be a string");
    }
    return v->get<std::string>();
  }

  // A number or a list of numbers.
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
    const auto* v = find(key);
    if (v == nullptr) {
      return fallback;
    }
    std::vector<double> out;
    if (v->is_number()) {
      out.push_back(v->get<double>());
      return out;
    }
    if (not v->is_array()) {
      fail(field(key), "must be a number or a list of numbers");
    }
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (not(*v)[i].is_number()) {
        fail(field(key) + "[" + std::to_string(i) + "]", "must be a number");
      }
      out.push_back((*v)[i].get<double>());
    }
    return out;
  }

 private:
  const json&           node_;
  std::string           path_;
  std::set<std::string> seen_;
};

void parse_topology(const json& node, TopologyConfig& out) {
  Section s(node, "topology");
  try {
    out.kind = parse_topology_kind(s.text("kind", "random"));
  } catch (const std::invalid_argument&) {
    fail(s.field("kind"), "must be \"random\" or \"regular\"");
  }
  out.n_repeaters  = s.count("n_repeaters", out.n_repeaters);
  out.n_side       = s.count("n_side", out.n_side);
  out.alpha        = s.number("alpha", out.alpha);
  out.beta         = s.numbers("beta", out.beta);
  out.max_attempts = s.count("max_attempts", out.max_attempts);
  if (const auto* v = s.find("edge_count_target"); v != nullptr and not v->is_null()) {
    if (not v->is_number_unsigned()) {
      fail(s.field("edge_count_target"), "must be a non-negative integer or null");
    }
    out.edge_count_target = v->get<std::size_t>();
  }
  s.finish();
}

void parse_quality(const json& node, QualityConfig& out) {
  Section s(node, "quality");
  const auto scheme = s.text("scheme", "two_class");
  if (scheme == "two_class") {
    out.scheme = QualityScheme::two_class;
    out.values = s.numbers("xi", out.values);
    if (s.find("a") != nullptr) {
      fail(s.field("a"), "only valid with scheme \"continuous\"");
    }
  } else if (scheme == "continuous") {
    out.scheme = QualityScheme::continuous;
    out.values = s.numbers("a", {10.0});
    if (s.find("xi") != nullptr) {
      fail(s.field("xi"), "only valid with scheme \"two_class\"");
    }
  } else {
    fail(s.field("scheme"), "must be \"two_class\" or \"continuous\"");
  }
  out.levels.high = s.number("eta_high", out.levels.high);
  out.levels.low  = s.number("eta_low", out.levels.low);
  s.finish();
}

void parse_policies(Section& root, ExperimentConfig& out) {
  const auto k      = root.count("k", 10);
  const auto k_enum = root.count("k_enum", 100);
  if (k == 0) {
    fail("k", "must be at least 1");
  }
  if (k_enum == 0) {
    fail("k_enum", "must be at least 1");
  }
  KnowledgeCosts costs;
  if (const auto* v = root.find("ka_costs")) {
    Section s(*v, "ka_costs");
    costs.high_quality = s.number("high_quality", costs.high_quality);
    costs.low_quality  = s.number("low_quality", costs.low_quality);
    s.finish();
    if (not(costs.high_quality > 0)) {
      fail(s.field("high_quality"), "must be positive");
    }
    if (not(costs.low_quality > 0)) {
      fail(s.field("low_quality"), "must be positive");
    }
  }

  std::vector<std::string> names{"sp", "ka", "ksp", "kx0", "kx1"};
  if (const auto* v = root.find("policies")) {
    if (not v->is_array()) {
      fail("policies", "must be a list of policy names");
    }
    names.clear();
    for (std::size_t i = 0; i < v->size(); ++i) {
      if (not(*v)[i].is_string()) {
        fail("policies[" + std::to_string(i) + "]", "must be a string");
      }
      names.push_back((*v)[i].get<std::string>());
    }
  }
  out.policies.clear();
  for (std::size_t i = 0; i < names.size(); ++i) {
    PolicySpec spec;
    try {
      spec = parse_policy(names[i]);
    } catch (const std::invalid_argument& e) {
      fail("policies[" + std::to_string(i) + "]", e.what());
    }
    spec.k        = k;
    spec.k_enum   = k_enum;
    spec.ka_costs = costs;
    out.policies.push_back(spec);
  }
}

void parse_noise(const json& node, ExperimentConfig& out) {
  Section s(node, "noise");
  if (const auto* v = s.find("lambda")) {
    out.lambda.clear();
    const auto add = [&](const json& item, const std::string& field) {
      if (item.is_null()) {
        out.lambda.emplace_back(std::nullopt);
      } else if (item.is_number()) {
        out.lambda.emplace_back(item.get<double>());
      } else {
        fail(field, "must be a number or null");
      }
    };
    if (v->is_array()) {
      for (std::size_t i = 0; i < v->size(); ++i) {
        add((*v)[i], "noise.lambda[" + std::to_string(i) + "]");
      }
    } else {
      add(*v, "noise.lambda");
    }
  }
  s.finish();
}

} // namespace

ExperimentConfig::ExperimentConfig() {
  for (const auto* name : {"sp", "ka", "ksp", "kx0", "kx1"}) {
    policies.push_back(parse_policy(name));
  }
}

std::vector<std::optional<double>> ExperimentConfig::beta_points() const {
  if (topology.kind == TopologyKind::regular) {
    return {std::nullopt};
  }
  return {topology.beta.begin(), topology.beta.end()};
}

void ExperimentConfig::validate() const {
  const auto index = [](const std::string& name, std::size_t i) {
    return name + "[" + std::to_string(i) + "]";
  };

  if (topology.kind == TopologyKind::random) {
    if (topology.n_repeaters == 0) {
      fail("topology.n_repeaters", "must be positive");
    }
    if (not(topology.alpha > 0 and topology.alpha < 1)) {
      fail("topology.alpha", "must be in (0, 1), got " + format_number(topology.alpha));
    }
    if (topology.beta.empty()) {
      fail("topology.beta", "needs at least one value");
    }
    for (std::size_t i = 0; i < topology.beta.size(); ++i) {
      if (not(topology.beta[i] > 0 and topology.beta[i] < 1)) {
        fail(index("topology.beta", i),
             "must be in (0, 1), got " + format_number(topology.beta[i]));
      }
    }
    if (topology.max_attempts == 0) {
      fail("topology.max_attempts", "must be positive");
    }
  } else if (topology.n_side < 2) {
    fail("topology.n_side", "must be at least 2");
  }

  if (n_sd.empty()) {
    fail("n_sd", "needs at least one value");
  }
  for (std::size_t i = 0; i < n_sd.size(); ++i) {
    if (n_sd[i] == 0) {
      fail(index("n_sd", i), "must be positive");
    }
    if (topology.kind == TopologyKind::random and 2 * n_sd[i] > topology.n_repeaters) {
      fail(index("n_sd", i), "needs " + std::to_string(2 * n_sd[i]) +
                                 " repeaters, topology has " +
                                 std::to_string(topology.n_repeaters));
    }
    if (topology.kind == TopologyKind::regular and n_sd[i] > topology.n_side) {
      fail(index("n_sd", i), "exceeds the grid side " + std::to_string(topology.n_side));
    }
  }

  const bool  two_class = quality.scheme == QualityScheme::two_class;
  const char* name      = two_class ? "quality.xi" : "quality.a";
  if (quality.values.empty()) {
    fail(name, "needs at least one value");
  }
  for (std::size_t i = 0; i < quality.values.size(); ++i) {
    const double v = quality.values[i];
    if (two_class and not(v >= 0 and v <= 1)) {
      fail(index(name, i), "must be in [0, 1], got " + format_number(v));
    }
    if (not two_class and not(v > 0)) {
      fail(index(name, i), "must be positive, got " + format_number(v));
    }
  }
  const auto& lv = quality.levels;
  if (not(lv.low > 0.5 and lv.low <= lv.high and lv.high <= 1)) {
    fail("quality", "efficiency levels need 0.5 < eta_low <= eta_high <= 1");
  }

  if (not(fidelity.f_init > 0.25 and fidelity.f_init <= 1)) {
    fail("fidelity.f_init", "must be in (0.25, 1], got " + format_number(fidelity.f_init));
  }
  if (not(fidelity.f_threshold >= 0 and fidelity.f_threshold <= 1)) {
    fail("fidelity.f_threshold",
         "must be in [0, 1], got " + format_number(fidelity.f_threshold));
  }

  if (policies.empty()) {
    fail("policies", "needs at least one policy");
  }
  std::set<std::string> names;
  for (std::size_t i = 0; i < policies.size(); ++i) {
    try {
      policies[i].validate();
    } catch (const std::invalid_argument& e) {
      fail(index("policies", i), e.what());
    }
    if (not names.insert(policies[i].name()).second) {
      fail(index("policies", i), "duplicate policy " + policies[i].name());
    }
    if (not two_class and policies[i].kind == PolicyKind::knowledge_aware) {
      fail(index("policies", i),
           "knowledge-aware routing is undefined for continuous quality");
    }
  }

  if (lambda.empty()) {
    fail("noise.lambda", "needs at least one entry (null for noise-free)");
  }
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (not lambda[i]) {
      continue;
    }
    if (not(*lambda[i] > 0)) {
      fail(index("noise.lambda", i), "must be positive, got " + format_number(*lambda[i]));
    }
    if (not two_class) {
      fail(index("noise.lambda", i),
           "estimation noise is undefined for continuous quality");
    }
  }

  if (replicas.n_topo == 0) {
    fail("replicas.n_topo", "must be positive");
  }
  if (replicas.n_quality == 0) {
    fail("replicas.n_quality", "must be positive");
  }
}

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("<root>: not valid JSON: ") + e.what());
  }

  ExperimentConfig out;
  Section          root(doc, "");
  if (const auto* v = root.find("topology")) {
    parse_topology(*v, out.topology);
  }
  if (const auto* v = root.find("n_sd")) {
    out.n_sd.clear();
    const auto add = [&](const json& item, const std::string& field) {
      if (not item.is_number_unsigned()) {
        fail(field, "must be a positive integer");
      }
      out.n_sd.push_back(item.get<std::size_t>());
    };
    if (v->is_array()) {
      for (std::size_t i = 0; i < v->size(); ++i) {
        add((*v)[i], "n_sd[" + std::to_string(i) + "]");
      }
    } else {
      add(*v, "n_sd");
    }
  }
  if (const auto* v = root.find("quality")) {
    parse_quality(*v, out.quality);
  }
  if (const auto* v = root.find("fidelity")) {
    Section s(*v, "fidelity");
    out.fidelity.f_init      = s.number("f_init", out.fidelity.f_init);
    out.fidelity.f_threshold = s.number("f_threshold", out.fidelity.f_threshold);
    s.finish();
  }
  parse_policies(root, out);
  if (const auto* v = root.find("noise")) {
    parse_noise(*v, out);
  }
  if (const auto* v = root.find("replicas")) {
    Section s(*v, "replicas");
    out.replicas.n_topo    = s.count("n_topo", out.replicas.n_topo);
    out.replicas.n_quality = s.count("n_quality", out.replicas.n_quality);
    s.finish();
  }
  if (const auto* v = root.find("master_seed"); v != nullptr and not v->is_null()) {
    if (not v->is_number_unsigned()) {
      fail("master_seed", "must be a non-negative integer");
    }
    out.master_seed = v->get<std::uint64_t>();
  }
  if (const auto* v = root.find("output")) {
    Section s(*v, "output");
    out.output.dir = s.text("dir", out.output.dir);
    s.finish();
  }
  root.finish();

  out.validate();
  return out;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (not in) {
    throw ConfigError("<file>: cannot read " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

} // namespace qroute
