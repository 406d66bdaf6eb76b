// Copyright 2026 The ceoff Authors.
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

#include "ceoff/json_io.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>

#include "ceoff/errors.h"

namespace ceoff {
namespace {

std::string Child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string Index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

double AsNumber(const Json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError("'" + path + "' must be a number");
  return v.get<double>();
}

std::int64_t AsInteger(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    throw ParseError("'" + path + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

int AsInt(const Json& v, const std::string& path) {
  const std::int64_t i = AsInteger(v, path);
  if (i < std::numeric_limits<int>::min() || i > std::numeric_limits<int>::max()) {
    throw ParseError("'" + path + "' is out of range");
  }
  return static_cast<int>(i);
}

std::uint64_t AsSeed(const Json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  throw ParseError("'" + path + "' must be a nonnegative integer");
}

std::optional<double> AsNullableNumber(const Json& v, const std::string& path) {
  if (v.is_null()) return std::nullopt;
  return AsNumber(v, path);
}

// Key lookup with paths in every error message.
class ObjectReader {
 public:
  ObjectReader(const Json& doc, std::string path,
               std::initializer_list<std::string_view> allowed)
      : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object()) {
      throw ParseError("'" + (path_.empty() ? std::string("<root>") : path_) +
                       "' must be a JSON object");
    }
    for (const auto& item : doc_.items()) {
      bool known = false;
      for (std::string_view a : allowed) known = known || item.key() == a;
      if (!known) {
        throw ParseError("unknown key '" + Child(path_, item.key()) + "'");
      }
    }
  }

  bool has(std::string_view key) const { return doc_.contains(key); }

  const Json& Required(std::string_view key) const {
    auto it = doc_.find(key);
    if (it == doc_.end()) {
      throw ParseError("missing key '" + Child(path_, key) + "'");
    }
    return *it;
  }

  std::string path(std::string_view key) const { return Child(path_, key); }

 private:
  const Json& doc_;
  std::string path_;
};

Range AsRange(const Json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) {
    throw ParseError("'" + path + "' must be a [lo, hi] pair");
  }
  return {AsNumber(v[0], Index(path, 0)), AsNumber(v[1], Index(path, 1))};
}

Json RangeToJson(const Range& r) { return Json::array({r.lo, r.hi}); }

std::vector<Method> AsMethods(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError("'" + path + "' must be an array");
  std::vector<Method> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string()) {
      throw ParseError("'" + Index(path, i) + "' must be a method name");
    }
    try {
      out.push_back(ParseMethod(v[i].get<std::string>()));
    } catch (const ConfigError& e) {
      throw ParseError("'" + Index(path, i) + "': " + e.what());
    }
  }
  return out;
}

std::vector<int> AsInts(const Json& v, const std::string& path) {
  if (!v.is_array()) throw ParseError("'" + path + "' must be an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(AsInt(v[i], Index(path, i)));
  return out;
}

PowerProfile PowerFromJson(const Json& v, const std::string& path) {
  ObjectReader r(v, path, {"p0_w", "pt_w", "pr_w"});
  return {AsNumber(r.Required("p0_w"), r.path("p0_w")),
          AsNumber(r.Required("pt_w"), r.path("pt_w")),
          AsNumber(r.Required("pr_w"), r.path("pr_w"))};
}

Weights WeightsFromJson(const Json& v, const std::string& path) {
  ObjectReader r(v, path, {"lambda_t", "lambda_e"});
  return {AsNumber(r.Required("lambda_t"), r.path("lambda_t")),
          AsNumber(r.Required("lambda_e"), r.path("lambda_e"))};
}

Json PowerToJson(const PowerProfile& p) {
  return Json{{"p0_w", p.local_w}, {"pt_w", p.tx_w}, {"pr_w", p.rx_w}};
}

Json WeightsToJson(const Weights& w) {
  return Json{{"lambda_t", w.latency}, {"lambda_e", w.energy}};
}

}  // namespace

Scenario ScenarioFromJson(const Json& doc) {
  ObjectReader root(doc, "", {"tasks", "processors", "power", "weights"});
  Scenario s;

  const Json& tasks = root.Required("tasks");
  if (!tasks.is_array()) throw ParseError("'tasks' must be an array");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    ObjectReader r(tasks[i], Index("tasks", i),
                   {"alpha_bits", "beta_bits", "gamma_cycles"});
    s.tasks.push_back({AsNumber(r.Required("alpha_bits"), r.path("alpha_bits")),
                       AsNumber(r.Required("beta_bits"), r.path("beta_bits")),
                       AsNumber(r.Required("gamma_cycles"), r.path("gamma_cycles"))});
  }

  const Json& procs = root.Required("processors");
  if (!procs.is_array()) throw ParseError("'processors' must be an array");
  for (std::size_t i = 0; i < procs.size(); ++i) {
    ObjectReader r(procs[i], Index("processors", i),
                   {"index", "rate_cps", "uplink_bps", "downlink_bps"});
    Processor p;
    p.index = AsInt(r.Required("index"), r.path("index"));
    p.rate_cps = AsNumber(r.Required("rate_cps"), r.path("rate_cps"));
    p.uplink_bps = AsNullableNumber(r.Required("uplink_bps"), r.path("uplink_bps"));
    p.downlink_bps =
        AsNullableNumber(r.Required("downlink_bps"), r.path("downlink_bps"));
    s.processors.push_back(p);
  }

  s.power = PowerFromJson(root.Required("power"), "power");
  s.weights = WeightsFromJson(root.Required("weights"), "weights");
  ValidateScenario(s);
  return s;
}

Json ScenarioToJson(const Scenario& scenario) {
  Json tasks = Json::array();
  for (const Task& t : scenario.tasks) {
    tasks.push_back(Json{{"alpha_bits", t.input_bits},
                         {"beta_bits", t.output_bits},
                         {"gamma_cycles", t.cycles}});
  }
  Json procs = Json::array();
  for (const Processor& p : scenario.processors) {
    Json j{{"index", p.index}, {"rate_cps", p.rate_cps}};
    j["uplink_bps"] = p.uplink_bps ? Json(*p.uplink_bps) : Json(nullptr);
    j["downlink_bps"] = p.downlink_bps ? Json(*p.downlink_bps) : Json(nullptr);
    procs.push_back(std::move(j));
  }
  return Json{{"tasks", std::move(tasks)},
              {"processors", std::move(procs)},
              {"power", PowerToJson(scenario.power)},
              {"weights", WeightsToJson(scenario.weights)}};
}

SolverConfig SolverConfigFromJson(const Json& doc) {
  ObjectReader r(doc, "", {"samples", "elites", "learning_rate", "iterations",
                           "seed", "early_stop_tolerance"});
  SolverConfig c;
  if (r.has("samples")) c.samples = AsInt(r.Required("samples"), "samples");
  if (r.has("elites")) c.elites = AsInt(r.Required("elites"), "elites");
  if (r.has("learning_rate")) {
    c.learning_rate = AsNumber(r.Required("learning_rate"), "learning_rate");
  }
  if (r.has("iterations")) {
    c.iterations = AsInt(r.Required("iterations"), "iterations");
  }
  if (r.has("seed")) c.seed = AsSeed(r.Required("seed"), "seed");
  if (r.has("early_stop_tolerance")) {
    c.early_stop_tolerance = AsNullableNumber(r.Required("early_stop_tolerance"),
                                              "early_stop_tolerance");
  }
  ValidateConfig(c);
  return c;
}

Json SolverConfigToJson(const SolverConfig& config) {
  Json j{{"samples", config.samples},
         {"elites", config.elites},
         {"learning_rate", config.learning_rate},
         {"iterations", config.iterations},
         {"seed", config.seed}};
  j["early_stop_tolerance"] = config.early_stop_tolerance
                                  ? Json(*config.early_stop_tolerance)
                                  : Json(nullptr);
  return j;
}

ScenarioSpec ScenarioSpecFromJson(const Json& doc) {
  ObjectReader r(doc, "",
                 {"tasks", "caps", "input_bits", "output_bits", "cycles",
                  "local_rate_cps", "cap_rates_cps", "link_bps", "power",
                  "weights", "trials", "seed"});
  ScenarioSpec s;
  if (r.has("tasks")) s.tasks = AsInt(r.Required("tasks"), "tasks");
  if (r.has("caps")) s.caps = AsInt(r.Required("caps"), "caps");
  if (r.has("input_bits")) s.input_bits = AsRange(r.Required("input_bits"), "input_bits");
  if (r.has("output_bits")) {
    s.output_bits = AsRange(r.Required("output_bits"), "output_bits");
  }
  if (r.has("cycles")) s.cycles = AsRange(r.Required("cycles"), "cycles");
  if (r.has("local_rate_cps")) {
    s.local_rate_cps = AsNumber(r.Required("local_rate_cps"), "local_rate_cps");
  }
  if (r.has("cap_rates_cps")) {
    const Json& rates = r.Required("cap_rates_cps");
    if (!rates.is_array()) throw ParseError("'cap_rates_cps' must be an array");
    s.cap_rates_cps.clear();
    for (std::size_t i = 0; i < rates.size(); ++i) {
      s.cap_rates_cps.push_back(AsNumber(rates[i], Index("cap_rates_cps", i)));
    }
  }
  if (r.has("link_bps")) s.link_bps = AsNumber(r.Required("link_bps"), "link_bps");
  if (r.has("power")) s.power = PowerFromJson(r.Required("power"), "power");
  if (r.has("weights")) s.weights = WeightsFromJson(r.Required("weights"), "weights");
  if (r.has("trials")) s.trials = AsInt(r.Required("trials"), "trials");
  if (r.has("seed")) s.seed = AsSeed(r.Required("seed"), "seed");
  ValidateScenarioSpec(s);
  return s;
}

Json ScenarioSpecToJson(const ScenarioSpec& spec) {
  return Json{{"tasks", spec.tasks},
              {"caps", spec.caps},
              {"input_bits", RangeToJson(spec.input_bits)},
              {"output_bits", RangeToJson(spec.output_bits)},
              {"cycles", RangeToJson(spec.cycles)},
              {"local_rate_cps", spec.local_rate_cps},
              {"cap_rates_cps", spec.cap_rates_cps},
              {"link_bps", spec.link_bps},
              {"power", PowerToJson(spec.power)},
              {"weights", WeightsToJson(spec.weights)},
              {"trials", spec.trials},
              {"seed", spec.seed}};
}

SweepSpec SweepSpecFromJson(const Json& doc) {
  ObjectReader r(doc, "",
                 {"scenario", "solver", "convergence", "size", "lambda", "compare"});
  SweepSpec s;
  if (r.has("scenario")) s.scenario = ScenarioSpecFromJson(r.Required("scenario"));
  if (r.has("solver")) s.solver = SolverConfigFromJson(r.Required("solver"));

  if (r.has("convergence")) {
    ObjectReader c(r.Required("convergence"), "convergence", {"configs"});
    const Json& configs = c.Required("configs");
    if (!configs.is_array() || configs.empty()) {
      throw ParseError("'convergence.configs' must be a nonempty array");
    }
    s.convergence_configs.clear();
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const std::string path = Index("convergence.configs", i);
      ObjectReader item(configs[i], path, {"samples", "elites"});
      s.convergence_configs.emplace_back(
          AsInt(item.Required("samples"), item.path("samples")),
          AsInt(item.Required("elites"), item.path("elites")));
    }
  }
  if (r.has("size")) {
    ObjectReader z(r.Required("size"), "size", {"scales", "methods"});
    if (z.has("scales")) {
      const Json& scales = z.Required("scales");
      if (!scales.is_array() || scales.empty()) {
        throw ParseError("'size.scales' must be a nonempty array");
      }
      s.size_scales.clear();
      for (std::size_t i = 0; i < scales.size(); ++i) {
        s.size_scales.push_back(AsNumber(scales[i], Index("size.scales", i)));
      }
    }
    if (z.has("methods")) s.size_methods = AsMethods(z.Required("methods"), "size.methods");
  }
  if (r.has("lambda")) {
    ObjectReader l(r.Required("lambda"), "lambda", {"caps"});
    if (l.has("caps")) s.lambda_caps = AsInts(l.Required("caps"), "lambda.caps");
  }
  if (r.has("compare")) {
    ObjectReader c(r.Required("compare"), "compare", {"tasks", "methods"});
    if (c.has("tasks")) s.compare_tasks = AsInts(c.Required("tasks"), "compare.tasks");
    if (c.has("methods")) {
      s.compare_methods = AsMethods(c.Required("methods"), "compare.methods");
    }
  }
  return s;
}

Json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": malformed JSON: " + e.what());
  }
}

void WriteJsonFile(const Json& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << doc.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace ceoff
