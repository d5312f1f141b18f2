// Copyright 2026 The NetCB Authors.
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

#include "netcb/config.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <system_error>

#include "netcb/errors.h"

namespace netcb {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseValue(std::string_view value, const std::string& key,
             const char* type_name) {
  T out{};
  value = Trim(value);
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() ||
      ptr != value.data() + value.size()) {
    throw ConfigError(key, "expected " + std::string(type_name) + ", got \"" +
                               std::string(value) + "\"");
  }
  return out;
}

double ParseReal(std::string_view v, const std::string& key) {
  return ParseValue<double>(v, key, "a decimal number");
}

long long ParseInt(std::string_view v, const std::string& key) {
  return ParseValue<long long>(v, key, "an integer");
}

std::uint64_t ParseSeed(std::string_view v, const std::string& key) {
  return ParseValue<std::uint64_t>(v, key, "a non-negative integer");
}

std::vector<double> ParseRealList(std::string_view v, const std::string& key) {
  std::vector<double> out;
  while (true) {
    const auto comma = v.find(',');
    out.push_back(ParseReal(v.substr(0, comma), key));
    if (comma == std::string_view::npos) break;
    v.remove_prefix(comma + 1);
  }
  return out;
}

void RequireProbability(double p, const std::string& key) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ConfigError(key, "must be a probability in [0, 1]");
  }
}

using Setter = std::function<void(ExperimentSpec&, std::string_view,
                                  const std::string&,
                                  const std::filesystem::path&)>;

SyntheticSpec& Synthetic(ExperimentSpec& s) {
  if (!s.synthetic) s.synthetic.emplace();
  return *s.synthetic;
}

DatasetPaths& Dataset(ExperimentSpec& s) {
  if (!s.dataset) s.dataset.emplace();
  return *s.dataset;
}

std::filesystem::path ResolvePath(std::string_view v,
                                  const std::filesystem::path& base) {
  std::filesystem::path p{std::string(Trim(v))};
  if (p.is_relative() && !base.empty()) p = base / p;
  return p;
}

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const auto* setters = new std::map<std::string, Setter, std::less<>>{
      {"dataset.edges",
       [](auto& s, auto v, auto&, auto& base) {
         Dataset(s).edges = ResolvePath(v, base);
       }},
      {"dataset.features",
       [](auto& s, auto v, auto&, auto& base) {
         Dataset(s).features = ResolvePath(v, base);
       }},
      {"dataset.labels",
       [](auto& s, auto v, auto&, auto& base) {
         Dataset(s).labels = ResolvePath(v, base);
       }},
      {"dataset.class_count",
       [](auto& s, auto v, auto& k, auto&) {
         s.class_count = static_cast<int>(ParseInt(v, k));
       }},
      {"synthetic.nodes",
       [](auto& s, auto v, auto& k, auto&) {
         Synthetic(s).nodes = static_cast<NodeId>(ParseInt(v, k));
       }},
      {"synthetic.classes",
       [](auto& s, auto v, auto& k, auto&) {
         Synthetic(s).classes = static_cast<ClassId>(ParseInt(v, k));
       }},
      {"synthetic.within_prob",
       [](auto& s, auto v, auto& k, auto&) {
         Synthetic(s).within_prob = ParseReal(v, k);
       }},
      {"synthetic.between_prob",
       [](auto& s, auto v, auto& k, auto&) {
         Synthetic(s).between_prob = ParseReal(v, k);
       }},
      {"synthetic.dim",
       [](auto& s, auto v, auto& k, auto&) {
         Synthetic(s).dim = static_cast<Eigen::Index>(ParseInt(v, k));
       }},
      {"synthetic.noise",
       [](auto& s, auto v, auto& k, auto&) {
         Synthetic(s).noise = ParseReal(v, k);
       }},
      {"synthetic.seed",
       [](auto& s, auto v, auto& k, auto&) {
         Synthetic(s).seed = ParseSeed(v, k);
       }},
      {"preprocess.target_homophily",
       [](auto& s, auto v, auto& k, auto&) {
         s.preprocess.target_homophily = ParseReal(v, k);
       }},
      {"preprocess.max_rejections",
       [](auto& s, auto v, auto& k, auto&) {
         const long long r = ParseInt(v, k);
         if (r < 1) throw ConfigError(k, "must be >= 1");
         s.preprocess.max_rejections = static_cast<std::size_t>(r);
       }},
      {"preprocess.reduce_dim",
       [](auto& s, auto v, auto& k, auto&) {
         s.preprocess.reduce_dim = static_cast<Eigen::Index>(ParseInt(v, k));
       }},
      {"preprocess.seed",
       [](auto& s, auto v, auto& k, auto&) {
         s.preprocess.seed = ParseSeed(v, k);
       }},
      {"spillover.p_a",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.spillover.p_a = ParseReal(v, k);
       }},
      {"spillover.p_m",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.spillover.p_m = ParseReal(v, k);
       }},
      {"spillover.p_aa",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.spillover.p_aa = ParseReal(v, k);
       }},
      {"spillover.p_am",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.spillover.p_am = ParseReal(v, k);
       }},
      {"spillover.p_ma",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.spillover.p_ma = ParseReal(v, k);
       }},
      {"spillover.p_mm",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.spillover.p_mm = ParseReal(v, k);
       }},
      {"engine.dar_window_g",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.dar_window_g = static_cast<int>(ParseInt(v, k));
       }},
      {"engine.dar_window_h",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.dar_window_h = static_cast<int>(ParseInt(v, k));
       }},
      {"engine.dar_slope_threshold",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.dar_slope_threshold = ParseReal(v, k);
       }},
      {"engine.simulated_regret_rollouts",
       [](auto& s, auto v, auto& k, auto&) {
         s.engine.simulated_regret_rollouts = static_cast<int>(ParseInt(v, k));
       }},
      {"bandit.policy",
       [](auto& s, auto v, auto& k, auto&) {
         v = Trim(v);
         if (v == "linucb") {
           s.bandit.policy = PolicyKind::kLinUcb;
         } else if (v == "random") {
           s.bandit.policy = PolicyKind::kRandom;
         } else {
           throw ConfigError(k, "expected linucb or random");
         }
       }},
      {"bandit.alpha",
       [](auto& s, auto v, auto& k, auto&) { s.bandit.alpha = ParseReal(v, k); }},
      {"bandit.ridge",
       [](auto& s, auto v, auto& k, auto&) { s.bandit.ridge = ParseReal(v, k); }},
      {"bandit.alpha_grid",
       [](auto& s, auto v, auto& k, auto&) {
         s.bandit.alpha_grid = ParseRealList(v, k);
       }},
      {"bandit.grid_repeats",
       [](auto& s, auto v, auto& k, auto&) {
         s.bandit.grid_repeats = static_cast<int>(ParseInt(v, k));
       }},
      {"run.seed",
       [](auto& s, auto v, auto& k, auto&) { s.base_seed = ParseSeed(v, k); }},
      {"run.repeats",
       [](auto& s, auto v, auto& k, auto&) {
         s.repeats = static_cast<int>(ParseInt(v, k));
       }},
      {"run.modes",
       [](auto& s, auto v, auto& k, auto&) { s.modes = ParseModeList(v, k); }},
      {"run.output_dir",
       [](auto& s, auto v, auto&, auto&) {
         s.output_dir = std::filesystem::path(std::string(Trim(v)));
       }},
      {"run.threads",
       [](auto& s, auto v, auto& k, auto&) {
         s.threads = static_cast<int>(ParseInt(v, k));
       }},
  };
  return *setters;
}

}  // namespace

std::vector<RunMode> ParseModeList(std::string_view text,
                                   const std::string& key) {
  std::vector<RunMode> modes;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view name = Trim(text.substr(0, comma));
    const auto mode = ParseMode(name);
    if (!mode) {
      throw ConfigError(key, "unknown mode \"" + std::string(name) + "\"");
    }
    for (RunMode m : modes) {
      if (m == *mode) throw ConfigError(key, "duplicate mode");
    }
    modes.push_back(*mode);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return modes;
}

void ExperimentSpec::Validate() const {
  if (dataset && synthetic) {
    throw ConfigError("dataset", "give either dataset.* or synthetic.*, not both");
  }
  if (!dataset && !synthetic) {
    throw ConfigError("dataset", "no dataset.* or synthetic.* entries");
  }
  if (dataset) {
    if (dataset->edges.empty()) throw ConfigError("dataset.edges", "missing");
    if (dataset->features.empty()) {
      throw ConfigError("dataset.features", "missing");
    }
    if (dataset->labels.empty()) throw ConfigError("dataset.labels", "missing");
  }
  if (class_count && *class_count < 2) {
    throw ConfigError("dataset.class_count", "must be >= 2");
  }
  if (synthetic) {
    if (synthetic->classes < 2) {
      throw ConfigError("synthetic.classes", "must be >= 2");
    }
    if (synthetic->nodes < synthetic->classes) {
      throw ConfigError("synthetic.nodes", "must be >= synthetic.classes");
    }
    RequireProbability(synthetic->within_prob, "synthetic.within_prob");
    RequireProbability(synthetic->between_prob, "synthetic.between_prob");
    if (synthetic->dim < synthetic->classes) {
      throw ConfigError("synthetic.dim", "must be >= synthetic.classes");
    }
    if (!(synthetic->noise >= 0.0)) {
      throw ConfigError("synthetic.noise", "must be >= 0");
    }
  }
  if (preprocess.target_homophily) {
    RequireProbability(*preprocess.target_homophily,
                       "preprocess.target_homophily");
  }
  if (preprocess.reduce_dim && *preprocess.reduce_dim < 1) {
    throw ConfigError("preprocess.reduce_dim", "must be >= 1");
  }
  const SpilloverParams& p = engine.spillover;
  RequireProbability(p.p_a, "spillover.p_a");
  RequireProbability(p.p_m, "spillover.p_m");
  RequireProbability(p.p_aa, "spillover.p_aa");
  RequireProbability(p.p_am, "spillover.p_am");
  RequireProbability(p.p_ma, "spillover.p_ma");
  RequireProbability(p.p_mm, "spillover.p_mm");
  if (engine.dar_window_g < 2) {
    throw ConfigError("engine.dar_window_g", "must be >= 2");
  }
  if (engine.dar_window_h < 1) {
    throw ConfigError("engine.dar_window_h", "must be >= 1");
  }
  if (!(engine.dar_slope_threshold >= 0.0)) {
    throw ConfigError("engine.dar_slope_threshold", "must be >= 0");
  }
  if (engine.simulated_regret_rollouts < 0) {
    throw ConfigError("engine.simulated_regret_rollouts", "must be >= 0");
  }
  if (!(bandit.alpha >= 0.0)) throw ConfigError("bandit.alpha", "must be >= 0");
  if (!(bandit.ridge > 0.0)) throw ConfigError("bandit.ridge", "must be > 0");
  for (double a : bandit.alpha_grid) {
    if (!(a >= 0.0)) throw ConfigError("bandit.alpha_grid", "must be >= 0");
  }
  if (bandit.grid_repeats < 1) {
    throw ConfigError("bandit.grid_repeats", "must be >= 1");
  }
  if (repeats < 1) throw ConfigError("run.repeats", "must be >= 1");
  if (modes.empty()) throw ConfigError("run.modes", "must not be empty");
  if (output_dir.empty()) throw ConfigError("run.output_dir", "must not be empty");
  if (threads < 1) throw ConfigError("run.threads", "must be >= 1");
}

ExperimentSpec ParseConfigText(std::string_view text,
                               const std::filesystem::path& base_dir) {
  ExperimentSpec spec;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto newline = text.find('\n');
    const std::string_view line = Trim(text.substr(0, newline));
    text.remove_prefix(newline == std::string_view::npos ? text.size()
                                                         : newline + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no),
                        "expected \"key = value\"");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    const auto it = Setters().find(key);
    if (it == Setters().end()) throw ConfigError(key, "unknown key");
    if (!seen.insert(key).second) throw ConfigError(key, "duplicate key");
    it->second(spec, value, key, base_dir);
  }
  spec.Validate();
  return spec;
}

ExperimentSpec ParseConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseConfigText(buffer.str(), path.parent_path());
}

}  // namespace netcb
