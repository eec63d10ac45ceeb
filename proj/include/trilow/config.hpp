#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trilow {

// Value in a key = value config file. Scalars plus flat arrays of numbers.
struct ConfigValue {
  enum class Kind { Boolean, Integer, Real, Text, NumberList };
  Kind kind = Kind::Text;
  bool boolean = false;
  int64_t integer = 0;
  double real = 0.0;
  std::string text;
  std::vector<double> numbers;
};

// Parses the small config dialect used by the CLI: one `key = value` per line,
// optional [section] headers folded into dotted keys, # comments, bare/quoted
// strings, booleans, integers, reals, and [a, b, c] arrays of numbers.
std::map<std::string, ConfigValue> parse_config_text(const std::string& text);
std::map<std::string, ConfigValue> parse_config_file(const std::string& path);

struct ExperimentConfig {
  int n = 0;
  int64_t m = -1;               // explicit edge count; wins over density when both absent -> error
  double density = -1.0;        // m = round(density * C(n,2)) when m not given
  double eta = 0.1;
  double delta = 0.05;
  double lambda = 0.4;
  std::optional<double> alpha;
  std::optional<double> c_prime;
  int trials = 10;
  uint64_t master_seed = 1;
  std::string out_dir = ".";
  double c_d = 1.0;
  int workers = 0;              // 0 = hardware concurrency
  std::vector<int> sweep_n;     // optional n grid for sweep runs
  std::vector<double> sweep_alpha;
  int mc_samples = 0;           // Monte Carlo draws for deficit runs
  int deficit_draws = 200;

  int64_t resolved_m() const;   // m if set, otherwise from density
  void validate() const;
};

// Builds an ExperimentConfig from parsed key/values. Unknown keys are errors.
ExperimentConfig experiment_from_values(const std::map<std::string, ConfigValue>& values);
ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace trilow
