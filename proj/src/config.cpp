#include "trilow/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trilow/graph.hpp"

namespace trilow {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Comments start at an unquoted '#'.
std::string drop_comment(const std::string& line) {
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool parse_number(const std::string& text, ConfigValue& out) {
  const char* begin = text.c_str();
  char* end = nullptr;
  long long as_int = std::strtoll(begin, &end, 10);
  if (end != begin && *end == '\0') {
    out.kind = ConfigValue::Kind::Integer;
    out.integer = as_int;
    out.real = static_cast<double>(as_int);
    return true;
  }
  end = nullptr;
  double as_real = std::strtod(begin, &end);
  if (end != begin && *end == '\0') {
    out.kind = ConfigValue::Kind::Real;
    out.real = as_real;
    return true;
  }
  return false;
}

ConfigValue parse_value(const std::string& raw, const std::string& key, int line_no) {
  std::string text = strip(raw);
  if (text.empty())
    throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty value for " + key);
  ConfigValue v;
  if (text == "true" || text == "false") {
    v.kind = ConfigValue::Kind::Boolean;
    v.boolean = (text == "true");
    return v;
  }
  if (text.front() == '"') {
    if (text.size() < 2 || text.back() != '"')
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unterminated string");
    v.kind = ConfigValue::Kind::Text;
    v.text = text.substr(1, text.size() - 2);
    return v;
  }
  if (text.front() == '[') {
    if (text.back() != ']')
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": unterminated array");
    v.kind = ConfigValue::Kind::NumberList;
    std::string body = text.substr(1, text.size() - 2);
    std::stringstream parts(body);
    std::string item;
    while (std::getline(parts, item, ',')) {
      item = strip(item);
      if (item.empty()) continue;
      ConfigValue elem;
      if (!parse_number(item, elem))
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": array element is not a number: " + item);
      v.numbers.push_back(elem.real);
    }
    return v;
  }
  if (parse_number(text, v)) return v;
  // Bare word: treat as text so paths do not need quoting.
  v.kind = ConfigValue::Kind::Text;
  v.text = text;
  return v;
}

}  // namespace

std::map<std::string, ConfigValue> parse_config_text(const std::string& text) {
  std::map<std::string, ConfigValue> values;
  std::stringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(drop_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(line_no) + ": bad section header");
      section = strip(line.substr(1, line.size() - 2));
      if (section.empty())
        throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty section name");
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key = value");
    std::string key = strip(line.substr(0, eq));
    if (key.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": empty key");
    if (!section.empty()) key = section + "." + key;
    if (values.count(key))
      throw std::invalid_argument("config line " + std::to_string(line_no) + ": duplicate key " + key);
    values[key] = parse_value(line.substr(eq + 1), key, line_no);
  }
  return values;
}

std::map<std::string, ConfigValue> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("parse_config_file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

int64_t ExperimentConfig::resolved_m() const {
  if (m >= 0) return m;
  if (density >= 0.0) {
    double target = density * static_cast<double>(pair_count(n));
    return static_cast<int64_t>(std::llround(target));
  }
  throw std::invalid_argument("config: either m or density must be set");
}

void ExperimentConfig::validate() const {
  // A run driven entirely by a sweep grid takes its sizes from sweep_n, so n
  // may stay unset; the grid then needs a density rather than a fixed m.
  const bool sweep_only = !sweep_n.empty() && n < 2;
  if (m >= 0 && density >= 0.0)
    throw std::invalid_argument("config: m and density are mutually exclusive");
  if (sweep_only) {
    if (m >= 0) throw std::invalid_argument("config: a sweep grid without n needs density, not m");
  } else {
    if (n < 2) throw std::invalid_argument("config: n must be at least 2");
    int64_t mm = resolved_m();
    if (mm < 0 || mm > pair_count(n)) throw std::invalid_argument("config: m out of range");
  }
  if (eta < 0.0 || eta >= 1.0) throw std::invalid_argument("config: eta must lie in [0, 1)");
  if (delta < 0.0) throw std::invalid_argument("config: delta must be nonnegative");
  if (lambda <= 0.0 || lambda > 0.5) throw std::invalid_argument("config: lambda must lie in (0, 1/2]");
  if (alpha && c_prime)
    throw std::invalid_argument("config: alpha and c_prime are mutually exclusive");
  if (alpha && (*alpha < 0.0 || *alpha > 1.0))
    throw std::invalid_argument("config: alpha must lie in [0, 1]");
  if (c_prime && *c_prime <= 0.0) throw std::invalid_argument("config: c_prime must be positive");
  if (trials < 1) throw std::invalid_argument("config: trials must be positive");
  if (c_d <= 0.0) throw std::invalid_argument("config: c_d must be positive");
  if (workers < 0) throw std::invalid_argument("config: workers must be nonnegative");
  if (mc_samples < 0) throw std::invalid_argument("config: mc_samples must be nonnegative");
  if (deficit_draws < 2) throw std::invalid_argument("config: deficit_draws must be at least 2");
  for (int sn : sweep_n)
    if (sn < 2) throw std::invalid_argument("config: sweep_n entries must be at least 2");
  for (double sa : sweep_alpha)
    if (sa < 0.0 || sa > 1.0) throw std::invalid_argument("config: sweep_alpha entries must lie in [0, 1]");
}

namespace {

double want_real(const ConfigValue& v, const std::string& key) {
  if (v.kind == ConfigValue::Kind::Real || v.kind == ConfigValue::Kind::Integer) return v.real;
  throw std::invalid_argument("config: " + key + " must be a number");
}

int64_t want_integer(const ConfigValue& v, const std::string& key) {
  if (v.kind == ConfigValue::Kind::Integer) return v.integer;
  throw std::invalid_argument("config: " + key + " must be an integer");
}

std::string want_text(const ConfigValue& v, const std::string& key) {
  if (v.kind == ConfigValue::Kind::Text) return v.text;
  throw std::invalid_argument("config: " + key + " must be a string");
}

std::vector<double> want_numbers(const ConfigValue& v, const std::string& key) {
  if (v.kind == ConfigValue::Kind::NumberList) return v.numbers;
  throw std::invalid_argument("config: " + key + " must be an array of numbers");
}

}  // namespace

ExperimentConfig experiment_from_values(const std::map<std::string, ConfigValue>& values) {
  ExperimentConfig cfg;
  for (const auto& [key, v] : values) {
    if (key == "n") cfg.n = static_cast<int>(want_integer(v, key));
    else if (key == "m") cfg.m = want_integer(v, key);
    else if (key == "density") cfg.density = want_real(v, key);
    else if (key == "eta") cfg.eta = want_real(v, key);
    else if (key == "delta") cfg.delta = want_real(v, key);
    else if (key == "lambda") cfg.lambda = want_real(v, key);
    else if (key == "alpha") cfg.alpha = want_real(v, key);
    else if (key == "c_prime") cfg.c_prime = want_real(v, key);
    else if (key == "trials") cfg.trials = static_cast<int>(want_integer(v, key));
    else if (key == "master_seed") cfg.master_seed = static_cast<uint64_t>(want_integer(v, key));
    else if (key == "out_dir") cfg.out_dir = want_text(v, key);
    else if (key == "c_d") cfg.c_d = want_real(v, key);
    else if (key == "workers") cfg.workers = static_cast<int>(want_integer(v, key));
    else if (key == "sweep.n") {
      for (double x : want_numbers(v, key)) cfg.sweep_n.push_back(static_cast<int>(std::llround(x)));
    } else if (key == "sweep.alpha") cfg.sweep_alpha = want_numbers(v, key);
    else if (key == "mc_samples") cfg.mc_samples = static_cast<int>(want_integer(v, key));
    else if (key == "deficit_draws") cfg.deficit_draws = static_cast<int>(want_integer(v, key));
    else throw std::invalid_argument("config: unknown key " + key);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  return experiment_from_values(parse_config_file(path));
}

}  // namespace trilow
