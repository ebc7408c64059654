#include "repairkit/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "repairkit/error.hpp"

namespace repairkit {

namespace {

using nlohmann::json;

double to_double(std::string_view value, std::string_view key) {
  try {
    size_t used = 0;
    std::string s(value);
    double d = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return d;
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_input,
                "config: bad numeric value for '" + std::string(key) + "'");
  }
}

long to_long(std::string_view value, std::string_view key) {
  long out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    throw Error(ErrorCode::invalid_input,
                "config: bad integer value for '" + std::string(key) + "'");
  return out;
}

std::vector<double> to_double_list(std::string_view value,
                                   std::string_view key) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= value.size()) {
    size_t comma = value.find(',', start);
    std::string_view piece = value.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start);
    out.push_back(to_double(piece, key));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

void apply_json(ToolConfig& config, const json& doc) {
  if (!doc.is_object())
    throw Error(ErrorCode::invalid_input, "config: JSON root must be an object");
  for (const auto& [key, value] : doc.items()) {
    std::string rendered;
    if (value.is_array()) {
      for (size_t i = 0; i < value.size(); ++i) {
        if (i) rendered += ',';
        rendered += value[i].dump();
      }
    } else if (value.is_string()) {
      rendered = value.get<std::string>();
    } else {
      rendered = value.dump();
    }
    apply_config_entry(config, key, rendered);
  }
}

}  // namespace

void ToolConfig::validate() const {
  metric.validate();
  if (!(epsilon > 0.0))
    throw Error(ErrorCode::invalid_input, "config: epsilon must be > 0");
  if (!(clip_eps > 0.0))
    throw Error(ErrorCode::invalid_input, "config: clip_eps must be > 0");
  if (beta < 0.0)
    throw Error(ErrorCode::invalid_input, "config: beta must be >= 0");
  if (!(threshold > 0.0) || !(threshold < 1.0))
    throw Error(ErrorCode::invalid_input,
                "config: threshold must be in (0, 1)");
  double sum = 0.0;
  for (double r : ratios) {
    if (!(r > 0.0))
      throw Error(ErrorCode::invalid_input, "config: ratios must be positive");
    sum += r;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorCode::invalid_input, "config: ratios must sum to 1");
}

void apply_config_entry(ToolConfig& config, std::string_view key,
                        std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "max_ngram") {
    config.metric.max_ngram = static_cast<int>(to_long(value, key));
  } else if (key == "keyword_weight") {
    config.metric.keyword_weight = to_double(value, key);
  } else if (key == "other_weight") {
    config.metric.other_weight = to_double(value, key);
  } else if (key == "codebleu_weights") {
    auto list = to_double_list(value, key);
    if (list.size() != 4)
      throw Error(ErrorCode::invalid_input,
                  "config: codebleu_weights needs exactly 4 values");
    for (size_t i = 0; i < 4; ++i) config.metric.codebleu_weights[i] = list[i];
  } else if (key == "min_subtree_height") {
    config.metric.min_subtree_height = static_cast<int>(to_long(value, key));
  } else if (key == "smoothing_epsilon") {
    config.metric.smoothing_epsilon = to_double(value, key);
  } else if (key == "epsilon") {
    config.epsilon = to_double(value, key);
  } else if (key == "clip_eps") {
    config.clip_eps = to_double(value, key);
  } else if (key == "beta") {
    config.beta = to_double(value, key);
  } else if (key == "threshold") {
    config.threshold = to_double(value, key);
  } else if (key == "ratios") {
    auto list = to_double_list(value, key);
    if (list.size() != 3)
      throw Error(ErrorCode::invalid_input,
                  "config: ratios needs exactly 3 values");
    for (size_t i = 0; i < 3; ++i) config.ratios[i] = list[i];
  } else if (key == "seed") {
    config.seed = static_cast<uint64_t>(to_long(value, key));
  } else {
    throw Error(ErrorCode::invalid_input,
                "config: unknown key '" + std::string(key) + "'");
  }
}

ToolConfig parse_config(std::string_view contents) {
  ToolConfig config;
  std::string_view body = trim(contents);
  if (!body.empty() && body.front() == '{') {
    json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded())
      throw Error(ErrorCode::invalid_input, "config: invalid JSON");
    apply_json(config, doc);
  } else {
    size_t start = 0;
    while (start <= contents.size()) {
      size_t nl = contents.find('\n', start);
      std::string_view line = contents.substr(
          start,
          nl == std::string_view::npos ? std::string_view::npos : nl - start);
      std::string_view stripped = trim(line);
      if (!stripped.empty() && stripped.front() != '#') {
        size_t eq = stripped.find('=');
        if (eq == std::string_view::npos)
          throw Error(ErrorCode::invalid_input,
                      "config: expected key=value, got '" +
                          std::string(stripped) + "'");
        apply_config_entry(config, stripped.substr(0, eq),
                           stripped.substr(eq + 1));
      }
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }
  config.validate();
  return config;
}

ToolConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::io, "cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace repairkit
