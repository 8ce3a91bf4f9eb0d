/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/instance_io.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace kmsumm {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ParseError("error while reading '" + path + "'");
  return buffer.str();
}

double require_number(const ordered_json& node, const char* key, const std::string& where) {
  if (!node.contains(key) || !node[key].is_number())
    throw ParseError(where + ": missing or non-numeric '" + std::string(key) + "'");
  return node[key].get<double>();
}

std::string require_string(const ordered_json& node, const char* key, const std::string& where) {
  if (!node.contains(key) || !node[key].is_string())
    throw ParseError(where + ": missing or non-string '" + std::string(key) + "'");
  return node[key].get<std::string>();
}

double parse_double_field(const std::string& text, const std::string& where) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  while (end != nullptr && (*end == ' ' || *end == '\t')) ++end;
  if (end == text.c_str() || end == nullptr || *end != '\0' || errno == ERANGE)
    throw ParseError(where + ": '" + text + "' is not a number");
  return value;
}

std::string trim(const std::string& text) {
  size_t begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  size_t end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

}  // namespace

Instance load_instance(const std::string& path) {
  const std::string text = read_file(path);
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  if (!root.is_object()) throw ParseError("'" + path + "': top level must be an object");

  Instance instance;
  instance.name = require_string(root, "name", path);
  instance.budget_s = require_number(root, "budget_seconds", path);
  if (root.contains("metric")) {
    if (!root["metric"].is_string()) throw ParseError(path + ": 'metric' must be a string");
    instance.metric = metric_from_string(root["metric"].get<std::string>());
  }
  if (!root.contains("shots") || !root["shots"].is_array())
    throw ParseError(path + ": missing 'shots' array");

  for (const auto& entry : root["shots"]) {
    if (!entry.is_object()) throw ParseError(path + ": each shot must be an object");
    Shot shot;
    shot.id = require_string(entry, "id", path);
    shot.duration_s = require_number(entry, "duration_seconds", path + " shot '" + shot.id + "'");
    if (!entry.contains("features") || !entry["features"].is_array())
      throw ParseError(path + " shot '" + shot.id + "': missing 'features' array");
    for (const auto& value : entry["features"]) {
      if (!value.is_number())
        throw ParseError(path + " shot '" + shot.id + "': features must be numbers");
      shot.features.push_back(value.get<double>());
    }
    instance.shots.push_back(std::move(shot));
  }

  validate_instance(instance);
  return instance;
}

Instance load_instance_csv(const std::string& path, const std::string& name, double budget_s,
                           MetricKind metric) {
  const std::string text = read_file(path);
  Instance instance;
  instance.name = name;
  instance.budget_s = budget_s;
  instance.metric = metric;

  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);

    std::vector<std::string> fields;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) fields.push_back(trim(cell));
    if (fields.size() < 3)
      throw ParseError(where + ": expected id,duration_seconds,f0,... (got " +
                       std::to_string(fields.size()) + " fields)");

    Shot shot;
    shot.id = fields[0];
    if (shot.id.empty()) throw ParseError(where + ": empty shot id");
    shot.duration_s = parse_double_field(fields[1], where);
    for (size_t f = 2; f < fields.size(); ++f)
      shot.features.push_back(parse_double_field(fields[f], where));
    instance.shots.push_back(std::move(shot));
  }

  validate_instance(instance);
  return instance;
}

Instance load_instance_any(const std::string& path, double csv_budget_s, MetricKind csv_metric) {
  const size_t dot = path.find_last_of('.');
  const std::string extension = dot == std::string::npos ? "" : path.substr(dot);
  if (extension == ".csv") {
    std::string stem = path.substr(0, dot);
    const size_t slash = stem.find_last_of("/\\");
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    return load_instance_csv(path, stem, csv_budget_s, csv_metric);
  }
  return load_instance(path);
}

std::string instance_to_json(const Instance& instance) {
  ordered_json root;
  root["name"] = instance.name;
  root["budget_seconds"] = instance.budget_s;
  root["metric"] = to_string(instance.metric);
  root["shots"] = ordered_json::array();
  for (const Shot& shot : instance.shots) {
    ordered_json entry;
    entry["id"] = shot.id;
    entry["duration_seconds"] = shot.duration_s;
    entry["features"] = shot.features;
    root["shots"].push_back(std::move(entry));
  }
  return root.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << instance_to_json(instance);
  if (!out) throw ParseError("error while writing '" + path + "'");
}

}  // namespace kmsumm
