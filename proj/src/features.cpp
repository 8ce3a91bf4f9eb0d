/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#include "kmsumm/features.hpp"

#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kmsumm {

namespace {

// Pull-parser for PPM headers: skips whitespace and '#' comments between
// tokens. P6 pixel data starts right after the single whitespace byte that
// terminates the maxval token.
struct PpmReader {
  const std::string& data;
  size_t pos = 0;
  const std::string& path;

  void skip_separators() {
    while (pos < data.size()) {
      const char c = data[pos];
      if (c == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  std::string next_token() {
    skip_separators();
    const size_t begin = pos;
    while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos]))) ++pos;
    if (begin == pos) throw ParseError(path + ": truncated PPM header");
    return data.substr(begin, pos - begin);
  }

  int next_int(const char* what, int max_value) {
    const std::string token = next_token();
    int value = 0;
    for (char c : token) {
      if (c < '0' || c > '9')
        throw ParseError(path + ": bad " + what + " '" + token + "' in PPM header");
      value = value * 10 + (c - '0');
      if (value > max_value)
        throw ParseError(path + ": " + what + " " + token + " out of range");
    }
    return value;
  }
};

std::string read_binary_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw ParseError("error while reading '" + path + "'");
  return buffer.str();
}

}  // namespace

void validate_histogram_config(const HistogramConfig& config) {
  const int bins = config.bins_per_channel;
  if (bins < 1 || bins > 256 || 256 % bins != 0)
    throw ValidationError("bins_per_channel must divide 256; got " + std::to_string(bins));
}

std::vector<double> compute_histogram(const FrameImage& frame, const HistogramConfig& config) {
  validate_histogram_config(config);
  if (frame.width < 1 || frame.height < 1 || frame.pixel_count() == 0)
    throw ValidationError("cannot compute a histogram of an empty image");
  if (frame.rgb.size() != static_cast<size_t>(frame.pixel_count()) * 3)
    throw ValidationError("frame buffer size does not match width * height * 3");

  const int bins = config.bins_per_channel;
  const int shift_divisor = 256 / bins;  // maps value v to bin v / (256 / bins)
  std::vector<std::uint64_t> counts(static_cast<size_t>(bins) * 3, 0);
  const long pixels = frame.pixel_count();
  const unsigned char* p = frame.rgb.data();
  for (long i = 0; i < pixels; ++i, p += 3) {
    counts[p[0] / shift_divisor] += 1;
    counts[bins + p[1] / shift_divisor] += 1;
    counts[2 * bins + p[2] / shift_divisor] += 1;
  }

  std::vector<double> features(counts.size());
  const double scale = config.normalize ? 1.0 / static_cast<double>(pixels) : 1.0;
  for (size_t b = 0; b < counts.size(); ++b) features[b] = static_cast<double>(counts[b]) * scale;
  return features;
}

FrameImage load_ppm(const std::string& path) {
  const std::string data = read_binary_file(path);
  PpmReader reader{data, 0, path};

  const std::string magic = reader.next_token();
  if (magic != "P6" && magic != "P3")
    throw ParseError(path + ": not a P6/P3 PPM file (magic '" + magic + "')");

  FrameImage frame;
  frame.width = reader.next_int("width", 1 << 20);
  frame.height = reader.next_int("height", 1 << 20);
  if (frame.width < 1 || frame.height < 1)
    throw ParseError(path + ": image dimensions must be at least 1x1");
  const int maxval = reader.next_int("maxval", 1 << 20);
  if (maxval != 255)
    throw ParseError(path + ": unsupported maxval " + std::to_string(maxval) + " (only 255)");

  const size_t bytes = static_cast<size_t>(frame.pixel_count()) * 3;
  frame.rgb.resize(bytes);

  if (magic == "P6") {
    // Exactly one whitespace byte separates the header from the raster.
    if (reader.pos >= data.size() || !std::isspace(static_cast<unsigned char>(data[reader.pos])))
      throw ParseError(path + ": missing separator before P6 pixel data");
    ++reader.pos;
    if (data.size() - reader.pos < bytes)
      throw ParseError(path + ": truncated P6 pixel data (" +
                       std::to_string(data.size() - reader.pos) + " of " + std::to_string(bytes) +
                       " bytes)");
    std::copy_n(data.begin() + static_cast<long>(reader.pos), bytes, frame.rgb.begin());
  } else {
    for (size_t b = 0; b < bytes; ++b)
      frame.rgb[b] = static_cast<unsigned char>(reader.next_int("sample", 255));
  }
  return frame;
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
  const std::string text = read_binary_file(path);
  std::vector<ManifestEntry> entries;
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(line_no);

    const size_t comma = line.find_last_of(',');
    if (comma == std::string::npos || comma == 0)
      throw ParseError(where + ": expected frame_filename,duration_seconds");
    ManifestEntry entry;
    entry.frame_file = line.substr(0, comma);
    const std::string duration_text = line.substr(comma + 1);
    try {
      size_t used = 0;
      entry.duration_s = std::stod(duration_text, &used);
      while (used < duration_text.size() && duration_text[used] == ' ') ++used;
      if (used != duration_text.size()) throw std::invalid_argument(duration_text);
    } catch (const std::exception&) {
      throw ParseError(where + ": bad duration '" + duration_text + "'");
    }
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) throw ValidationError(path + ": manifest lists no frames");
  return entries;
}

Instance build_instance(const std::string& frames_dir, const std::string& manifest_path,
                        double budget_s, const HistogramConfig& config, const std::string& name,
                        MetricKind metric) {
  validate_histogram_config(config);
  const std::vector<ManifestEntry> entries = load_manifest(manifest_path);
  const int n = static_cast<int>(entries.size());

  Instance instance;
  instance.name = name.empty() ? std::filesystem::path(manifest_path).stem().string() : name;
  instance.budget_s = budget_s;
  instance.metric = metric;
  instance.shots.resize(n);

  // Frames are independent, so decode them in parallel. Exceptions cannot
  // cross the parallel region; collect failures per slot and rethrow the
  // first one afterwards.
  std::vector<std::string> failures(n);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      const std::string frame_path =
          (std::filesystem::path(frames_dir) / entries[i].frame_file).string();
      const FrameImage frame = load_ppm(frame_path);
      Shot& shot = instance.shots[i];
      shot.id = entries[i].frame_file;
      shot.duration_s = entries[i].duration_s;
      shot.features = compute_histogram(frame, config);
    } catch (const std::exception& e) {
      failures[i] = e.what();
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!failures[i].empty()) throw ParseError(failures[i]);
  }

  validate_instance(instance);
  return instance;
}

}  // namespace kmsumm
