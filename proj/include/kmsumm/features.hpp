/*
 * kmsumm: shot-subset summarization by knapsack-median search.
 *
 * Copyright 2026 kmsumm authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef KMSUMM_FEATURES_HPP_
#define KMSUMM_FEATURES_HPP_

#include <string>
#include <vector>

#include "kmsumm/instance.hpp"

namespace kmsumm {

// 8-bit RGB raster, row-major, 3 bytes per pixel.
struct FrameImage {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> rgb;

  long pixel_count() const { return static_cast<long>(width) * height; }
};

struct HistogramConfig {
  // Bins per channel; must divide 256 so every bin covers the same number of
  // intensity values. The feature vector has 3 * bins_per_channel entries,
  // laid out as all red bins, then green, then blue.
  int bins_per_channel = 32;
  // Divide each channel's counts by the pixel count. With this off the
  // entries are raw counts (exact integers stored as doubles).
  bool normalize = true;
};

void validate_histogram_config(const HistogramConfig& config);

// Color histogram of one frame. Counting is integer-exact, so the result is
// identical however the pixels are traversed; value v lands in bin
// v * bins / 256.
std::vector<double> compute_histogram(const FrameImage& frame, const HistogramConfig& config);

// PPM decoder covering binary P6 and ASCII P3, maxval 255 only.
FrameImage load_ppm(const std::string& path);

struct ManifestEntry {
  std::string frame_file;
  double duration_s = 0.0;
};

// CSV manifest, one `frame_filename,duration_seconds` line per shot.
std::vector<ManifestEntry> load_manifest(const std::string& path);

// Builds an instance from a manifest and its frame images: shot i gets the
// manifest's i-th duration and the histogram of its frame, and keeps the
// frame filename as its id. Frames are decoded independently, so the order
// they are processed in cannot change the result.
Instance build_instance(const std::string& frames_dir, const std::string& manifest_path,
                        double budget_s, const HistogramConfig& config,
                        const std::string& name = "", MetricKind metric = MetricKind::kEuclidean);

}  // namespace kmsumm

#endif  // KMSUMM_FEATURES_HPP_
