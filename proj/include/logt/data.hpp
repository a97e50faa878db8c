#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logt/rng.hpp"

namespace logt {

/// Labeled points stored densely, row-major (point i is row i).
struct Dataset {
  std::int64_t n = 0;
  int d = 0;
  std::vector<double> points;
  std::vector<int> labels;

  std::span<const double> point(std::int64_t i) const {
    return {points.data() + i * d, static_cast<std::size_t>(d)};
  }
};

/// Parses `label idx:val idx:val ...` lines with 1-based indices; missing
/// indices are zero. Throws ParseError with the offending line number.
Dataset load_libsvm(const std::string& path, std::optional<int> expected_dim = std::nullopt);

void write_libsvm(const Dataset& ds, const std::string& path);

/// Min-max scales every feature to [0,1] in place (constant features map
/// to 0). Idempotent.
void normalize_unit_range(Dataset& ds);

/// n/2 points per class from two unit-variance spherical Gaussians at
/// +/-(separation/2)*u for a seeded random unit direction u, then
/// normalized to [0,1] per feature. Labels are 0 and 1.
Dataset synth_clusters(std::int64_t n, int d, double separation, std::uint64_t seed);

struct PairDraw {
  std::int64_t i = 0;
  std::int64_t j = 0;
  int y = 0;  // +1 iff labels match, else -1
};

/// Uniform draws of index pairs with i != j.
PairDraw draw_pair(const Dataset& ds, Rng& rng);

}  // namespace logt
