#pragma once

#include <cstdint>
#include <vector>

#include "svt2d/matrix.hpp"

namespace svt2d {

/// Observation set Omega over a rows x cols host matrix. Indices are kept as
/// sorted flat offsets (i * cols + j), which is the lexicographic (i, j)
/// order used by the MSK file format.
struct SampleMask {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> flat;
  std::uint64_t seed = 0;

  std::int64_t size() const { return static_cast<std::int64_t>(flat.size()); }
  bool contains(int i, int j) const;

  /// Throws std::invalid_argument if dimensions or indices are out of range,
  /// indices are unsorted/duplicated, or the mask is empty.
  void validate() const;
};

/// Draws round(fraction * rows * cols) distinct cells uniformly without
/// replacement (seeded partial Fisher-Yates over the flat index range).
/// Rounding is half-away-from-zero. fraction must lie in (0, 1] and select
/// at least one cell.
SampleMask generate_uniform_mask(int rows, int cols, double fraction,
                                 std::uint64_t seed);

/// P_Omega: keeps entries of m on the mask, exact zeros elsewhere.
Matrix project(const Matrix& m, const SampleMask& mask);

/// All host cells not in the mask. Complementing a full mask is an error
/// (masks may not be empty).
SampleMask mask_complement(const SampleMask& mask);

}  // namespace svt2d
