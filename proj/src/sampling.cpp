#include "svt2d/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "svt2d/rng.hpp"

namespace svt2d {

bool SampleMask::contains(int i, int j) const {
  const std::int64_t f = static_cast<std::int64_t>(i) * cols + j;
  return std::binary_search(flat.begin(), flat.end(), f);
}

void SampleMask::validate() const {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("mask: host dimensions must be positive");
  }
  const std::int64_t total = static_cast<std::int64_t>(rows) * cols;
  if (flat.empty() || size() > total) {
    throw std::invalid_argument("mask: index count must be in [1, rows*cols]");
  }
  std::int64_t prev = -1;
  for (std::int64_t f : flat) {
    if (f < 0 || f >= total) {
      throw std::invalid_argument("mask: index " + std::to_string(f) +
                                  " out of range");
    }
    if (f <= prev) {
      throw std::invalid_argument("mask: indices must be sorted and distinct");
    }
    prev = f;
  }
}

SampleMask generate_uniform_mask(int rows, int cols, double fraction,
                                 std::uint64_t seed) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("generate_uniform_mask: dimensions must be positive");
  }
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw std::invalid_argument("generate_uniform_mask: fraction must be in (0, 1]");
  }
  const std::int64_t total = static_cast<std::int64_t>(rows) * cols;
  // Round half away from zero, as llround does for positive arguments.
  const std::int64_t count = std::llround(fraction * static_cast<double>(total));
  if (count < 1) {
    throw std::invalid_argument(
        "generate_uniform_mask: fraction selects no cells");
  }

  // Partial Fisher-Yates over the flat index range: after k swaps the first
  // k slots hold a uniform k-subset drawn without replacement.
  std::vector<std::int64_t> perm(total);
  std::iota(perm.begin(), perm.end(), std::int64_t{0});
  Rng rng(seed);
  for (std::int64_t k = 0; k < count; ++k) {
    const std::int64_t j =
        k + static_cast<std::int64_t>(
                rng.uniform_below(static_cast<std::uint64_t>(total - k)));
    std::swap(perm[k], perm[j]);
  }

  SampleMask mask;
  mask.rows = rows;
  mask.cols = cols;
  mask.seed = seed;
  mask.flat.assign(perm.begin(), perm.begin() + count);
  std::sort(mask.flat.begin(), mask.flat.end());
  return mask;
}

Matrix project(const Matrix& m, const SampleMask& mask) {
  mask.validate();
  if (m.rows() != mask.rows || m.cols() != mask.cols) {
    throw std::invalid_argument("project: mask/matrix dimension mismatch");
  }
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (std::int64_t f : mask.flat) {
    const int i = static_cast<int>(f / mask.cols);
    const int j = static_cast<int>(f % mask.cols);
    out(i, j) = m(i, j);
  }
  return out;
}

SampleMask mask_complement(const SampleMask& mask) {
  mask.validate();
  const std::int64_t total = static_cast<std::int64_t>(mask.rows) * mask.cols;
  if (mask.size() == total) {
    throw std::invalid_argument(
        "mask_complement: complement of a full mask is empty");
  }
  SampleMask out;
  out.rows = mask.rows;
  out.cols = mask.cols;
  out.seed = mask.seed;
  out.flat.reserve(total - mask.size());
  std::size_t pos = 0;
  for (std::int64_t f = 0; f < total; ++f) {
    if (pos < mask.flat.size() && mask.flat[pos] == f) {
      ++pos;
    } else {
      out.flat.push_back(f);
    }
  }
  return out;
}

}  // namespace svt2d
