#include "svt2d/spectral.hpp"

#include <algorithm>
#include <stdexcept>

#include "fft.hpp"

namespace svt2d {

namespace {

// Centered layout: shifted[i] = standard[(i + ceil(n/2)) % n], so the zero
// bin lands at floor(n/2) and freq[i] = (i - n/2) / (n * dt).
Vector centered_freqs(int n, double dt) {
  Vector f(n);
  for (int i = 0; i < n; ++i) {
    f(i) = static_cast<double>(i - n / 2) / (static_cast<double>(n) * dt);
  }
  return f;
}

}  // namespace

Spectrum2D dft2(const Matrix& m, const EseemGrid& grid) {
  grid.validate();
  require_finite(m, "dft2");
  if (m.rows() != grid.n1 || m.cols() != grid.n2) {
    throw std::invalid_argument("dft2: matrix does not match the grid");
  }
  const int n1 = grid.n1;
  const int n2 = grid.n2;

  CMatrix work(n1, n2);
  std::vector<std::complex<double>> line;

  // Rows (t2 axis) first, then columns.
  line.resize(n2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) line[j] = std::complex<double>(m(i, j), 0.0);
    detail::dft_inplace(line, false);
    for (int j = 0; j < n2; ++j) work(i, j) = line[j];
  }
  line.assign(n1, {0.0, 0.0});
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) line[i] = work(i, j);
    detail::dft_inplace(line, false);
    for (int i = 0; i < n1; ++i) work(i, j) = line[i];
  }

  Spectrum2D spectrum;
  spectrum.grid = grid;
  spectrum.freq1 = centered_freqs(n1, grid.dt1);
  spectrum.freq2 = centered_freqs(n2, grid.dt2);
  spectrum.values.resize(n1, n2);
  const int s1 = (n1 + 1) / 2;
  const int s2 = (n2 + 1) / 2;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      spectrum.values(i, j) = work((i + s1) % n1, (j + s2) % n2);
    }
  }
  return spectrum;
}

Matrix magnitude(const Spectrum2D& spectrum) {
  return spectrum.values.cwiseAbs();
}

std::vector<Peak> find_peaks(const Spectrum2D& spectrum, double rel_threshold) {
  if (!(rel_threshold > 0.0) || !(rel_threshold < 1.0)) {
    throw std::invalid_argument("find_peaks: rel_threshold must be in (0, 1)");
  }
  const Matrix mag = magnitude(spectrum);
  const int n1 = static_cast<int>(mag.rows());
  const int n2 = static_cast<int>(mag.cols());
  const double global_max = mag.maxCoeff();
  const double floor = rel_threshold * global_max;

  std::vector<Peak> peaks;
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < n2; ++j) {
      const double v = mag(i, j);
      if (v < floor || v == 0.0) continue;
      bool strict_max = true;
      for (int di = -1; di <= 1 && strict_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = i + di;
          const int jj = j + dj;
          if (ii < 0 || ii >= n1 || jj < 0 || jj >= n2) continue;
          if (mag(ii, jj) >= v) {
            strict_max = false;
            break;
          }
        }
      }
      if (strict_max) {
        peaks.push_back({spectrum.freq1(i), spectrum.freq2(j), v});
      }
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.amplitude != b.amplitude) return a.amplitude > b.amplitude;
    if (a.nu1 != b.nu1) return a.nu1 < b.nu1;
    return a.nu2 < b.nu2;
  });
  return peaks;
}

}  // namespace svt2d
