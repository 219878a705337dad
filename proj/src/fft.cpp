#include "fft.hpp"

#include <cmath>
#include <cstdint>

namespace svt2d::detail {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  // Bit-reversal permutation.
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

// Bluestein: X_k = chirp(k) * (x.chirp (*) chirp^-1)_k with
// chirp(j) = exp(sign * i * pi * j^2 / n). The quadratic exponent is reduced
// mod 2n to keep the angle argument small.
void bluestein(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> chirp(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t q = (static_cast<std::uint64_t>(j) * j) %
                            (2 * static_cast<std::uint64_t>(n));
    const double angle = sign * kPi * static_cast<double>(q) /
                         static_cast<double>(n);
    chirp[j] = std::complex<double>(std::cos(angle), std::sin(angle));
  }

  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<std::complex<double>> fa(m, {0.0, 0.0});
  std::vector<std::complex<double>> fb(m, {0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) fa[j] = a[j] * chirp[j];
  fb[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) {
    fb[j] = std::conj(chirp[j]);
    fb[m - j] = std::conj(chirp[j]);
  }

  fft_pow2(fa, false);
  fft_pow2(fb, false);
  for (std::size_t j = 0; j < m; ++j) fa[j] *= fb[j];
  fft_pow2(fa, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = fa[k] * scale * chirp[k];
  }
}

}  // namespace

void dft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (is_pow2(n)) {
    fft_pow2(a, inverse);
  } else {
    bluestein(a, inverse);
  }
}

}  // namespace svt2d::detail
