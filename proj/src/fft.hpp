#pragma once

#include <complex>
#include <vector>

namespace svt2d::detail {

/// In-place DFT of arbitrary length n >= 1. Forward uses exp(-2*pi*i*jk/n)
/// and no scale factor; inverse uses the conjugate kernel and also no scale
/// (callers apply 1/n where their convention needs it). Powers of two run
/// radix-2 Cooley-Tukey; other lengths go through Bluestein's chirp-z
/// reduction to a power-of-two convolution.
void dft_inplace(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace svt2d::detail
