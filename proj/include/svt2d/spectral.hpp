#pragma once

#include <vector>

#include "svt2d/matrix.hpp"
#include "svt2d/spin.hpp"

namespace svt2d {

/// Frequency-centered 2D spectrum. freq1/freq2 are in Hz, strictly
/// increasing, symmetric about zero up to one bin (exact for odd sizes).
struct Spectrum2D {
  CMatrix values;
  Vector freq1;
  Vector freq2;
  EseemGrid grid;
};

/// Unnormalized forward 2D DFT of a real time-domain matrix, then both axes
/// shifted to the centered layout. The inverse convention carries the
/// 1/(n1*n2) factor, so ||values||_F^2 = n1*n2*||m||_F^2 (Parseval).
Spectrum2D dft2(const Matrix& m, const EseemGrid& grid);

/// Entrywise modulus.
Matrix magnitude(const Spectrum2D& spectrum);

struct Peak {
  double nu1 = 0.0;  // Hz
  double nu2 = 0.0;  // Hz
  double amplitude = 0.0;
};

/// Strict local maxima of the magnitude map (8-neighborhood, missing
/// neighbors at the border count as smaller) with amplitude >=
/// rel_threshold * global max, sorted by descending amplitude.
std::vector<Peak> find_peaks(const Spectrum2D& spectrum, double rel_threshold);

}  // namespace svt2d
