#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "svt2d/matrix.hpp"

namespace svt2d {

namespace constants {
// CODATA 2018
inline constexpr double kBohrMagneton = 9.2740100783e-24;     // J/T
inline constexpr double kNuclearMagneton = 5.0507837461e-27;  // J/T
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kGaussToTesla = 1e-4;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace constants

struct CarbonCoupling {
  Eigen::Matrix3d hyperfine = Eigen::Matrix3d::Zero();  // rad/s, symmetric
  double nuclear_g = 0.0;  // 13C Zeeman term, 0 = off
};

/// NV ground-state spin system: electron S=1 coupled to the host 14N (I=1)
/// and optionally one 13C (I=1/2). The z axis is the NV axis. All couplings
/// are angular frequencies (rad/s); the magnetic field is in gauss.
struct SpinSystem {
  double zero_field_splitting = constants::kTwoPi * 2.87e9;  // rad/s
  double g_factor = 2.003;
  Eigen::Vector3d field_gauss = Eigen::Vector3d::Zero();
  Eigen::Matrix3d a_14n = Eigen::Matrix3d::Zero();  // rad/s, symmetric
  double n14_nuclear_g = 0.0;   // optional extension, 0 = off
  double n14_quadrupole = 0.0;  // optional extension, rad/s along z, 0 = off
  std::optional<CarbonCoupling> carbon;

  int dimension() const { return carbon ? 18 : 9; }
  void validate() const;
};

struct EseemGrid {
  int n1 = 201;
  int n2 = 201;
  double dt1 = 40e-9;  // s
  double dt2 = 40e-9;  // s
  double t1_start = 0.0;
  double t2_start = 0.0;

  double t1(int i) const { return t1_start + i * dt1; }
  double t2(int j) const { return t2_start + j * dt2; }
  void validate() const;
};

/// Hamiltonian D*Sz^2 + (g mu_B/hbar) B.S + S.A14N.I (+ S.A13C.I) in the
/// product basis electron (m_s = +1, 0, -1) x 14N (m_I = +1, 0, -1)
/// [x 13C (+1/2, -1/2)], dimension 9 or 18, Hermitian. Optional extensions
/// add the nuclear Zeeman terms -g_n mu_N/hbar B.I and an axial 14N
/// quadrupole P*(Iz^2 - I(I+1)/3).
CMatrix build_hamiltonian(const SpinSystem& system);

struct EseemSignal {
  Matrix data;  // n1 x n2, matrix mean subtracted
  std::vector<std::string> warnings;
};

/// Four-pulse stimulated-echo sequence: pi/2 - tau1 - pi/2 - tau2 - pi/2 -
/// tau1 - pi/2, readout of the m_s=0 population. Pulses are ideal,
/// instantaneous pi/2 rotations on the electron {0,-1} subspace; free
/// evolution is exact in the Hamiltonian eigenbasis with each electron
/// manifold's mean energy removed (rotating frame at the resonant carrier),
/// so only nuclear-scale frequencies remain in the signal. The electron
/// starts in |m_s=0>, nuclei maximally mixed. Grid points are independent;
/// jobs > 1 evaluates rows in parallel with results identical to sequential.
EseemSignal eseem_signal(const SpinSystem& system, const EseemGrid& grid,
                         int jobs = 1);

struct CosinePeak {
  double nu1 = 0.0;  // Hz
  double nu2 = 0.0;  // Hz
  double amplitude = 1.0;
  double phase = 0.0;  // rad, applied to the nu1 factor
};

/// M(i,j) = sum_k a_k cos(2 pi nu1_k t1(i) + phi_k) cos(2 pi nu2_k t2(j)).
/// Exact rank <= number of distinct nu1 components. Frequencies at or above
/// the Nyquist band of their axis are rejected.
Matrix synthetic_low_rank_signal(const std::vector<CosinePeak>& peaks,
                                 const EseemGrid& grid);

}  // namespace svt2d
