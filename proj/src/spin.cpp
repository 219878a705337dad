#include "svt2d/spin.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"

namespace svt2d {

namespace {

using constants::kTwoPi;
using Complex = std::complex<double>;

// Spin matrices in the basis m = s, s-1, ..., -s.
struct SpinOps {
  CMatrix x, y, z;
};

SpinOps spin_ops(double s) {
  const int dim = static_cast<int>(std::lround(2 * s + 1));
  CMatrix sp = CMatrix::Zero(dim, dim);  // raising operator
  for (int k = 1; k < dim; ++k) {
    const double m = s - k;  // (S+)|s,m> = sqrt(s(s+1) - m(m+1)) |s,m+1>
    sp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  const CMatrix sm = sp.adjoint();
  SpinOps ops;
  ops.x = 0.5 * (sp + sm);
  ops.y = Complex(0.0, -0.5) * (sp - sm);
  ops.z = CMatrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) ops.z(k, k) = s - k;
  return ops;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

void require_symmetric(const Eigen::Matrix3d& a, const char* what) {
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw std::invalid_argument(std::string(what) +
                                ": hyperfine tensor must be symmetric");
  }
}

// Couples the electron to one nucleus: sum_ab A(a,b) * Se_a x In_b, where the
// operators are already embedded in the full product space.
CMatrix hyperfine_term(const Eigen::Matrix3d& a,
                       const std::array<CMatrix, 3>& se,
                       const std::array<CMatrix, 3>& in) {
  CMatrix h = CMatrix::Zero(se[0].rows(), se[0].cols());
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      if (a(p, q) != 0.0) h += a(p, q) * (se[p] * in[q]);
    }
  }
  return h;
}

}  // namespace

void SpinSystem::validate() const {
  if (!(zero_field_splitting > 0.0)) {
    throw std::invalid_argument("spin system: D must be positive");
  }
  if (!(g_factor > 0.0)) {
    throw std::invalid_argument("spin system: g factor must be positive");
  }
  if (!field_gauss.allFinite()) {
    throw std::invalid_argument("spin system: field must be finite");
  }
  require_symmetric(a_14n, "14N");
  if (carbon) require_symmetric(carbon->hyperfine, "13C");
}

void EseemGrid::validate() const {
  if (n1 < 2 || n2 < 2) {
    throw std::invalid_argument("grid: n1 and n2 must be at least 2");
  }
  if (!(dt1 > 0.0) || !(dt2 > 0.0)) {
    throw std::invalid_argument("grid: dwell times must be positive");
  }
}

CMatrix build_hamiltonian(const SpinSystem& system) {
  system.validate();

  const SpinOps e = spin_ops(1.0);
  const SpinOps n14 = spin_ops(1.0);
  const int dim_c = system.carbon ? 2 : 1;
  const CMatrix id_e = CMatrix::Identity(3, 3);
  const CMatrix id_n = CMatrix::Identity(3, 3);
  const CMatrix id_c = CMatrix::Identity(dim_c, dim_c);

  auto embed_e = [&](const CMatrix& op) { return kron(kron(op, id_n), id_c); };
  auto embed_n = [&](const CMatrix& op) { return kron(kron(id_e, op), id_c); };

  const std::array<CMatrix, 3> se = {embed_e(e.x), embed_e(e.y), embed_e(e.z)};
  const std::array<CMatrix, 3> in = {embed_n(n14.x), embed_n(n14.y),
                                     embed_n(n14.z)};

  const Eigen::Vector3d b_tesla = system.field_gauss * constants::kGaussToTesla;
  const double gamma_e =
      system.g_factor * constants::kBohrMagneton / constants::kHbar;

  CMatrix h = system.zero_field_splitting * (se[2] * se[2]);
  for (int p = 0; p < 3; ++p) {
    if (b_tesla(p) != 0.0) h += gamma_e * b_tesla(p) * se[p];
  }
  h += hyperfine_term(system.a_14n, se, in);

  if (system.n14_nuclear_g != 0.0) {
    const double gamma_n = system.n14_nuclear_g * constants::kNuclearMagneton /
                           constants::kHbar;
    for (int p = 0; p < 3; ++p) {
      if (b_tesla(p) != 0.0) h -= gamma_n * b_tesla(p) * in[p];
    }
  }
  if (system.n14_quadrupole != 0.0) {
    // Axial quadrupole along the NV axis: P * (Iz^2 - I(I+1)/3).
    h += system.n14_quadrupole *
         (in[2] * in[2] - (2.0 / 3.0) * CMatrix::Identity(h.rows(), h.cols()));
  }

  if (system.carbon) {
    const SpinOps c13 = spin_ops(0.5);
    auto embed_c = [&](const CMatrix& op) {
      return kron(kron(id_e, id_n), op);
    };
    const std::array<CMatrix, 3> ic = {embed_c(c13.x), embed_c(c13.y),
                                       embed_c(c13.z)};
    h += hyperfine_term(system.carbon->hyperfine, se, ic);
    if (system.carbon->nuclear_g != 0.0) {
      const double gamma_c = system.carbon->nuclear_g *
                             constants::kNuclearMagneton / constants::kHbar;
      for (int p = 0; p < 3; ++p) {
        if (b_tesla(p) != 0.0) h -= gamma_c * b_tesla(p) * ic[p];
      }
    }
  }

  return h;
}

EseemSignal eseem_signal(const SpinSystem& system, const EseemGrid& grid,
                         int jobs) {
  grid.validate();
  const CMatrix h = build_hamiltonian(system);
  const int dim = static_cast<int>(h.rows());
  const int dim_nuc = dim / 3;

  Eigen::SelfAdjointEigenSolver<CMatrix> eig(h);
  const CMatrix& q = eig.eigenvectors();
  const Vector& energy = eig.eigenvalues();

  // Assign each eigenstate to the electron manifold (+1, 0, -1) in which its
  // product-basis weight is largest. Electron block index 0 is m_s=+1, 1 is
  // m_s=0, 2 is m_s=-1.
  std::vector<int> manifold(dim);
  for (int k = 0; k < dim; ++k) {
    double w[3] = {0.0, 0.0, 0.0};
    for (int idx = 0; idx < dim; ++idx) {
      w[idx / dim_nuc] += std::norm(q(idx, k));
    }
    manifold[k] = w[0] >= w[1] && w[0] >= w[2] ? 0 : (w[1] >= w[2] ? 1 : 2);
  }

  // Rotating-frame idealization: remove each electron manifold's mean energy,
  // leaving intra-manifold (nuclear) splittings and hyperfine-scale carrier
  // detunings. Pulses are frame-local ideal rotations, so only these shifted
  // energies enter the free evolutions.
  Vector shifted = energy;
  for (int m = 0; m < 3; ++m) {
    double sum = 0.0;
    int count = 0;
    for (int k = 0; k < dim; ++k) {
      if (manifold[k] == m) {
        sum += energy(k);
        ++count;
      }
    }
    if (count == 0) continue;
    const double mean = sum / count;
    for (int k = 0; k < dim; ++k) {
      if (manifold[k] == m) shifted(k) -= mean;
    }
  }

  // Ideal pi/2 pulse on the electron {m_s=0, m_s=-1} subspace.
  CMatrix pulse_e = CMatrix::Identity(3, 3);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  pulse_e(1, 1) = inv_sqrt2;
  pulse_e(2, 2) = inv_sqrt2;
  pulse_e(1, 2) = Complex(0.0, -inv_sqrt2);
  pulse_e(2, 1) = Complex(0.0, -inv_sqrt2);
  const CMatrix pulse =
      kron(pulse_e, CMatrix::Identity(dim_nuc, dim_nuc));

  const CMatrix g_eig = q.adjoint() * pulse * q;  // pulse in the eigenbasis
  // Rows of Q for the m_s=0 product block: readout projector and the
  // maximally mixed initial nuclear state both live there.
  const CMatrix q0 = q.block(dim_nuc, 0, dim_nuc, dim);
  const CMatrix q0_adj = q0.adjoint();

  EseemSignal out;
  out.data.resize(grid.n1, grid.n2);

  // Nyquist check against the largest frequency the sequence can contain
  // (max spread of the shifted energies over the driven manifolds).
  {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (int k = 0; k < dim; ++k) {
      if (manifold[k] == 0) continue;  // m_s=+1 is parked
      if (first) {
        lo = hi = shifted(k);
        first = false;
      } else {
        lo = std::min(lo, shifted(k));
        hi = std::max(hi, shifted(k));
      }
    }
    const double f_max = (hi - lo) / kTwoPi;
    const double nyquist = std::min(0.5 / grid.dt1, 0.5 / grid.dt2);
    if (f_max > nyquist) {
      out.warnings.push_back(
          "grid too coarse: largest simulated frequency " +
          std::to_string(f_max / 1e6) + " MHz exceeds the Nyquist band " +
          std::to_string(nyquist / 1e6) + " MHz");
    }
  }

  auto phase_vector = [&](double t) {
    Eigen::VectorXcd ph(dim);
    for (int k = 0; k < dim; ++k) {
      const double a = -shifted(k) * t;
      ph(k) = Complex(std::cos(a), std::sin(a));
    }
    return ph;
  };

  // Signal(i,j) = (1/n_nuc) sum_{r,k in m_s=0 block} |U(r,k)|^2 with
  // U = P E(t1) P E(t2) P E(t1) P. The two t1 propagators are equal, so
  // C(i) = P E(t1) P is computed once per row.
  detail::parallel_for(grid.n1, jobs, [&](std::int64_t i) {
    const Eigen::VectorXcd ph1 = phase_vector(grid.t1(static_cast<int>(i)));
    const CMatrix c = g_eig * ph1.asDiagonal() * g_eig;
    CMatrix u(dim, dim);
    for (int j = 0; j < grid.n2; ++j) {
      const Eigen::VectorXcd ph2 = phase_vector(grid.t2(j));
      u.noalias() = c * ph2.asDiagonal() * c;
      const CMatrix y = q0 * u * q0_adj;
      out.data(i, j) = y.squaredNorm() / static_cast<double>(dim_nuc);
    }
  });

  out.data.array() -= out.data.mean();
  return out;
}

Matrix synthetic_low_rank_signal(const std::vector<CosinePeak>& peaks,
                                 const EseemGrid& grid) {
  grid.validate();
  if (peaks.empty()) {
    throw std::invalid_argument("synthetic signal: at least one peak required");
  }
  const double nyq1 = 0.5 / grid.dt1;
  const double nyq2 = 0.5 / grid.dt2;
  for (const CosinePeak& p : peaks) {
    if (std::abs(p.nu1) >= nyq1 || std::abs(p.nu2) >= nyq2) {
      throw std::invalid_argument(
          "synthetic signal: peak frequency at or above the Nyquist band");
    }
  }

  Matrix m = Matrix::Zero(grid.n1, grid.n2);
  Vector u(grid.n1), v(grid.n2);
  for (const CosinePeak& p : peaks) {
    for (int i = 0; i < grid.n1; ++i) {
      u(i) = p.amplitude * std::cos(kTwoPi * p.nu1 * grid.t1(i) + p.phase);
    }
    for (int j = 0; j < grid.n2; ++j) {
      v(j) = std::cos(kTwoPi * p.nu2 * grid.t2(j));
    }
    m.noalias() += u * v.transpose();
  }
  return m;
}

}  // namespace svt2d
