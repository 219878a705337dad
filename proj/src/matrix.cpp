#include "svt2d/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace svt2d {

namespace {

template <typename Mat>
void require_finite_impl(const Mat& a, const char* what) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      bool ok;
      if constexpr (std::is_same_v<typename Mat::Scalar, double>) {
        ok = std::isfinite(a(i, j));
      } else {
        ok = std::isfinite(a(i, j).real()) && std::isfinite(a(i, j).imag());
      }
      if (!ok) {
        throw std::invalid_argument(std::string(what) +
                                    ": non-finite entry at (" +
                                    std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
      }
    }
  }
}

}  // namespace

void require_finite(const Matrix& a, const char* what) {
  require_finite_impl(a, what);
}

void require_finite(const CMatrix& a, const char* what) {
  require_finite_impl(a, what);
}

}  // namespace svt2d
