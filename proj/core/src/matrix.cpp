#include "superform/matrix.hpp"

namespace superform {

double max_abs_difference(const Matrix<Exact>& a, const Matrix<Exact>& b) {
  return max_abs_difference(to_approx(a), to_approx(b));
}

double max_abs_difference(const Matrix<Approx>& a, const Matrix<Approx>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("residual of mismatched shapes");
  }
  Real worst = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Approx d = a(r, c) - b(r, c);
      Real m = d.abs();
      if (m > worst) worst = m;
    }
  }
  return static_cast<double>(worst);
}

}  // namespace superform
