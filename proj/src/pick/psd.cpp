#include "pickwick/pick/psd.hpp"

#include <string>

#include "pickwick/error.hpp"

namespace pickwick {

PsdVerdict psd_check(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::NotHermitian, "matrix is not square");
  PsdVerdict v;
  if (m.size() == 0) {
    v.is_psd = true;
    v.tolerance_used = tol;
    return v;
  }
  v.tolerance_used = tol * (1.0 + linalg::spectral_norm(m));
  const double defect = linalg::hermitian_defect(m);
  if (defect > v.tolerance_used)
    throw Error(ErrorCode::NotHermitian, "Hermitian defect " + std::to_string(defect) + " exceeds tolerance");
  v.min_eigenvalue = linalg::hermitian_eigenvalues(m)(0);
  v.is_psd = v.min_eigenvalue >= -v.tolerance_used;
  return v;
}

}  // namespace pickwick
