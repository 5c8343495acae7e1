#include "sshh/dense.hpp"

#include <complex>
#include <vector>

#include "sshh/errors.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace sshh {

EigenSystem eigh(const Eigen::MatrixXcd& matrix, bool compute_vectors) {
  const lapack_int n = static_cast<lapack_int>(matrix.rows());
  EigenSystem sys;
  sys.values.resize(n);
  Eigen::MatrixXcd work = matrix;  // zheev overwrites with eigenvectors
  const lapack_int info =
      LAPACKE_zheev(LAPACK_COL_MAJOR, compute_vectors ? 'V' : 'N', 'U', n,
                    work.data(), n, sys.values.data());
  if (info != 0) throw NumericError("zheev failed with info=" + std::to_string(info));
  if (compute_vectors) sys.vectors = std::move(work);
  return sys;
}

Eigen::VectorXd eigvalsh(const Eigen::MatrixXcd& matrix) {
  return eigh(matrix, false).values;
}

void eigh_tridiagonal(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag,
                      Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  const lapack_int n = static_cast<lapack_int>(diag.size());
  values = diag;
  Eigen::VectorXd e = offdiag;
  vectors.resize(n, n);
  const lapack_int info = LAPACKE_dstev(LAPACK_COL_MAJOR, 'V', n, values.data(),
                                        e.data(), vectors.data(), n);
  if (info != 0) throw NumericError("dstev failed with info=" + std::to_string(info));
}

}  // namespace sshh
