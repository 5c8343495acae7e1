#ifndef SSHH_DENSE_HPP
#define SSHH_DENSE_HPP

#include <Eigen/Dense>

namespace sshh {

struct EigenSystem {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // columns, empty when not requested
};

/// Hermitian eigendecomposition (LAPACK zheev behind the scenes).
EigenSystem eigh(const Eigen::MatrixXcd& matrix, bool compute_vectors = true);
Eigen::VectorXd eigvalsh(const Eigen::MatrixXcd& matrix);

/// Real symmetric tridiagonal eigendecomposition (for Lanczos inner systems).
void eigh_tridiagonal(const Eigen::VectorXd& diag, const Eigen::VectorXd& offdiag,
                      Eigen::VectorXd& values, Eigen::MatrixXd& vectors);

}  // namespace sshh

#endif
