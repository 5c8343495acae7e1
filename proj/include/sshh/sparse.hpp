#ifndef SSHH_SPARSE_HPP
#define SSHH_SPARSE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace sshh {

class FockBasis;

/// Hermitian many-body operator in CSR form. Both triangles are stored
/// explicitly; columns are sorted within each row so matvec accumulation
/// order is fixed and results are bitwise identical for any thread count.
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(const FockBasis* basis, std::size_t dim,
                 std::vector<std::int64_t> row_ptr, std::vector<std::int32_t> col,
                 std::vector<std::complex<double>> val, bool hermitian);

  std::size_t dimension() const { return dim_; }
  std::size_t nonzeros() const { return val_.size(); }
  bool hermitian() const { return hermitian_; }
  const FockBasis* basis() const { return basis_; }

  /// OpenMP-parallel product over rows.
  Eigen::VectorXcd matvec(const Eigen::VectorXcd& v) const;
  /// Serial reference implementation; must agree bitwise with matvec.
  Eigen::VectorXcd matvec_serial(const Eigen::VectorXcd& v) const;

  std::complex<double> entry(std::size_t row, std::size_t col) const;
  /// max |H(i,j) - conj(H(j,i))| over stored entries.
  double hermiticity_violation() const;
  /// Crude scale for tolerances: max row sum of |values|.
  double norm_inf() const;

  Eigen::MatrixXcd to_dense() const;

  /// Coordinate-list text dump: "row col re im" per line.
  void write_coo(std::ostream& out) const;

  const std::vector<std::int64_t>& row_ptr() const { return row_ptr_; }
  const std::vector<std::int32_t>& cols() const { return col_; }
  const std::vector<std::complex<double>>& values() const { return val_; }

 private:
  const FockBasis* basis_ = nullptr;
  std::size_t dim_ = 0;
  std::vector<std::int64_t> row_ptr_;
  std::vector<std::int32_t> col_;
  std::vector<std::complex<double>> val_;
  bool hermitian_ = true;
};

}  // namespace sshh

#endif
