#include "sshh/sparse.hpp"

#include <algorithm>
#include <ostream>

#include "sshh/errors.hpp"

namespace sshh {

SparseOperator::SparseOperator(const FockBasis* basis, std::size_t dim,
                               std::vector<std::int64_t> row_ptr,
                               std::vector<std::int32_t> col,
                               std::vector<std::complex<double>> val, bool hermitian)
    : basis_(basis),
      dim_(dim),
      row_ptr_(std::move(row_ptr)),
      col_(std::move(col)),
      val_(std::move(val)),
      hermitian_(hermitian) {}

Eigen::VectorXcd SparseOperator::matvec(const Eigen::VectorXcd& v) const {
  if (static_cast<std::size_t>(v.size()) != dim_)
    throw ArgumentError("matvec: dimension mismatch");
  Eigen::VectorXcd out(dim_);
  const std::int64_t n = static_cast<std::int64_t>(dim_);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      acc += val_[k] * v[col_[k]];
    out[i] = acc;
  }
  return out;
}

Eigen::VectorXcd SparseOperator::matvec_serial(const Eigen::VectorXcd& v) const {
  if (static_cast<std::size_t>(v.size()) != dim_)
    throw ArgumentError("matvec: dimension mismatch");
  Eigen::VectorXcd out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::complex<double> acc(0.0, 0.0);
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      acc += val_[k] * v[col_[k]];
    out[i] = acc;
  }
  return out;
}

std::complex<double> SparseOperator::entry(std::size_t row, std::size_t col) const {
  const auto begin = col_.begin() + row_ptr_[row];
  const auto end = col_.begin() + row_ptr_[row + 1];
  const auto it = std::lower_bound(begin, end, static_cast<std::int32_t>(col));
  if (it == end || *it != static_cast<std::int32_t>(col)) return {0.0, 0.0};
  return val_[it - col_.begin()];
}

double SparseOperator::hermiticity_violation() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const std::complex<double> mirror = entry(col_[k], i);
      worst = std::max(worst, std::abs(val_[k] - std::conj(mirror)));
    }
  return worst;
}

double SparseOperator::norm_inf() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) row += std::abs(val_[k]);
    worst = std::max(worst, row);
  }
  return worst;
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      out(static_cast<Eigen::Index>(i), col_[k]) = val_[k];
  return out;
}

void SparseOperator::write_coo(std::ostream& out) const {
  out.precision(17);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::int64_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
      out << i << ' ' << col_[k] << ' ' << val_[k].real() << ' ' << val_[k].imag() << '\n';
}

}  // namespace sshh
