#include "kgring/linalg.hpp"

namespace kgring {

FqMatrix FqMatrix::identity(const FieldPtr& field, int n) {
  FqMatrix m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, field->one());
  return m;
}

FqMatrix FqMatrix::mul(const FqMatrix& rhs) const {
  require_same_field(field_, rhs.field_, "FqMatrix::mul");
  if (cols_ != rhs.rows_) throw Error(Errc::invalid_parameter, "FqMatrix::mul: shape mismatch");
  FqMatrix r(field_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      FiniteField::Elem aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        r.set(i, j, field_->add(r.at(i, j), field_->mul(aik, rhs.at(k, j))));
    }
  return r;
}

FqMatrix FqMatrix::add(const FqMatrix& rhs) const {
  require_same_field(field_, rhs.field_, "FqMatrix::add");
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(Errc::invalid_parameter, "FqMatrix::add: shape mismatch");
  FqMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], rhs.a_[i]);
  return r;
}

int FqMatrix::rank() const {
  std::vector<FiniteField::Elem> m = a_;
  const auto& f = *field_;
  auto elt = [&](int i, int j) -> FiniteField::Elem& {
    return m[static_cast<std::size_t>(i) * cols_ + j];
  };
  int rank = 0;
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows_; ++i)
      if (elt(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(elt(rank, j), elt(pivot, j));
    FiniteField::Elem s = f.inv(elt(rank, col));
    for (int j = col; j < cols_; ++j) elt(rank, j) = f.mul(s, elt(rank, j));
    for (int i = 0; i < rows_; ++i) {
      if (i == rank || elt(i, col) == 0) continue;
      FiniteField::Elem c = elt(i, col);
      for (int j = col; j < cols_; ++j)
        elt(i, j) = f.sub(elt(i, j), f.mul(c, elt(rank, j)));
    }
    ++rank;
  }
  return rank;
}

std::optional<std::vector<FiniteField::Elem>> solve_linear(
    const FqMatrix& a, const std::vector<FiniteField::Elem>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(Errc::invalid_parameter, "solve_linear: rhs length mismatch");
  const auto& f = *a.field();
  int rows = a.rows(), cols = a.cols();
  std::vector<FiniteField::Elem> m(static_cast<std::size_t>(rows) * (cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m[static_cast<std::size_t>(i) * (cols + 1) + j] = a.at(i, j);
    m[static_cast<std::size_t>(i) * (cols + 1) + cols] = b[i];
  }
  auto elt = [&](int i, int j) -> FiniteField::Elem& {
    return m[static_cast<std::size_t>(i) * (cols + 1) + j];
  };
  std::vector<int> pivot_col(rows, -1);
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (elt(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j <= cols; ++j) std::swap(elt(rank, j), elt(pivot, j));
    FiniteField::Elem s = f.inv(elt(rank, col));
    for (int j = col; j <= cols; ++j) elt(rank, j) = f.mul(s, elt(rank, j));
    for (int i = 0; i < rows; ++i) {
      if (i == rank || elt(i, col) == 0) continue;
      FiniteField::Elem c = elt(i, col);
      for (int j = col; j <= cols; ++j) elt(i, j) = f.sub(elt(i, j), f.mul(c, elt(rank, j)));
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (elt(i, cols) != 0) return std::nullopt;  // 0 = nonzero
  std::vector<FiniteField::Elem> x(cols, 0);     // free variables stay 0
  for (int i = 0; i < rank; ++i) x[pivot_col[i]] = elt(i, cols);
  return x;
}

}  // namespace kgring
