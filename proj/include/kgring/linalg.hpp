#pragma once

#include <optional>
#include <vector>

#include "kgring/field.hpp"

namespace kgring {

// Dense matrix over a finite field. Plumbing for the right-inverse linear
// solve and for rank/invertibility of cellular-automaton global matrices.
class FqMatrix {
 public:
  FqMatrix(FieldPtr field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static FqMatrix identity(const FieldPtr& field, int n);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  FiniteField::Elem at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, FiniteField::Elem v) { a_[static_cast<std::size_t>(i) * cols_ + j] = v; }

  FqMatrix mul(const FqMatrix& rhs) const;
  FqMatrix add(const FqMatrix& rhs) const;

  // Row-echelon rank via exact Gaussian elimination (first nonzero pivot).
  int rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

  friend bool operator==(const FqMatrix& x, const FqMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<FiniteField::Elem> a_;
};

// One solution of A x = b with free variables set to 0 and first-pivot
// column selection, or nullopt if the system is inconsistent.
std::optional<std::vector<FiniteField::Elem>> solve_linear(const FqMatrix& a,
                                                           const std::vector<FiniteField::Elem>& b);

}  // namespace kgring
