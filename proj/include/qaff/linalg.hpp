#pragma once
/*
 * Dense exact linear algebra over Q(mu).  Row reduction is fraction-free:
 * rows are scaled to integer-polynomial form and kept primitive, pivots are
 * chosen by lowest polynomial degree, and cross-multiplication elimination
 * avoids intermediate fraction blowup.  Final reduced rows are normalized to
 * leading coefficient 1 so reduced forms are canonical.
 */

#include <vector>

#include "qaff/scalar.hpp"

namespace qaff {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scale(const Scalar& s) const;
  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
  }
  bool operator!=(const Matrix& other) const { return !(*this == other); }
  bool isZero() const;
  bool isIdentity() const;

  static Matrix kron(const Matrix& a, const Matrix& b);
  Matrix transpose() const;
  Vec apply(const Vec& x) const;  // matrix * column vector

  int rank() const;
  std::vector<Vec> kernelBasis() const;  // right nullspace, canonical basis
  Matrix inverse() const;                // InvariantViolation if singular
 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

// Reduced row echelon form of a list of row vectors, with a prescribed column
// processing order (pivots are sought along colOrder; within a column the
// lowest-degree candidate wins).  Rows come out pivot-normalized to 1 and
// sorted by pivot position in colOrder.
struct Rref {
  std::vector<Vec> rows;
  std::vector<int> pivotCols;  // pivot column index (into the vector) per row
  int rank() const { return static_cast<int>(rows.size()); }
};
Rref rowReduce(std::vector<Vec> rows, const std::vector<int>& colOrder);
Rref rowReduce(std::vector<Vec> rows);  // natural column order

// Incremental span with membership queries: vectors of a fixed length are
// added as rows and kept in reduced form.
class Span {
 public:
  explicit Span(size_t length) : length_(length) {}
  size_t length() const { return length_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  // Returns true if the vector enlarged the span (i.e. was not a member).
  bool add(Vec v);
  // Reduces v against the span; the remainder is zero iff v is a member.
  Vec residue(Vec v) const;
  bool contains(const Vec& v) const;

 private:
  size_t length_;
  std::vector<Vec> rows_;      // reduced, pivot-normalized
  std::vector<int> pivotCols_;
};

}  // namespace qaff
