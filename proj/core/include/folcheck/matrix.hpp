#pragma once

#include <initializer_list>
#include <vector>

#include "folcheck/scalar.hpp"

namespace folcheck {

// Dense rational matrix, row-major.
class Matrix {
 public:
  Matrix(int rows, int cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<Scalar>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return data_[index(r, c)]; }
  const Scalar& operator()(int r, int c) const { return data_[index(r, c)]; }

  Matrix transposed() const;
  int rank() const;
  // Basis of the right null space {x : M x = 0}, one vector per free column
  // of the reduced row echelon form.
  std::vector<std::vector<Scalar>> nullSpace() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r * cols_ + c); }

  int rows_;
  int cols_;
  std::vector<Scalar> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rowReduce(Matrix& m);

}  // namespace folcheck
