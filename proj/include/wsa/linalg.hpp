#pragma once

#include <optional>
#include <vector>

#include "wsa/scalar.hpp"

namespace wsa {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix from_columns(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Vec row(int i) const;
  Vec col(int j) const;

  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(Matrix& m);
int rank(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column (free entry 1).
std::vector<Vec> nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some solution of m x = b, or nullopt.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& s);
bool vec_is_zero(const Vec& a);
Scalar dot(const Vec& a, const Vec& b);
Vec unit_vec(int n, int i);

}  // namespace wsa
