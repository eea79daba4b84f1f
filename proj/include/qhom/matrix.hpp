#pragma once
// Dense exact matrices over a Field, column-vector convention: an r x c
// matrix is a linear map k^c -> k^r.  Matrices with zero rows and/or zero
// columns are legal values and compose in the obvious way.
//
// The elimination and multiplication kernels exist in two variants: a plain
// serial reference and an OpenMP row-parallel version.  Exec::Auto picks the
// parallel kernel for large inputs; the serial one is the reference against
// which the parallel one is tested.
#include <qhom/field.hpp>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace qhom {

enum class Exec { Auto, Serial, Parallel };

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, Field f);

  static Matrix zero(int rows, int cols, Field f) { return Matrix(rows, cols, f); }
  static Matrix identity(int n, Field f);
  // Row-major integer initializer, mainly for tests and literals.
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                          Field f = Field::rationals());

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  Scalar& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, const Scalar& v) { at(i, j) = field_.reduce(v); }

  bool is_zero() const;
  bool is_identity() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // dispatches on size, see mul()
  Matrix scaled(const Scalar& c) const;
  Matrix negated() const;

  // Stack side by side / on top of each other.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  Matrix columns(const std::vector<int>& idx) const;
  Matrix rows_subset(const std::vector<int>& idx) const;

  std::string to_string() const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> data_;
};

// Result of Gauss-Jordan elimination: `reduced` is the unique reduced row
// echelon form, `pivot_cols` its pivot columns in increasing order.
struct Rref {
  Matrix reduced;
  std::vector<int> pivot_cols;
  int rank = 0;
};

Matrix mul(const Matrix& a, const Matrix& b, Exec policy);
Rref rref(const Matrix& a, Exec policy = Exec::Auto);
int rank(const Matrix& a, Exec policy = Exec::Auto);

// Columns form a basis of the right kernel {x : a x = 0}.
Matrix kernel_basis(const Matrix& a, Exec policy = Exec::Auto);

// One solution X of A X = B (columns of B are independent right-hand sides),
// or nullopt if the system is inconsistent.  Free variables are set to zero.
std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b,
                                   Exec policy = Exec::Auto);

Scalar det(const Matrix& a);
std::optional<Matrix> inverse(const Matrix& a, Exec policy = Exec::Auto);

// True iff the columns of `sub` lie in the column span of `space`.
bool columns_contained(const Matrix& sub, const Matrix& space, Exec policy = Exec::Auto);

// Basis (as columns) of the column span of `a`.
Matrix column_space_basis(const Matrix& a, Exec policy = Exec::Auto);

}  // namespace qhom
