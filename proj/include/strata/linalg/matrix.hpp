#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strata/linalg/field.hpp"

namespace strata::linalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
/// a += c * b
void axpy(Vec& a, const Scalar& c, const Vec& b);
Vec concat(const Vec& a, const Vec& b);

/// Dense row-major matrix over one exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, std::size_t cols,
                          const std::vector<Vec>& rows);
  static Matrix from_columns(const Field& field, std::size_t rows,
                             const std::vector<Vec>& cols);
  static Matrix from_ints(const Field& field,
                          const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_column(std::size_t c, const Vec& v);
  /// Row-major flattening; inverse of `unflatten`.
  const Vec& entries() const { return data_; }
  static Matrix unflatten(const Field& field, std::size_t rows, std::size_t cols,
                          const Vec& entries);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Throws FieldMismatch when some entry lives in a different field.
  void check_field() const;

  Vec apply(const Vec& v) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Kronecker product.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form. Pivot choice is deterministic: leftmost
/// column, topmost eligible row; pivots normalized to one.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};
Echelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Canonical particular solution of M x = b (free variables zero), or
/// nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

}  // namespace strata::linalg
