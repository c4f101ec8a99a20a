#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "galoiskit/rational.hpp"

namespace galoiskit {

using Vector = std::vector<Rational>;

enum class Execution { serial, parallel };

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] Vector row_vector(std::size_t r) const;

  [[nodiscard]] Vector apply(std::span<const Rational> v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduces m in place to reduced row-echelon form with leftmost pivots and
/// returns the pivot columns. The elimination of each pivot column runs over
/// rows with OpenMP when exec is parallel.
std::vector<std::size_t> rref(Matrix& m, Execution exec = Execution::parallel);

namespace reference {
/// Textbook serial Gauss-Jordan elimination, kept as the oracle for rref.
std::vector<std::size_t> rref(Matrix& m);
}  // namespace reference

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}, in canonical RREF order.
std::vector<Vector> kernel(const Matrix& m, Execution exec = Execution::parallel);

/// Some x with m x = b, or nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

Rational determinant(Matrix m);

/// Canonical RREF basis of the row span of the given vectors (zero rows dropped).
std::vector<Vector> row_space_basis(std::span<const Vector> vectors, std::size_t dim,
                                    Execution exec = Execution::parallel);

/// Incrementally grows a linearly independent family and expresses new
/// vectors in terms of the accepted ones.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// If v lies in the span of the accepted vectors, returns the coefficients
  /// c with v = sum c_i u_i and leaves the family unchanged; otherwise
  /// accepts v and returns nothing.
  std::optional<Vector> insert(std::span<const Rational> v);
  /// Same as insert without accepting v.
  [[nodiscard]] std::optional<Vector> express(std::span<const Rational> v) const;

  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }

 private:
  // Reduces v; returns the residual and the combination (over accepted
  // vectors) that was subtracted.
  std::pair<Vector, Vector> reduce(std::span<const Rational> v) const;

  std::size_t dim_;
  std::vector<Vector> rows_;    // reduced rows, pivot entry 1
  std::vector<std::size_t> pivots_;
  std::vector<Vector> combos_;  // rows_[k] = sum combos_[k][j] * accepted_j
};

}  // namespace galoiskit
