#pragma once
// Dense linear algebra over a Field. Vectors are rows; a matrix with r rows
// and c columns is stored row-major.

#include <optional>
#include <span>
#include <vector>

#include "tc/field.hpp"

namespace tc {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const Elem> v);
  void resize_cols(std::size_t cols);  // only valid while rows() == 0
  Vec row_vec(std::size_t i) const { auto r = row(i); return {r.begin(), r.end()}; }

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

namespace la {

// dst += c * src, using the SIMD row kernel on prime fields.
void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c);
void scale(const Field& f, std::span<Elem> v, Elem c);

// Reduced row echelon form with zero rows dropped; pivots[i] is the pivot
// column of row i. Pivot entries are 1.
struct Echelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon echelon(const Field& f, Matrix m);
// Reduces v modulo the row space of e in place; v is zero iff it was in the span.
void reduce(const Field& f, const Echelon& e, std::span<Elem> v);
bool in_span(const Field& f, const Echelon& e, std::span<const Elem> v);
// Coordinates of v in the echelon basis, or nullopt if v is outside the span.
std::optional<Vec> coordinates(const Field& f, const Echelon& e, std::span<const Elem> v);

std::size_t rank(const Field& f, const Matrix& m);
// Basis of {x : A x = 0} as rows (length A.cols()).
Matrix nullspace(const Field& f, const Matrix& a);
// Basis of {y : y A = 0} as rows (length A.rows()).
Matrix left_nullspace(const Field& f, const Matrix& a);
// Some x with A x = b, or nullopt.
std::optional<Vec> solve(const Field& f, const Matrix& a, std::span<const Elem> b);

Matrix transpose(const Matrix& a);
Matrix mul(const Field& f, const Matrix& a, const Matrix& b);
Matrix add(const Field& f, const Matrix& a, const Matrix& b);
Matrix sub(const Field& f, const Matrix& a, const Matrix& b);
Matrix scale(const Field& f, const Matrix& a, Elem c);
Vec vec_mul(const Field& f, std::span<const Elem> v, const Matrix& a);  // v A
bool is_zero(std::span<const Elem> v);
bool is_zero(const Matrix& m);

}  // namespace la
}  // namespace tc
