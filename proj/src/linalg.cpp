#include "tc/linalg.hpp"

#include <algorithm>

#include "tc/error.hpp"
#include "tc/simd.hpp"

namespace tc {

void Matrix::append_row(std::span<const Elem> v) {
  if (v.size() != cols_) throw Error(ErrorCode::invariant, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::resize_cols(std::size_t cols) {
  if (rows_ != 0) throw Error(ErrorCode::invariant, "resize_cols on a non-empty matrix");
  cols_ = cols;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

namespace la {

void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c) {
  if (c == 0) return;
  if (f.is_prime_field()) {
    simd::axpy_kernel()(dst.data(), src.data(), c, f.characteristic(), dst.size());
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (src[i] != 0) dst[i] = f.add(dst[i], f.mul(c, src[i]));
  }
}

void scale(const Field& f, std::span<Elem> v, Elem c) {
  if (f.is_prime_field()) {
    simd::scale_mod(v.data(), c, f.characteristic(), v.size());
    return;
  }
  for (auto& x : v) x = f.mul(x, c);
}

Echelon echelon(const Field& f, Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      auto a = m.row(piv), b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    scale(f, m.row(r), f.inv(m(r, c)));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && m(i, c) != 0) axpy(f, m.row(i), m.row(r), f.neg(m(i, c)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(0, cols);
  for (std::size_t i = 0; i < r; ++i) out.append_row(m.row(i));
  return {std::move(out), std::move(pivots)};
}

void reduce(const Field& f, const Echelon& e, std::span<Elem> v) {
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    Elem c = v[e.pivots[i]];
    if (c != 0) axpy(f, v, e.rows.row(i), f.neg(c));
  }
}

bool in_span(const Field& f, const Echelon& e, std::span<const Elem> v) {
  Vec w(v.begin(), v.end());
  reduce(f, e, w);
  return is_zero(w);
}

std::optional<Vec> coordinates(const Field& f, const Echelon& e, std::span<const Elem> v) {
  Vec coords(e.pivots.size());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) coords[i] = v[e.pivots[i]];
  if (!in_span(f, e, v)) return std::nullopt;
  return coords;
}

std::size_t rank(const Field& f, const Matrix& m) { return echelon(f, m).rank(); }

Matrix nullspace(const Field& f, const Matrix& a) {
  const std::size_t n = a.cols();
  Echelon e = echelon(f, a);
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix out(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.rows(i, free));
    out.append_row(x);
  }
  return out;
}

Matrix left_nullspace(const Field& f, const Matrix& a) { return nullspace(f, transpose(a)); }

std::optional<Vec> solve(const Field& f, const Matrix& a, std::span<const Elem> b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = echelon(f, std::move(aug));
  Vec x(a.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows(i, a.cols());
  }
  return x;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

Matrix mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::invariant, "matrix shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0) axpy(f, c.row(i), b.row(k), a(i, k));
  return c;
}

Matrix add(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(f, c.row(i), b.row(i), f.one());
  return c;
}

Matrix sub(const Field& f, const Matrix& a, const Matrix& b) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) axpy(f, c.row(i), b.row(i), f.neg(f.one()));
  return c;
}

Matrix scale(const Field& f, const Matrix& a, Elem c) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.rows(); ++i) scale(f, m.row(i), c);
  return m;
}

Vec vec_mul(const Field& f, std::span<const Elem> v, const Matrix& a) {
  Vec out(a.cols(), 0);
  for (std::size_t k = 0; k < a.rows(); ++k)
    if (v[k] != 0) axpy(f, out, a.row(k), v[k]);
  return out;
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}

bool is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!is_zero(m.row(i))) return false;
  return true;
}

}  // namespace la
}  // namespace tc
