#include "galoiskit/linalg.hpp"

#include <stdexcept>
#include <span>
#include <utility>

namespace galoiskit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    mpq_class acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = data_[r * cols_ + c];
      if (!a.is_zero() && !v[c].is_zero()) acc += a.raw() * v[c].raw();
    }
    out[r] = Rational(acc);
  }
  return out;
}

namespace {

using IntRow = std::vector<Integer>;

void remove_content(IntRow& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (sgn(x) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (sgn(g) == 0) return;
  for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(std::span<const Rational> row) {
  Integer den = 1;
  for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x.numerator() * (den / x.denominator()));
  remove_content(out);
  return out;
}

}  // namespace

// Fraction-free Gauss-Jordan on integer rows with content removal; rows are
// scaled back to pivot 1 at the end.
std::vector<std::size_t> rref(Matrix& m, Execution exec) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<IntRow> a;
  a.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) a.push_back(integer_row(m.row(r)));

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t sel = lead;
    while (sel < rows && sgn(a[sel][c]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[lead]);
    const IntRow& p = a[lead];
    const long long n_rows = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (exec == Execution::parallel)
    for (long long r = 0; r < n_rows; ++r) {
      const auto ru = static_cast<std::size_t>(r);
      if (ru == lead || sgn(a[ru][c]) == 0) continue;
      IntRow& row = a[ru];
      const Integer f = row[c];
      for (std::size_t k = 0; k < cols; ++k) {
        row[k] *= p[c];
        if (sgn(p[k]) != 0) mpz_submul(row[k].get_mpz_t(), f.get_mpz_t(), p[k].get_mpz_t());
      }
      remove_content(row);
    }
    pivots.push_back(c);
    ++lead;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const Integer piv = r < pivots.size() ? a[r][pivots[r]] : Integer(1);
    for (std::size_t k = 0; k < cols; ++k) m(r, k) = Rational(a[r][k], piv);
  }
  return pivots;
}

namespace reference {

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(lead, k));
    const Rational p = m(lead, c);
    for (std::size_t k = 0; k < m.cols(); ++k) m(lead, k) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Rational f = m(r, c);
      for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

}  // namespace reference

std::size_t rank(Matrix m) { return rref(m, Execution::serial).size(); }

std::vector<Vector> kernel(const Matrix& m, Execution exec) {
  Matrix r = m;
  const auto pivots = rref(r, exec);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return row_space_basis(basis, m.cols(), exec);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref(aug, Execution::serial);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Rational det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c).is_zero()) ++sel;
    if (sel == n) return Rational();
    if (sel != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(sel, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Rational f = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

std::vector<Vector> row_space_basis(std::span<const Vector> vectors, std::size_t dim, Execution exec) {
  if (vectors.empty()) return {};
  Matrix m = Matrix::from_rows(vectors, dim);
  const auto pivots = rref(m, exec);
  std::vector<Vector> out;
  out.reserve(pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row_vector(i));
  return out;
}

std::pair<Vector, Vector> SpanBuilder::reduce(std::span<const Rational> v) const {
  if (v.size() != dim_) throw std::invalid_argument("SpanBuilder: dimension mismatch");
  Vector w(v.begin(), v.end());
  Vector used(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = w[pivots_[k]];
    if (f.is_zero()) continue;
    used[k] = f;
    const Vector& row = rows_[k];
    for (std::size_t i = pivots_[k]; i < dim_; ++i) {
      if (!row[i].is_zero()) w[i] -= f * row[i];
    }
  }
  return {std::move(w), std::move(used)};
}

namespace {

Vector combine(const Vector& used, const std::vector<Vector>& combos) {
  Vector coeffs(used.size());
  for (std::size_t k = 0; k < used.size(); ++k) {
    if (used[k].is_zero()) continue;
    for (std::size_t j = 0; j < combos[k].size(); ++j) {
      if (!combos[k][j].is_zero()) coeffs[j] += used[k] * combos[k][j];
    }
  }
  return coeffs;
}

bool all_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace

std::optional<Vector> SpanBuilder::express(std::span<const Rational> v) const {
  auto [w, used] = reduce(v);
  if (!all_zero(w)) return std::nullopt;
  return combine(used, combos_);
}

std::optional<Vector> SpanBuilder::insert(std::span<const Rational> v) {
  auto [w, used] = reduce(v);
  if (all_zero(w)) return combine(used, combos_);
  std::size_t pivot = 0;
  while (w[pivot].is_zero()) ++pivot;
  const Rational inv = w[pivot].inverse();
  for (auto& x : w) x *= inv;
  const std::size_t n = rows_.size();
  Vector combo(n + 1);
  combo[n] = inv;
  for (std::size_t k = 0; k < n; ++k) {
    if (used[k].is_zero()) continue;
    for (std::size_t j = 0; j < combos_[k].size(); ++j) combo[j] -= inv * used[k] * combos_[k][j];
  }
  for (auto& c : combos_) c.resize(n + 1);
  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  combos_.push_back(std::move(combo));
  return std::nullopt;
}

}  // namespace galoiskit
