#include "nakajima/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nakajima {

Vec zero_vec(size_t n) { return Vec(n); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec scale(const Vec& a, const CycScalar& c) {
  Vec r = a;
  for (auto& x : r) x *= c;
  return r;
}

Matrix::Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = CycScalar(1, 1L);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, size_t cols) {
  Matrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, size_t rows) {
  Matrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::row(size_t i) const { return Vec(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }

Vec Matrix::col(size_t j) const {
  Vec v(r_);
  for (size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix-vector size mismatch");
  Vec r(r_);
  for (size_t j = 0; j < c_; ++j) {
    if (v[j].is_zero()) continue;
    for (size_t i = 0; i < r_; ++i) r[i].add_mul((*this)(i, j), v[j]);
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix product size mismatch");
  Matrix p(r_, o.c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < c_; ++k) {
      const CycScalar& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.c_; ++j) p(i, j).add_mul(x, o(k, j));
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum size mismatch");
  Matrix s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix difference size mismatch");
  Matrix s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] -= o.a_[i];
  return s;
}

Matrix Matrix::operator*(const CycScalar& c) const {
  Matrix s = *this;
  for (auto& x : s.a_) x *= c;
  return s;
}

bool Matrix::operator==(const Matrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
  if (top.c_ != bottom.c_ && top.r_ && bottom.r_) throw std::invalid_argument("vstack width mismatch");
  size_t c = top.r_ ? top.c_ : bottom.c_;
  Matrix m(top.r_ + bottom.r_, c);
  for (size_t i = 0; i < top.r_; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = top(i, j);
  for (size_t i = 0; i < bottom.r_; ++i)
    for (size_t j = 0; j < c; ++j) m(top.r_ + i, j) = bottom(i, j);
  return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
  if (left.r_ != right.r_ && left.c_ && right.c_) throw std::invalid_argument("hstack height mismatch");
  size_t r = left.c_ ? left.r_ : right.r_;
  Matrix m(r, left.c_ + right.c_);
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < left.c_; ++j) m(i, j) = left(i, j);
    for (size_t j = 0; j < right.c_; ++j) m(i, left.c_ + j) = right(i, j);
  }
  return m;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < r_; ++i) {
    os << "[";
    for (size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

namespace {

// In-place elimination; keeps rows normalized with pivot 1.
void normalize_row(Vec& row, size_t p) {
  if (row[p].is_one()) return;
  CycScalar inv = row[p].inverse();
  for (size_t j = p; j < row.size(); ++j)
    if (!row[j].is_zero()) row[j] *= inv;
}

void eliminate(Vec& target, const Vec& pivot_row, size_t p) {
  if (target[p].is_zero()) return;
  CycScalar f = target[p];
  for (size_t j = p; j < target.size(); ++j)
    if (!pivot_row[j].is_zero()) target[j].sub_mul(f, pivot_row[j]);
}

}  // namespace

RrefResult rref_rows(std::vector<Vec> rows, size_t n) {
  RrefResult res;
  size_t r = 0;
  for (size_t col = 0; col < n && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    normalize_row(rows[r], col);
    for (size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i], rows[r], col);
    res.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  res.rows = std::move(rows);
  return res;
}

size_t rank_of_rows(std::vector<Vec> rows, size_t n) {
  size_t r = 0;
  for (size_t col = 0; col < n && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    normalize_row(rows[r], col);
    for (size_t i = r + 1; i < rows.size(); ++i) eliminate(rows[i], rows[r], col);
    ++r;
  }
  return r;
}

size_t rank(const Matrix& a) {
  // Eliminate along the shorter dimension.
  if (a.rows() <= a.cols()) {
    std::vector<Vec> rows(a.rows());
    for (size_t i = 0; i < a.rows(); ++i) rows[i] = a.row(i);
    return rank_of_rows(std::move(rows), a.cols());
  }
  std::vector<Vec> cols(a.cols());
  for (size_t j = 0; j < a.cols(); ++j) cols[j] = a.col(j);
  return rank_of_rows(std::move(cols), a.rows());
}

std::vector<Vec> kernel(const Matrix& a) {
  std::vector<Vec> rows(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) rows[i] = a.row(i);
  RrefResult rr = rref_rows(std::move(rows), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = CycScalar(1, 1L);
    for (size_t i = 0; i < rr.rows.size(); ++i)
      if (!rr.rows[i][f].is_zero()) v[rr.pivots[i]] = -rr.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve size mismatch");
  std::vector<Vec> rows(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    rows[i] = a.row(i);
    rows[i].push_back(b[i]);
  }
  RrefResult rr = rref_rows(std::move(rows), a.cols() + 1);
  Vec x(a.cols());
  for (size_t i = 0; i < rr.rows.size(); ++i) {
    if (rr.pivots[i] == a.cols()) return std::nullopt;
    x[rr.pivots[i]] = rr.rows[i][a.cols()];
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  size_t n = a.rows();
  std::vector<Vec> rows(n);
  for (size_t i = 0; i < n; ++i) {
    rows[i] = a.row(i);
    rows[i].resize(2 * n);
    rows[i][n + i] = CycScalar(1, 1L);
  }
  RrefResult rr = rref_rows(std::move(rows), 2 * n);
  if (rr.rows.size() < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = rr.rows[i][n + j];
  return inv;
}

CycScalar determinant(Matrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = a.rows();
  std::vector<Vec> rows(n);
  for (size_t i = 0; i < n; ++i) rows[i] = a.row(i);
  CycScalar det(1, 1L);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && rows[piv][col].is_zero()) ++piv;
    if (piv == n) return CycScalar(1);
    if (piv != col) {
      std::swap(rows[piv], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    normalize_row(rows[col], col);
    for (size_t i = col + 1; i < n; ++i) eliminate(rows[i], rows[col], col);
  }
  return det;
}

Subspace Subspace::span(size_t n, const std::vector<Vec>& gens) {
  Subspace s(n);
  RrefResult rr = rref_rows(gens, n);
  s.rows_ = std::move(rr.rows);
  s.piv_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::full(size_t n) {
  Subspace s(n);
  for (size_t i = 0; i < n; ++i) {
    Vec v(n);
    v[i] = CycScalar(1, 1L);
    s.rows_.push_back(std::move(v));
    s.piv_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("subspace ambient mismatch");
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) eliminate(r, rows_[i], piv_[i]);
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.rows_)
    if (!contains(v)) return false;
  return true;
}

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  size_t p = 0;
  while (p < n_ && r[p].is_zero()) ++p;
  if (p == n_) return false;
  normalize_row(r, p);
  for (size_t i = 0; i < rows_.size(); ++i) eliminate(rows_[i], r, p);
  size_t pos = std::lower_bound(piv_.begin(), piv_.end(), p) - piv_.begin();
  rows_.insert(rows_.begin() + pos, std::move(r));
  piv_.insert(piv_.begin() + pos, p);
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.n_ != n_) throw std::invalid_argument("subspace ambient mismatch");
  Subspace s = *this;
  for (const auto& v : o.rows_) s.add(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.n_ != n_) throw std::invalid_argument("subspace ambient mismatch");
  // u = sum c_i u_i lies in o iff sum c_i reduce_o(u_i) = 0.
  if (rows_.empty() || o.rows_.empty()) return Subspace(n_);
  Matrix red(n_, rows_.size());
  for (size_t i = 0; i < rows_.size(); ++i) {
    Vec r = o.reduce(rows_[i]);
    for (size_t k = 0; k < n_; ++k) red(k, i) = r[k];
  }
  std::vector<Vec> gens;
  for (const auto& c : kernel(red)) {
    Vec u(n_);
    for (size_t i = 0; i < rows_.size(); ++i)
      if (!c[i].is_zero())
        for (size_t k = 0; k < n_; ++k) u[k].add_mul(c[i], rows_[i][k]);
    gens.push_back(std::move(u));
  }
  return span(n_, gens);
}

Subspace Subspace::image(const Matrix& a) const {
  if (a.cols() != n_) throw std::invalid_argument("image size mismatch");
  std::vector<Vec> gens;
  for (const auto& v : rows_) gens.push_back(a.apply(v));
  return span(a.rows(), gens);
}

bool Subspace::operator==(const Subspace& o) const {
  if (n_ != o.n_ || piv_ != o.piv_) return false;
  for (size_t i = 0; i < rows_.size(); ++i)
    for (size_t k = 0; k < n_; ++k)
      if (rows_[i][k] != o.rows_[i][k]) return false;
  return true;
}

Subspace preimage(const Matrix& a, const Subspace& target) {
  if (target.ambient() != a.rows()) throw std::invalid_argument("preimage size mismatch");
  Matrix red(a.rows(), a.cols());
  for (size_t j = 0; j < a.cols(); ++j) {
    Vec r = target.reduce(a.col(j));
    for (size_t i = 0; i < a.rows(); ++i) red(i, j) = r[i];
  }
  return kernel_space(red);
}

Subspace kernel_space(const Matrix& a) { return Subspace::span(a.cols(), kernel(a)); }

Subspace column_space(const Matrix& a) {
  std::vector<Vec> cols(a.cols());
  for (size_t j = 0; j < a.cols(); ++j) cols[j] = a.col(j);
  return Subspace::span(a.rows(), cols);
}

}  // namespace nakajima
