#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nakajima/cyclotomic.hpp"

namespace nakajima {

using Vec = std::vector<CycScalar>;

Vec zero_vec(size_t n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const CycScalar& c);

// Dense matrix over Q(zeta_m).
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols);
  static Matrix identity(size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, size_t cols);
  static Matrix from_columns(const std::vector<Vec>& cols, size_t rows);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  CycScalar& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const CycScalar& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  Vec row(size_t i) const;
  Vec col(size_t j) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const CycScalar& c) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Stack vertically / horizontally.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);
  static Matrix hstack(const Matrix& left, const Matrix& right);

  std::string to_string() const;

 private:
  size_t r_ = 0, c_ = 0;
  std::vector<CycScalar> a_;
};

struct RrefResult {
  std::vector<Vec> rows;        // nonzero rows of the reduced echelon form
  std::vector<size_t> pivots;   // pivot column of each row
};

// Row-reduce a list of vectors of length n.
RrefResult rref_rows(std::vector<Vec> rows, size_t n);
size_t rank(const Matrix& a);
size_t rank_of_rows(std::vector<Vec> rows, size_t n);
// Basis of {v : a v = 0}.
std::vector<Vec> kernel(const Matrix& a);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& a);
CycScalar determinant(Matrix a);

// Subspace of K^n stored as a reduced row echelon basis (hence canonical).
class Subspace {
 public:
  explicit Subspace(size_t n = 0) : n_(n) {}
  static Subspace span(size_t n, const std::vector<Vec>& gens);
  static Subspace full(size_t n);

  size_t ambient() const { return n_; }
  size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<size_t>& pivots() const { return piv_; }

  // Residue of v after eliminating the pivot coordinates; zero iff v in span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;
  // Adds v; returns true if the dimension grew.
  bool add(const Vec& v);

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // Image of the subspace under a (a.cols() == ambient()).
  Subspace image(const Matrix& a) const;

  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  size_t n_;
  std::vector<Vec> rows_;
  std::vector<size_t> piv_;
};

// {v : a v in target}
Subspace preimage(const Matrix& a, const Subspace& target);
// Kernel as a subspace.
Subspace kernel_space(const Matrix& a);
// Column space.
Subspace column_space(const Matrix& a);

}  // namespace nakajima
