#pragma once

#include <cstddef>
#include <vector>

#include "sl4cube/rational.hpp"

namespace sl4cube {

using QVector = std::vector<Rational>;

// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QVector column(std::size_t j) const;
  void set_column(std::size_t j, const QVector& v);

  QMatrix transpose() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
  friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  QVector apply(const QVector& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

QMatrix commutator(const QMatrix& x, const QMatrix& y);
Rational trace(const QMatrix& m);

// Fraction-free (Bareiss) echelon reduction: rank and pivot columns.
std::size_t rank(const QMatrix& m);

// Basis of the right kernel, one vector per column of the result.
QMatrix kernel(const QMatrix& m);

// Columns of `v` lie in the column span of `basis`.
bool in_column_span(const QMatrix& basis, const QMatrix& v);

// Columns side by side.
QMatrix hstack(const QMatrix& a, const QMatrix& b);

// Entrywise sum a_ij b_ij.
Rational frobenius(const QMatrix& a, const QMatrix& b);

// Grows a linearly independent set one vector at a time.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t dim) : dim_(dim) {}

  // True (and stored) iff v is independent of the vectors already held.
  bool add(const QVector& v);
  bool contains(const QVector& v) const;
  std::size_t size() const { return rows_.size(); }

 private:
  QVector reduce(QVector v) const;

  std::size_t dim_;
  std::vector<std::pair<std::size_t, QVector>> rows_;  // (pivot, row with pivot 1)
};

QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& c, const QVector& a);
bool is_zero(const QVector& v);

}  // namespace sl4cube
