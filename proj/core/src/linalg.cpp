#include "sl4cube/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sl4cube {

namespace {

// Integer matrix with a common denominator: m = num / den.
struct ScaledInt {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> num;
  Integer den = 1;
};

ScaledInt to_scaled(const QMatrix& m) {
  ScaledInt s;
  s.rows = m.rows();
  s.cols = m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), d.get_mpz_t());
    }
  s.num.resize(s.rows * s.cols);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (sgn(q) == 0) continue;
      Integer& out = s.num[i * s.cols + j];
      mpz_divexact(out.get_mpz_t(), s.den.get_mpz_t(), q.get_den_mpz_t());
      out *= q.get_num();
    }
  return s;
}

// Rows scaled to integers, for fraction-free elimination.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer& d = m(i, j).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& q = m(i, j);
      if (sgn(q) == 0) continue;
      mpz_divexact(rows[i][j].get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      rows[i][j] *= q.get_num();
    }
  }
  return rows;
}

// Bareiss elimination to row echelon form. Returns pivot columns.
std::vector<std::size_t> bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t m = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  Integer t;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && sgn(a[p][c]) == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const bool lead_zero = sgn(a[i][c]) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a_ij <- (piv * a_ij - a_ic * a_rj) / prev, exact
        t = piv * a[i][j];
        if (!lead_zero) t -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    m.set_column(j, cols[j]);
  }
  return m;
}

QVector QMatrix::column(std::size_t j) const {
  QVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void QMatrix::set_column(std::size_t j, const QVector& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t QMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : a_)
    if (sgn(x) != 0) ++n;
  return n;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix +: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (sgn(o.a_[k]) != 0) a_[k] += o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("QMatrix -: shape mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (sgn(o.a_[k]) != 0) a_[k] -= o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (auto& x : a_)
    if (sgn(x) != 0) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix *: shape mismatch");
  const ScaledInt sa = to_scaled(a);
  const ScaledInt sb = to_scaled(b);
  const std::size_t n = a.rows_, k = a.cols_, m = b.cols_;
  std::vector<Integer> acc(m);
  QMatrix c(n, m);
  const Rational scale(1, Integer(sa.den * sb.den));
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& x : acc) x = 0;
    for (std::size_t l = 0; l < k; ++l) {
      const Integer& x = sa.num[i * k + l];
      if (sgn(x) == 0) continue;
      const Integer* row = &sb.num[l * m];
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(row[j]) != 0) mpz_addmul(acc[j].get_mpz_t(), x.get_mpz_t(), row[j].get_mpz_t());
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (sgn(acc[j]) == 0) continue;
      Rational& out = c(i, j);
      out = Rational(acc[j]);
      out *= scale;
    }
  }
  return c;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: length mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

QMatrix commutator(const QMatrix& x, const QMatrix& y) { return x * y - y * x; }

Rational trace(const QMatrix& m) {
  Rational t;
  for (std::size_t i = 0; i < m.rows() && i < m.cols(); ++i) t += m(i, i);
  return t;
}

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter dimension.
  const QMatrix& src = m;
  if (m.rows() > m.cols()) {
    auto rows = integer_rows(m.transpose());
    return bareiss(rows, m.rows()).size();
  }
  auto rows = integer_rows(src);
  return bareiss(rows, m.cols()).size();
}

QMatrix kernel(const QMatrix& m) {
  const std::size_t n = m.cols();
  auto a = integer_rows(m);
  const auto pivots = bareiss(a, n);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVector x(n);
    x[f] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational s;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (sgn(a[k][j]) != 0 && sgn(x[j]) != 0) s += Rational(a[k][j]) * x[j];
      x[pc] = -s / Rational(a[k][pc]);
    }
    basis.push_back(std::move(x));
  }
  return QMatrix::from_columns(basis, n);
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  QMatrix c(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

bool in_column_span(const QMatrix& basis, const QMatrix& v) {
  return rank(hstack(basis, v)) == rank(basis);
}

Rational frobenius(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("frobenius: shape mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(b(i, j)) != 0) s += a(i, j) * b(i, j);
  return s;
}

QVector IncrementalBasis::reduce(QVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("IncrementalBasis: length mismatch");
  for (const auto& [piv, row] : rows_) {
    if (sgn(v[piv]) == 0) continue;
    const Rational f = v[piv];
    for (std::size_t j = 0; j < dim_; ++j)
      if (sgn(row[j]) != 0) v[j] -= f * row[j];
  }
  return v;
}

bool IncrementalBasis::add(const QVector& v) {
  QVector r = reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && sgn(r[piv]) == 0) ++piv;
  if (piv == dim_) return false;
  const Rational inv = 1 / r[piv];
  for (auto& x : r) x *= inv;
  rows_.emplace_back(piv, std::move(r));
  return true;
}

bool IncrementalBasis::contains(const QVector& v) const { return is_zero(reduce(v)); }

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVector +: length mismatch");
  QVector c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b[i];
  return c;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("QVector -: length mismatch");
  QVector c(a);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b[i];
  return c;
}

QVector operator*(const Rational& c, const QVector& a) {
  QVector out(a);
  for (auto& x : out) x *= c;
  return out;
}

bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace sl4cube
