#include "sl4cube/cube.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace sl4cube {

namespace {

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p())
    throw std::logic_error("cube: scaled idempotent entry is not a machine integer");
  return q.get_num().get_si();
}

QMatrix diagonal(const QVector& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

}  // namespace

Rational theta(int N, int i) { return Rational(N - 2 * i); }

Hypercube::Hypercube(int N) : N_(N) {
  if (N < 0 || N > 12) throw std::out_of_range("Hypercube: N out of range");
  const std::size_t n = order();
  for (int i = 0; i <= N; ++i) {
    QMatrix X = QMatrix::identity(n);
    for (int j = 0; j <= N; ++j) {
      if (j == i) continue;
      X = adjacency_left(X) - theta(N, j) * X;
      X *= Rational(1) / (theta(N, i) - theta(N, j));
    }
    std::vector<std::int64_t> scaled(n * n);
    const Rational two_n(Integer(1) << N);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) scaled[x * n + y] = to_int64(Rational(two_n * X(x, y)));
    E_.push_back(std::move(X));
    E2n_.push_back(std::move(scaled));
  }
}

QVector Hypercube::adjacency_apply(const QVector& v) const {
  const std::size_t n = order();
  if (v.size() != n) throw std::invalid_argument("adjacency_apply: size");
  QVector out(n);
  for (Vertex x = 0; x < n; ++x)
    for (int k = 0; k < N_; ++k) out[x] += v[x ^ (Vertex{1} << k)];
  return out;
}

QMatrix Hypercube::adjacency() const { return distance_op(1); }

QMatrix Hypercube::adjacency_left(const QMatrix& X) const {
  const std::size_t n = order();
  QMatrix out(n, X.cols());
  for (Vertex x = 0; x < n; ++x)
    for (int k = 0; k < N_; ++k) {
      const Vertex xn = x ^ (Vertex{1} << k);
      for (std::size_t y = 0; y < X.cols(); ++y) out(x, y) += X(xn, y);
    }
  return out;
}

QMatrix Hypercube::adjacency_right(const QMatrix& X) const {
  const std::size_t n = order();
  QMatrix out(X.rows(), n);
  for (std::size_t x = 0; x < X.rows(); ++x)
    for (Vertex y = 0; y < n; ++y)
      for (int k = 0; k < N_; ++k) out(x, y) += X(x, y ^ (Vertex{1} << k));
  return out;
}

QMatrix Hypercube::distance_op(int i) const {
  const std::size_t n = order();
  QMatrix m(n, n);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (distance(x, y) == i) m(x, y) = 1;
  return m;
}

QMatrix Hypercube::dual_adjacency(Vertex kappa) const {
  QVector d(order());
  for (Vertex x = 0; x < order(); ++x) d[x] = theta(N_, distance(x, kappa));
  return diagonal(d);
}

QMatrix Hypercube::dual_idempotent(Vertex kappa, int i) const {
  QVector d(order());
  for (Vertex x = 0; x < order(); ++x) d[x] = distance(x, kappa) == i ? 1 : 0;
  return diagonal(d);
}

QMatrix Hypercube::dual_distance_op(Vertex kappa, int h) const {
  const std::size_t n = order();
  const auto& e = idempotent_scaled(h);
  QVector d(n);
  for (Vertex x = 0; x < n; ++x) d[x] = Rational(e[x * n + kappa]);
  return diagonal(d);
}

// ---------------------------------------------------------------------------

TAlgebra::TAlgebra(const Hypercube& cube, Vertex kappa)
    : cube_(cube), kappa_(kappa), triples_(enumerate_triples(cube.N())) {
  const int N = cube.N();
  const std::size_t n = cube.order();
  if (kappa >= n) throw std::out_of_range("TAlgebra: basepoint");
  const auto side = static_cast<std::size_t>(N + 1);
  pos_.assign(side * side * side, -1);
  for (std::size_t k = 0; k < triples_.size(); ++k) {
    const auto& t = triples_[k];
    pos_[(static_cast<std::size_t>(t.h) * side + t.i) * side + t.j] = static_cast<int>(k);
  }

  cls_.resize(n * n);
  sizes_.assign(triples_.size(), 0);
  reps_.assign(triples_.size(), {0, 0});
  std::vector<bool> seen(triples_.size(), false);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      const TripleIndex t{Hypercube::distance(x, y), Hypercube::distance(x, kappa),
                          Hypercube::distance(y, kappa)};
      const std::size_t k = position(t);
      cls_[x * n + y] = static_cast<std::uint32_t>(k);
      sizes_[k] += 1;
      if (!seen[k]) {
        seen[k] = true;
        reps_[k] = {x, y};
      }
    }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw std::logic_error("TAlgebra: empty class " + to_string(triples_[k]));

  // E_i A*_h E_j at class representatives; constancy on classes is checked
  // separately by check_dual_basis_matrices.
  const Rational inv4n = Rational(1, Integer(1) << (2 * N));
  for (const auto& t : triples_) {
    const auto& Ei = cube.idempotent_scaled(t.i);
    const auto& Eh = cube.idempotent_scaled(t.h);
    const auto& Ej = cube.idempotent_scaled(t.j);
    QVector c(triples_.size());
    for (std::size_t k = 0; k < reps_.size(); ++k) {
      const auto [x, y] = reps_[k];
      std::int64_t acc = 0;
      for (Vertex z = 0; z < n; ++z) acc += Ei[x * n + z] * Eh[z * n + kappa] * Ej[z * n + y];
      c[k] = Rational(acc) * inv4n;
    }
    dual_norms_.push_back(inner(c, c));
    if (is_zero(dual_norms_.back())) throw std::logic_error("TAlgebra: zero dual basis element");
    dual_basis_.push_back(std::move(c));
  }
}

std::size_t TAlgebra::position(const TripleIndex& t) const {
  const int N = cube_.N();
  if (t.h < 0 || t.i < 0 || t.j < 0 || t.h > N || t.i > N || t.j > N)
    throw std::out_of_range("TAlgebra: triple out of range");
  const auto side = static_cast<std::size_t>(N + 1);
  const int p = pos_[(static_cast<std::size_t>(t.h) * side + t.i) * side + t.j];
  if (p < 0) throw std::out_of_range("TAlgebra: triple not in the triple set: " + to_string(t));
  return static_cast<std::size_t>(p);
}

std::optional<QVector> TAlgebra::coords_of(const QMatrix& m) const {
  const std::size_t n = cube_.order();
  if (m.rows() != n || m.cols() != n) throw std::invalid_argument("coords_of: shape");
  QVector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = m(reps_[k].first, reps_[k].second);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (m(x, y) != c[cls_[x * n + y]]) return std::nullopt;
  return c;
}

QMatrix TAlgebra::matrix_of(const QVector& c) const {
  const std::size_t n = cube_.order();
  QMatrix m(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) m(x, y) = c[cls_[x * n + y]];
  return m;
}

Rational TAlgebra::inner(const QVector& a, const QVector& b) const {
  Rational s = 0;
  for (std::size_t k = 0; k < dim(); ++k)
    if (!is_zero(a[k]) && !is_zero(b[k])) s += Rational(sizes_[k]) * a[k] * b[k];
  return s;
}

QVector TAlgebra::product(const QVector& a, const QVector& b) const {
  const std::size_t n = cube_.order();
  QVector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const auto [x, y] = reps_[k];
    Rational s = 0;
    for (std::size_t z = 0; z < n; ++z) {
      const Rational& l = a[cls_[x * n + z]];
      if (is_zero(l)) continue;
      const Rational& r = b[cls_[z * n + y]];
      if (!is_zero(r)) s += l * r;
    }
    out[k] = s;
  }
  return out;
}

QMatrix TAlgebra::left_mult_matrix(const QVector& X) const {
  QMatrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) m.set_column(k, product(X, unit(triples_[k])));
  return m;
}

QVector TAlgebra::unit(const TripleIndex& t) const {
  QVector c(dim());
  c[position(t)] = 1;
  return c;
}

QVector TAlgebra::identity() const {
  QVector c(dim());
  for (int i = 0; i <= N(); ++i) c[position({0, i, i})] = 1;
  return c;
}

QVector TAlgebra::A() const {
  QVector c(dim());
  for (std::size_t k = 0; k < dim(); ++k)
    if (triples_[k].h == 1) c[k] = 1;
  return c;
}

QVector TAlgebra::Astar() const {
  QVector c(dim());
  for (int i = 0; i <= N(); ++i) c[position({0, i, i})] = theta(N(), i);
  return c;
}

QVector TAlgebra::transpose(const QVector& c) const {
  QVector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const auto& t = triples_[k];
    out[position({t.h, t.j, t.i})] = c[k];
  }
  return out;
}

QVector TAlgebra::dual_coeffs(const QVector& b) const {
  QVector c(dim());
  for (std::size_t k = 0; k < dim(); ++k) c[k] = inner(b, dual_basis_[k]) / dual_norms_[k];
  return c;
}

QVector TAlgebra::from_dual_coeffs(const QVector& c) const {
  QVector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    if (is_zero(c[k])) continue;
    for (std::size_t m = 0; m < dim(); ++m) out[m] += c[k] * dual_basis_[k][m];
  }
  return out;
}

QVector TAlgebra::calA(int k, const QVector& b) const {
  if (k < 1 || k > 3) throw std::out_of_range("calA: index");
  QVector c = dual_coeffs(b);
  for (std::size_t m = 0; m < dim(); ++m) {
    const auto& t = triples_[m];
    c[m] *= theta(N(), k == 1 ? t.h : k == 2 ? t.i : t.j);
  }
  return from_dual_coeffs(c);
}

QVector TAlgebra::calAstar(int k, const QVector& b) const {
  if (k < 1 || k > 3) throw std::out_of_range("calAstar: index");
  QVector c = b;
  for (std::size_t m = 0; m < dim(); ++m) {
    const auto& t = triples_[m];
    c[m] *= theta(N(), k == 1 ? t.h : k == 2 ? t.j : t.i);
  }
  return c;
}

QVector TAlgebra::S(const QVector& b) const {
  const QVector c = dual_coeffs(b);
  QVector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const auto& t = triples_[k];
    out[position({t.h, t.j, t.i})] += c[k];
  }
  return out;
}

QVector TAlgebra::phi() const {
  const QVector a = A();
  const QVector s = Astar();
  const QVector c = product(a, s) - product(s, a);
  const QVector num = Rational(4) * product(a, a) + Rational(4) * product(s, s) - product(c, c);
  return Rational(1, 8) * num;
}

// ---------------------------------------------------------------------------

std::vector<WedderburnPart> wedderburn(const TAlgebra& T) {
  const int N = T.N();
  const QVector phi = T.phi();
  const QVector one = T.identity();
  std::vector<Rational> eig;
  for (int ell = 0; 2 * ell <= N; ++ell) eig.push_back(ratio((N - 2 * ell) * (N - 2 * ell + 2), 2));

  std::vector<WedderburnPart> out;
  for (std::size_t l = 0; l < eig.size(); ++l) {
    QVector e = one;
    for (std::size_t m = 0; m < eig.size(); ++m) {
      if (m == l) continue;
      e = T.product(phi - eig[m] * one, e);
      e = (Rational(1) / (eig[l] - eig[m])) * e;
    }
    WedderburnPart part;
    part.ell = static_cast<int>(l);
    part.eigenvalue = eig[l];
    const QMatrix L = T.left_mult_matrix(e);
    IncrementalBasis basis(T.dim());
    for (std::size_t k = 0; k < T.dim(); ++k) {
      QVector col = L.column(k);
      if (basis.add(col)) part.ideal.push_back(std::move(col));
    }
    part.idempotent = std::move(e);
    out.push_back(std::move(part));
  }
  return out;
}

GeneratedAlgebra generated_algebra(const TAlgebra& T) {
  const Hypercube& cube = T.cube();
  const QMatrix As = cube.dual_adjacency(T.basepoint());
  GeneratedAlgebra res;
  IncrementalBasis basis(T.dim());
  std::deque<QMatrix> queue;
  const QMatrix I = QMatrix::identity(cube.order());
  basis.add(*T.coords_of(I));
  queue.push_back(I);
  while (!queue.empty()) {
    const QMatrix W = std::move(queue.front());
    queue.pop_front();
    for (int g = 0; g < 2; ++g) {
      QMatrix next = g == 0 ? cube.adjacency_left(W) : As * W;
      const auto c = T.coords_of(next);
      if (!c) {
        res.words_in_class_span = false;
        continue;
      }
      if (basis.add(*c)) queue.push_back(std::move(next));
    }
  }
  res.dimension = basis.size();
  return res;
}

VerificationReport check_dual_basis_matrices(const TAlgebra& T) {
  VerificationReport rep;
  const Hypercube& cube = T.cube();
  const int N = cube.N();
  const std::size_t n = cube.order();
  const Vertex kappa = T.basepoint();
  std::size_t nonzero = 0;
  bool consistent = true;
  std::string bad;
  std::vector<std::int64_t> M(n * n);
  for (int h = 0; h <= N; ++h)
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        const auto& Ei = cube.idempotent_scaled(i);
        const auto& Eh = cube.idempotent_scaled(h);
        const auto& Ej = cube.idempotent_scaled(j);
        std::fill(M.begin(), M.end(), 0);
        for (std::size_t x = 0; x < n; ++x)
          for (std::size_t z = 0; z < n; ++z) {
            const std::int64_t l = Ei[x * n + z] * Eh[z * n + kappa];
            if (l == 0) continue;
            for (std::size_t y = 0; y < n; ++y) M[x * n + y] += l * Ej[z * n + y];
          }
        const TripleIndex t{h, i, j};
        bool any = false;
        for (auto v : M) any = any || v != 0;
        const bool member = in_triple_set(N, t);
        if (any) ++nonzero;
        if (any != member) {
          consistent = false;
          bad = "E_" + std::to_string(i) + " A*_" + std::to_string(h) + " E_" + std::to_string(j) +
                (any ? " nonzero outside" : " zero inside") + " the triple set";
          continue;
        }
        if (!member) continue;
        const QVector& want = T.dual_basis()[T.position(t)];
        const Rational inv4n = Rational(1, Integer(1) << (2 * N));
        for (std::size_t x = 0; x < n && consistent; ++x)
          for (std::size_t y = 0; y < n; ++y)
            if (Rational(M[x * n + y]) * inv4n != want[T.class_of(static_cast<Vertex>(x), static_cast<Vertex>(y))]) {
              consistent = false;
              bad = "E_" + std::to_string(i) + " A*_" + std::to_string(h) + " E_" + std::to_string(j) +
                    " not constant on classes at (" + std::to_string(x) + "," + std::to_string(y) + ")";
              break;
            }
      }
  rep.expect("cube.dual_basis.support", "E_i A*_h E_j != 0 iff (h,i,j) in the triple set, constant on classes",
             N, consistent, [&] { return bad; });
  rep.expect("cube.dual_basis.count", "#{nonzero E_i A*_h E_j} = |P''_N|", N, nonzero == T.dim(),
             [&] { return std::to_string(nonzero) + " vs " + std::to_string(T.dim()); });
  return rep;
}

}  // namespace sl4cube
