#include <algorithm>
#include <map>

#include "sl4cube/cube.hpp"
#include "sl4cube/special.hpp"
#include "sl4cube/tensor.hpp"
#include "suite_util.hpp"

namespace sl4cube::detail {

namespace {

QMatrix matrix_poly(const Hypercube& cube, const std::vector<Rational>& q, const QMatrix& X, bool diagonal) {
  // Horner in X; X is A (applied sparsely) or a diagonal matrix.
  const std::size_t n = cube.order();
  QMatrix acc(n, n);
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    acc = diagonal ? X * acc : cube.adjacency_left(acc);
    for (std::size_t k = 0; k < n; ++k) acc(k, k) += *it;
  }
  return acc;
}

Vertex second_basepoint(const Hypercube& cube, Vertex kappa) {
  return static_cast<Vertex>((cube.order() - 1) ^ kappa);
}

std::vector<std::size_t> wedderburn_dims(const TAlgebra& T) {
  std::vector<std::size_t> d;
  for (const auto& part : wedderburn(T)) d.push_back(part.ideal.size());
  return d;
}

}  // namespace

VerificationReport run_cube(int N, const SuiteOptions& opts) {
  VerificationReport rep;
  const Hypercube cube(N);
  const std::size_t n = cube.order();
  const Vertex kappa = opts.basepoint;
  if (kappa >= n) {
    rep.skip("cube.basepoint", "basepoint is a vertex", N, "basepoint " + std::to_string(kappa) + " outside the cube");
    return rep;
  }
  const QMatrix I = QMatrix::identity(n);
  const QMatrix A = cube.adjacency();
  const QMatrix As = cube.dual_adjacency(kappa);
  const KrawtchoukFamily fam = krawtchouk(N, opts.faults.corrupt_krawtchouk);
  auto rng = rng_for(opts, Suite::cube, N);

  {
    Probe adj;
    adj.require(A == A.transpose(), [] { return std::string("A not symmetric"); });
    for (Vertex x = 0; x < n; ++x) {
      QVector e(n);
      e[x] = 1;
      adj.require(cube.adjacency_apply(e) == A.column(x), [&] { return "A e_" + std::to_string(x) + " mismatch"; });
    }
    adj.report(rep, "cube.adjacency", "A sums single-bit flips and is symmetric", N);
  }

  {
    Probe dist;
    QMatrix sum(n, n);
    for (int i = 0; i <= N; ++i) {
      const QMatrix Ai = cube.distance_op(i);
      sum += Ai;
      const QMatrix viaf = binomial(N, i) * matrix_poly(cube, fam.f(i), A, false);
      dist.require(Ai == viaf, [&] { return "A_" + std::to_string(i) + " != C(N,i) f_i(A)"; });
    }
    QMatrix J(n, n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) J(x, y) = 1;
    dist.require(sum == J && cube.distance_op(0) == I, [] { return std::string("sum of A_i is not J"); });
    dist.report(rep, "cube.distance_ops", "A_i = C(N,i) f_i(A), A_0 = I, sum A_i = J", N);
  }

  {
    Probe idem;
    QMatrix sum(n, n), spectral(n, n);
    for (int i = 0; i <= N; ++i) {
      const QMatrix& Ei = cube.idempotent(i);
      sum += Ei;
      spectral += theta(N, i) * Ei;
      idem.require(Ei == Ei.transpose(), [&] { return "E_" + std::to_string(i) + " not symmetric"; });
      const std::size_t r = rank(Ei);
      idem.require(Rational(static_cast<long>(r)) == binomial(N, i),
                   [&] { return "rank E_" + std::to_string(i) + " = " + std::to_string(r); });
      for (int j = 0; j <= N; ++j) {
        const QMatrix P = Ei * cube.idempotent(j);
        idem.require(i == j ? P == Ei : P.is_zero(),
                     [&] { return "E_" + std::to_string(i) + " E_" + std::to_string(j) + " wrong"; });
      }
    }
    idem.require(sum == I, [] { return std::string("sum E_i != I"); });
    idem.require(spectral == A, [] { return std::string("sum theta_i E_i != A"); });
    idem.report(rep, "cube.idempotents", "E_i E_j = delta E_i, sum E_i = I, rank C(N,i), A = sum theta_i E_i", N);
  }

  {
    Probe dual;
    QMatrix spectral(n, n);
    for (int i = 0; i <= N; ++i) spectral += theta(N, i) * cube.dual_idempotent(kappa, i);
    dual.require(spectral == As, [] { return std::string("A* != sum theta*_i E*_i"); });
    QMatrix e00(n, n);
    e00(kappa, kappa) = 1;
    dual.require(cube.dual_idempotent(kappa, 0) == e00, [] { return std::string("E*_0 != e_kk"); });
    for (int h = 0; h <= N; ++h) {
      const QMatrix Ash = cube.dual_distance_op(kappa, h);
      dual.require(Ash == binomial(N, h) * matrix_poly(cube, fam.f(h), As, true),
                   [&] { return "A*_" + std::to_string(h) + " != C(N,h) f_h(A*)"; });
      const QVector v = random_vector(rng, n);
      QVector ek(n);
      ek[kappa] = 1;
      const QVector Ek = cube.idempotent(h).apply(ek);
      QVector had(n);
      const Rational two_n(Integer(1) << N);
      for (std::size_t x = 0; x < n; ++x) had[x] = two_n * Ek[x] * v[x];
      dual.require(Ash.apply(v) == had, [&] { return "A*_" + std::to_string(h) + " v != 2^N E_h kappa o v"; });
    }
    dual.report(rep, "cube.dual_ops", "A* = sum theta*_i E*_i, A*_h = C(N,h) f_h(A*) = diag(2^N E_h kappa)", N);
  }

  {
    Probe rel;
    rel.require(commutator(A, commutator(A, As)) == Rational(4) * As, [] { return std::string("[A,[A,A*]] != 4A*"); });
    rel.require(commutator(As, commutator(As, A)) == Rational(4) * A, [] { return std::string("[A*,[A*,A]] != 4A"); });
    rel.report(rep, "cube.tridiagonal", "[A,[A,A*]] = 4A*, [A*,[A*,A]] = 4A", N);
  }

  {
    Probe par;
    for (const TripleIndex& t : enumerate_triples(N)) {
      // x = 0, y at distance h; count z with d(x,z) = i, d(y,z) = j.
      const Vertex y = static_cast<Vertex>((std::size_t{1} << t.h) - 1);
      long count = 0;
      for (Vertex z = 0; z < n; ++z)
        if (Hypercube::distance(0, z) == t.i && Hypercube::distance(y, z) == t.j) ++count;
      const Rational lhs = binomial(N, t.h) * Rational(count);
      const Rational rhs = factorial(N) / profile_factorial(*profile_of_triple(N, t));
      par.require(lhs == rhs, [&] { return "k_h p^h_ij at " + to_string(t) + " = " + to_string(lhs); });
    }
    par.report(rep, "cube.parameters", "k_h p^h_{ij} = N!/(r!s!t!u!)", N);
  }

  const TAlgebra T(cube, kappa);
  const std::size_t dimT = T.dim();
  const Rational want_dim = binomial(N + 3, 3);

  {
    const GeneratedAlgebra gen = generated_algebra(T);
    rep.expect("cube.t.dimension", "dim T = C(N+3,3)", N,
               gen.words_in_class_span && Rational(static_cast<long>(gen.dimension)) == want_dim &&
                   Rational(static_cast<long>(dimT)) == want_dim,
               [&] {
                 return "generated dimension " + std::to_string(gen.dimension) + ", class count " +
                        std::to_string(dimT) + (gen.words_in_class_span ? "" : ", a word left the class span");
               });
  }

  {
    // E*_i A_h E*_j: nonzero iff (h,i,j) is in the triple set, orthogonal,
    // squared norm N!/p! (the size of the class).
    Probe sup, orth, norm;
    std::size_t nonzero = 0;
    for (int h = 0; h <= N; ++h)
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
          const QMatrix M = cube.dual_idempotent(kappa, i) * cube.distance_op(h) * cube.dual_idempotent(kappa, j);
          const bool member = in_triple_set(N, {h, i, j});
          const bool nz = !M.is_zero();
          nonzero += nz;
          sup.require(nz == member, [&] { return "E*_i A_h E*_j support wrong at " + to_string(TripleIndex{h, i, j}); });
          if (member) {
            const auto c = T.coords_of(M);
            sup.require(c && *c == T.unit({h, i, j}), [&] { return "class coordinates wrong at " + to_string(TripleIndex{h, i, j}); });
          }
        }
    sup.require(nonzero == dimT, [&] { return std::to_string(nonzero) + " nonzero elements"; });
    for (std::size_t a = 0; a < dimT; ++a) {
      const TripleIndex& t = T.triples()[a];
      const QVector ua = T.unit(t);
      // The element E*_j A_h E*_i sits at class (h, j, i).
      const Profile p = *profile_of_triple(N, {t.h, t.j, t.i});
      const Rational want = factorial(N) / profile_factorial(p);
      norm.require(T.inner(ua, ua) == want, [&] { return "|E*AE*|^2 at " + to_string(t) + " = " + to_string(T.inner(ua, ua)); });
      for (std::size_t b = a + 1; b < dimT; ++b)
        orth.require(is_zero(T.inner(ua, T.unit(T.triples()[b]))), [&] { return "units not orthogonal"; });
    }
    sup.report(rep, "cube.t.estar_basis", "E*_i A_h E*_j != 0 iff (h,i,j) in P''_N; |P''_N| elements", N);
    orth.report(rep, "cube.t.estar_orthogonal", "E*_i A_h E*_j pairwise orthogonal", N);
    norm.report(rep, "cube.t.estar_norms", "|E*_j A_h E*_i|^2 = N!/(r!s!t!u!)", N);
  }

  rep.append(check_dual_basis_matrices(T));
  {
    Probe orth, norm;
    const auto& Y = T.dual_basis();
    for (std::size_t a = 0; a < dimT; ++a) {
      const Rational want = factorial(N) / profile_factorial(*profile_of_triple(N, T.triples()[a]));
      norm.require(T.inner(Y[a], Y[a]) == want, [&] { return "|E_i A*_h E_j|^2 at " + to_string(T.triples()[a]); });
      for (std::size_t b = a + 1; b < dimT; ++b)
        orth.require(is_zero(T.inner(Y[a], Y[b])), [&] {
          return to_string(T.triples()[a]) + " and " + to_string(T.triples()[b]) + " not orthogonal";
        });
    }
    orth.report(rep, "cube.t.dual_orthogonal", "E_i A*_h E_j pairwise orthogonal", N);
    norm.report(rep, "cube.t.dual_norms", "|E_i A*_h E_j|^2 = N!/(r!s!t!u!)", N);
  }

  {
    Probe mult;
    auto check = [&](const QVector& a, const QVector& b, const std::string& what) {
      const auto c = T.coords_of(T.matrix_of(a) * T.matrix_of(b));
      mult.require(c && *c == T.product(a, b), [&] { return "class product disagrees with matrix product: " + what; });
    };
    check(T.A(), T.Astar(), "A A*");
    check(T.Astar(), T.A(), "A* A");
    for (int k = 0; k < 3; ++k) check(random_vector(rng, dimT), random_vector(rng, dimT), "random pair");
    mult.report(rep, "cube.t.product", "product on class coordinates agrees with matrix multiplication", N);
  }

  {
    Probe dag;
    std::vector<std::pair<std::string, QMatrix>> fixed = {{"A", A}, {"A*", As}};
    for (int i = 0; i <= N; ++i) {
      fixed.emplace_back("A_" + std::to_string(i), cube.distance_op(i));
      fixed.emplace_back("E_" + std::to_string(i), cube.idempotent(i));
      fixed.emplace_back("A*_" + std::to_string(i), cube.dual_distance_op(kappa, i));
      fixed.emplace_back("E*_" + std::to_string(i), cube.dual_idempotent(kappa, i));
    }
    for (const auto& [nm, M] : fixed) {
      const auto c = T.coords_of(M);
      dag.require(c && T.transpose(*c) == *c, [&] { return nm + " not fixed by the transpose"; });
    }
    const QVector X = random_vector(rng, dimT), Yv = random_vector(rng, dimT);
    dag.require(T.transpose(T.product(X, Yv)) == T.product(T.transpose(Yv), T.transpose(X)),
                [] { return std::string("transpose is not an antiautomorphism"); });
    dag.report(rep, "cube.t.transpose", "transpose fixes A, A*, A_i, E_i, A*_i, E*_i and reverses products", N);
  }

  {
    Probe ops;
    const QVector a = T.A(), as = T.Astar();
    for (std::size_t k = 0; k < dimT; ++k) {
      const QVector B = T.unit(T.triples()[k]);
      ops.require(T.calA(2, B) == T.product(a, B), [&] { return "calA2(B) != A B at " + to_string(T.triples()[k]); });
      ops.require(T.calA(3, B) == T.product(B, a), [&] { return "calA3(B) != B A at " + to_string(T.triples()[k]); });
      ops.require(T.calAstar(2, B) == T.product(B, as), [&] { return "calA*2(B) != B A* at " + to_string(T.triples()[k]); });
      ops.require(T.calAstar(3, B) == T.product(as, B), [&] { return "calA*3(B) != A* B at " + to_string(T.triples()[k]); });
      const QVector& Y = T.dual_basis()[k];
      ops.require(T.calA(1, Y) == theta(N, T.triples()[k].h) * Y, [&] { return "calA1 not diagonal on the dual basis"; });
      ops.require(T.calAstar(1, B) == theta(N, T.triples()[k].h) * B, [&] { return "calA*1 not diagonal on the E* basis"; });
    }
    ops.report(rep, "cube.t.module_ops", "calA^(2) = A., calA^(3) = .A, calA*^(2) = .A*, calA*^(3) = A*.", N);
  }

  {
    Probe s;
    for (std::size_t k = 0; k < dimT; ++k) {
      const TripleIndex& t = T.triples()[k];
      const QVector img = T.S(T.dual_basis()[k]);
      s.require(img == T.unit({t.h, t.j, t.i}), [&] { return "S(E_i A*_h E_j) != E*_j A_h E*_i at " + to_string(t); });
      const QVector back = T.S(T.unit({t.h, t.j, t.i}));
      s.require(back == T.dual_basis()[k], [&] { return "S(E*_j A_h E*_i) != E_i A*_h E_j at " + to_string(t); });
    }
    for (int trial = 0; trial < 3; ++trial) {
      const QVector X = random_vector(rng, dimT), Yv = random_vector(rng, dimT);
      s.require(T.S(T.S(X)) == X, [] { return std::string("S^2 != id"); });
      s.require(T.S(T.product(X, Yv)) == T.product(T.S(Yv), T.S(X)), [] { return std::string("S(XY) != S(Y)S(X)"); });
    }
    s.report(rep, "cube.t.S", "S swaps the bases, S^2 = id, S(XY) = S(Y) S(X)", N);
  }

  {
    Probe w;
    const auto parts = wedderburn(T);
    const QVector phi = T.phi();
    const QVector one = T.identity();
    QVector sum(dimT), recon(dimT);
    std::size_t total = 0;
    w.require(T.product(phi, T.A()) == T.product(T.A(), phi) && T.product(phi, T.Astar()) == T.product(T.Astar(), phi),
              [] { return std::string("phi is not central"); });
    for (const auto& part : parts) {
      const int M = N - 2 * part.ell;
      const std::string l = std::to_string(part.ell);
      sum = sum + part.idempotent;
      recon = recon + part.eigenvalue * part.idempotent;
      total += part.ideal.size();
      w.require(part.ideal.size() == static_cast<std::size_t>((M + 1) * (M + 1)),
                [&] { return "ideal " + l + " has dimension " + std::to_string(part.ideal.size()); });
      w.require(T.product(part.idempotent, part.idempotent) == part.idempotent, [&] { return "phi_" + l + " not idempotent"; });
      w.require(T.product(phi, part.idempotent) == part.eigenvalue * part.idempotent,
                [&] { return "phi phi_" + l + " != lambda phi_" + l; });
      w.require(T.product(part.idempotent, T.A()) == T.product(T.A(), part.idempotent),
                [&] { return "phi_" + l + " not central"; });
      for (const auto& other : parts)
        if (other.ell != part.ell)
          w.require(is_zero(T.product(part.idempotent, other.idempotent)),
                    [&] { return "phi_" + l + " phi_" + std::to_string(other.ell) + " != 0"; });
    }
    w.require(sum == one, [] { return std::string("sum phi_l != 1"); });
    w.require(recon == phi, [] { return std::string("phi != sum lambda_l phi_l"); });
    w.require(Rational(static_cast<long>(total)) == want_dim, [&] { return "ideal dimensions sum to " + std::to_string(total); });
    w.report(rep, "cube.wedderburn", "phi_l orthogonal central idempotents, eigenvalue (N-2l)(N-2l+2)/2, dim (N-2l+1)^2", N);
  }

  if (N <= 4) {
    const Vertex k2 = second_basepoint(cube, kappa);
    const TAlgebra T2(cube, k2);
    const GeneratedAlgebra g2 = generated_algebra(T2);
    rep.expect("cube.basepoint_independence", "dim T and Wedderburn dimensions agree at two basepoints", N,
               g2.words_in_class_span && g2.dimension == dimT && wedderburn_dims(T2) == wedderburn_dims(T),
               [&] { return "basepoint " + std::to_string(k2) + " gives dimension " + std::to_string(g2.dimension); });
  } else {
    rep.skip("cube.basepoint_independence", "dim T and Wedderburn dimensions agree at two basepoints", N,
             "second basepoint checked for N <= 4");
  }
  return rep;
}

VerificationReport run_tensor(int N, const SuiteOptions& opts) {
  VerificationReport rep;
  if (N > opts.tensor_n_max) {
    rep.skip("tensor.all", "V (x) V (x) V checks", N,
             "N above tensor_n_max = " + std::to_string(opts.tensor_n_max));
    return rep;
  }
  const Hypercube cube(N);
  const auto profiles = enumerate_profiles(N);
  const std::size_t np = profiles.size();
  const Rational nf = factorial(N), two_n(Integer(1) << N);
  auto rng = rng_for(opts, Suite::tensor, N);

  std::vector<TripleTensor> B, Bs;
  for (const Profile& p : profiles) {
    B.push_back(b_vector(N, p));
    Bs.push_back(bstar_vector(cube, p));
  }

  {
    Probe prof;
    const TripleTensor shape(N);
    const std::size_t total = std::size_t{1} << (3 * N);
    for (std::size_t k = 0; k < total; ++k) {
      const auto [x, y, z] = shape.unpack(k);
      const Profile p = profile_of(N, x, y, z);
      prof.require(p.degree() == N && Hypercube::distance(x, y) == p.s + p.t && Hypercube::distance(y, z) == p.t + p.u &&
                       Hypercube::distance(z, x) == p.u + p.s,
                   [&] { return "distances do not match profile " + to_string(p); });
    }
    prof.report(rep, "tensor.profile_distances", "d(x,y) = s+t, d(y,z) = t+u, d(z,x) = u+s", N);
  }

  {
    Probe size, norm, fix, dual;
    Rational covered = 0;
    for (std::size_t a = 0; a < np; ++a) {
      const Rational want = nf * two_n / profile_factorial(profiles[a]);
      const Rational sz(static_cast<long>(B[a].terms().size()));
      covered += sz;
      size.require(sz == want, [&] { return "support of B" + to_string(profiles[a]) + " is " + to_string(sz); });
      norm.require(inner(B[a], B[a]) == want && inner(Bs[a], Bs[a]) == want,
                   [&] { return "norms at " + to_string(profiles[a]); });
      fix.require(fix_membership(B[a]) && fix_membership(Bs[a]), [&] { return "not fixed by G at " + to_string(profiles[a]); });
      for (std::size_t b = 0; b < np; ++b) {
        const Rational d = a == b ? Rational(1) : Rational(0);
        const Rational w = tilde_norm2(profiles[b]);
        dual.require(inner(B[a], B[b]) * w == d && inner(Bs[a], Bs[b]) * w == d,
                     [&] { return "duality fails at " + to_string(profiles[a]) + "," + to_string(profiles[b]); });
      }
    }
    size.require(covered == Rational(Integer(1) << (3 * N)), [] { return std::string("B supports do not partition X^3"); });
    size.report(rep, "tensor.b_support", "|supp B(p)| = N! 2^N / p!, supports partition X^3", N);
    norm.report(rep, "tensor.norms", "|B(p)|^2 = |B*(p)|^2 = N! 2^N / p!", N);
    fix.report(rep, "tensor.fixed", "B(p), B*(p) lie in Fix(G)", N);
    dual.report(rep, "tensor.duality", "<B(p), B~(p')> = <B*(p), B~*(p')> = delta", N);
    rep.expect("tensor.dimension", "dim Fix(G) = C(N+3,3) via both bases", N,
               size.ok() && dual.ok() && Rational(static_cast<long>(np)) == binomial(N + 3, 3));
  }

  {
    Probe q;
    for (int h = 0; h <= N; ++h)
      for (int i = 0; i <= N; ++i)
        for (int j = 0; j <= N; ++j) {
          const bool member = in_triple_set(N, {h, i, j});
          const TripleTensor Q = q_vector(cube, {h, i, j});
          q.require(Q.is_zero() != member, [&] { return "Q zero pattern wrong at " + to_string(TripleIndex{h, i, j}); });
        }
    q.report(rep, "tensor.q_support", "Q_{h,i,j} = 0 iff (h,i,j) not in P''_N", N);
  }

  {
    Probe sums;
    TripleTensor sb(N), sbs(N);
    for (std::size_t a = 0; a < np; ++a) {
      sb += B[a];
      sbs += Bs[a];
    }
    const std::size_t top = profile_index({N, 0, 0, 0});
    const Rational inv = Rational(1) / two_n;
    sums.require(B[top] == inv * sbs, [] { return std::string("B(N,0,0,0) != 2^-N sum B*"); });
    sums.require(Bs[top] == inv * sb, [] { return std::string("B*(N,0,0,0) != 2^-N sum B"); });
    sums.report(rep, "tensor.top_sums", "B(N,0,0,0) = 2^-N sum B*(p), B*(N,0,0,0) = 2^-N sum B(p)", N);
  }

  {
    const std::vector<std::size_t> orbits = triple_orbits(N, false);
    std::vector<std::size_t> roots(orbits);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    rep.expect("tensor.orbit_count", "number of G-orbits on X^3 = C(N+3,3)", N, roots.size() == np,
               [&] { return std::to_string(roots.size()) + " orbits"; });
  }

  {
    Probe comm;
    const auto gens = group_generators(N);
    TripleTensor t(N);
    const TripleTensor shape(N);
    std::uniform_int_distribution<std::uint64_t> key(0, (std::uint64_t{1} << (3 * N)) - 1);
    for (int k = 0; k < 12; ++k) {
      const auto [x, y, z] = shape.unpack(key(rng));
      t.add(x, y, z, small_rational(rng));
    }
    for (int idx = 1; idx <= 3; ++idx)
      for (const auto& g : gens)
        for (Kind kind : {Kind::A, Kind::Astar})
          comm.require(act_concrete({kind, idx}, act_group(g, t)) == act_group(g, act_concrete({kind, idx}, t)),
                       [&] { return name({kind, idx}) + " does not commute with G"; });
    comm.report(rep, "tensor.g_equivariance", "A^(k), A*^(k) commute with the G-action", N);
  }

  {
    Probe rt;
    for (FixBasis b : {FixBasis::Btilde, FixBasis::BstarTilde}) {
      const FixVec v{b, N, random_vector(rng, np)};
      const auto back = restrict_to_fix(cube, lift(cube, v), b);
      rt.require(back && *back == v, [] { return std::string("lift/restrict round trip fails"); });
    }
    if (N >= 2) {
      TripleTensor single(N);
      single.add(0, 1, 2, 1);
      rt.require(!fix_membership(single) && !restrict_to_fix(cube, single, FixBasis::Btilde),
                 [] { return std::string("a single basis tensor was accepted as fixed"); });
    }
    rt.report(rep, "tensor.lift_restrict", "lift and restrict are inverse on Fix(G)", N);
  }

  if (N <= opts.oracle_n_max) {
    Probe ora;
    for (FixBasis b : {FixBasis::Btilde, FixBasis::BstarTilde})
      for (GeneratorId g : all_generators())
        for (const Profile& p : profiles) {
          const FixVec u = FixVec::unit(b, p);
          const TripleTensor lhs = lift(cube, act_abstract(g, u));
          const TripleTensor rhs = act_concrete(g, lift(cube, u));
          ora.require(lhs == rhs, [&] {
            return name(g) + " table disagrees with the tensor action at " + to_string(p) +
                   (b == FixBasis::Btilde ? " (B~)" : " (B~*)");
          });
        }
    ora.report(rep, "tensor.action_oracle", "profile-shift tables agree with the action on V (x) V (x) V", N);

    Probe orb;
    const std::vector<std::size_t> orbits = triple_orbits(N, true);
    const TripleTensor shape(N);
    std::map<std::size_t, Profile> profile_of_orbit;
    std::map<Profile, std::size_t> orbit_of_profile;
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      const auto [x, y, z] = shape.unpack(k);
      const Profile p = profile_of(N, x, y, z);
      const auto [it1, new1] = profile_of_orbit.emplace(orbits[k], p);
      const auto [it2, new2] = orbit_of_profile.emplace(p, orbits[k]);
      orb.require(it1->second == p && it2->second == orbits[k],
                  [&] { return "orbit and profile classes differ at " + to_string(p); });
    }
    orb.report(rep, "tensor.orbits_profiles", "same G-orbit iff same profile (full group enumeration)", N);
  } else {
    rep.skip("tensor.action_oracle", "profile-shift tables agree with the tensor action", N,
             "N above oracle_n_max = " + std::to_string(opts.oracle_n_max));
    rep.skip("tensor.orbits_profiles", "same G-orbit iff same profile", N,
             "N above oracle_n_max = " + std::to_string(opts.oracle_n_max));
  }
  return rep;
}

}  // namespace sl4cube::detail
