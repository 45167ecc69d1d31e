#include <algorithm>

#include "sl4cube/decompose.hpp"
#include "sl4cube/poly.hpp"
#include "sl4cube/special.hpp"
#include "suite_util.hpp"

namespace sl4cube::detail {

namespace {

const Var kMono[4] = {Var::x, Var::y, Var::z, Var::w};
const Var kStar[4] = {Var::xs, Var::ys, Var::zs, Var::ws};

QMatrix gram(int N, Basis b) {
  const auto vs = basis_vectors(N, b);
  QMatrix g(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t c = 0; c < vs.size(); ++c) g(a, c) = hermitian(vs[a], vs[c]);
  return g;
}

QMatrix diag_factorials(int N) {
  const auto ps = enumerate_profiles(N);
  QMatrix g(ps.size(), ps.size());
  for (std::size_t a = 0; a < ps.size(); ++a) g(a, a) = profile_factorial(ps[a]);
  return g;
}

// Sum_{i,j} m(i,j) M_{v_i} D_{v_j} in the given variable family.
PolyVec derivation(const Matrix4& m, const Var* vars, const PolyVec& f) {
  PolyVec out(f.basis());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!is_zero(m(i, j))) out += m(i, j) * apply_M(vars[i], apply_D(vars[j], f));
  return out;
}

bool same(const PolyVec& a, const PolyVec& b) { return convert_basis(a, Basis::monomial) == convert_basis(b, Basis::monomial); }

void check_decomposition(VerificationReport& rep, int N, int i, const SuiteOptions& opts) {
  const std::string tag = std::to_string(i);
  const auto parts = graded_decomposition(i, N, opts.faults.corrupt_krawtchouk);
  const auto& kernel = parts.front().basis;

  Probe killed, korth, knorm;
  killed.require(kernel.size() == static_cast<std::size_t>((N + 1) * (N + 1)),
                 [&] { return "kernel basis has " + std::to_string(kernel.size()) + " vectors"; });
  for (std::size_t a = 0; a < kernel.size(); ++a) {
    const PolyVec l = apply_L(i, kernel[a]);
    killed.require(l.is_zero(), [&] { return "L_" + tag + " v_" + std::to_string(a) + " = " + l.str(); });
    const int j = static_cast<int>(a) / (N + 1), k = static_cast<int>(a) % (N + 1);
    const Rational want = factorial(N) / (binomial(N, j) * binomial(N, k));
    const Rational got = hermitian(kernel[a], kernel[a]);
    knorm.require(got == want, [&] {
      return "|v_{" + std::to_string(j) + "," + std::to_string(k) + "}|^2 = " + to_string(got) + ", expected " +
             to_string(want);
    });
    for (std::size_t b = a + 1; b < kernel.size(); ++b)
      korth.require(is_zero(hermitian(kernel[a], kernel[b])),
                    [&] { return "v_" + std::to_string(a) + " and v_" + std::to_string(b) + " not orthogonal"; });
  }
  killed.report(rep, "poly.kernel." + tag + ".annihilated", "L_i v_{j,k} = 0 for the (N+1)^2 kernel vectors", N);
  korth.report(rep, "poly.kernel." + tag + ".orthogonal", "kernel basis pairwise orthogonal", N);
  knorm.report(rep, "poly.kernel." + tag + ".norms", "|v_{j,k}|^2 = N!/(C(N,j) C(N,k))", N);

  Probe dims, orth, cas, lr;
  std::vector<QVector> all;
  for (const auto& part : parts) {
    const int M = N - 2 * part.ell;
    dims.require(part.basis.size() == static_cast<std::size_t>((M + 1) * (M + 1)), [&] {
      return "summand " + std::to_string(part.ell) + " has " + std::to_string(part.basis.size()) + " vectors";
    });
    const Rational ev = ratio((N - 2 * part.ell) * (N - 2 * part.ell + 2), 2);
    const Rational lr_ev((part.ell + 1) * (M + part.ell + 2));
    const Rational rl_ev(part.ell * (M + part.ell + 1));
    for (const auto& v : part.basis) {
      all.push_back(v.dense(N));
      const PolyVec c = apply_C(i, v);
      cas.require(c == ev * v, [&] { return "C_" + tag + " eigenvalue fails on summand " + std::to_string(part.ell); });
      lr.require(apply_L(i, apply_R(i, v)) == lr_ev * v && apply_R(i, apply_L(i, v)) == rl_ev * v,
                 [&] { return "L R / R L scalars fail on summand " + std::to_string(part.ell); });
    }
  }
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a; b < parts.size(); ++b)
      for (std::size_t x = 0; x < parts[a].basis.size(); ++x)
        for (std::size_t y = (a == b ? x + 1 : 0); y < parts[b].basis.size(); ++y)
          orth.require(is_zero(hermitian(parts[a].basis[x], parts[b].basis[y])), [&] {
            return "summands " + std::to_string(a) + "," + std::to_string(b) + " vectors " + std::to_string(x) + "," +
                   std::to_string(y) + " not orthogonal";
          });
  const std::size_t total = profile_count(N);
  const std::size_t r = all.empty() ? 0 : rank(QMatrix::from_columns(all, total));
  dims.require(all.size() == total && r == total,
               [&] { return std::to_string(all.size()) + " vectors of rank " + std::to_string(r) + ", expected " + std::to_string(total); });
  dims.report(rep, "poly.graded." + tag + ".dims", "summand dims (N-2l+1)^2, direct sum of dimension C(N+3,3)", N);
  orth.report(rep, "poly.graded." + tag + ".orthogonal", "graded basis pairwise orthogonal", N);
  cas.report(rep, "poly.graded." + tag + ".casimir", "C_i = (N-2l)(N-2l+2)/2 on summand l", N);
  lr.report(rep, "poly.graded." + tag + ".lr_scalars", "L_i R_i = (l+1)(M+l+2), R_i L_i = l(M+l+1), M = N-2l", N);
}

}  // namespace

VerificationReport run_poly(int N, const SuiteOptions& opts) {
  VerificationReport rep;
  const auto profiles = enumerate_profiles(N);
  const std::size_t n = profiles.size();
  const auto gens = all_generators();
  const auto mono = basis_vectors(N, Basis::monomial);
  const auto star = basis_vectors(N, Basis::starred);

  rep.expect("poly.profiles.count", "|P_N| = C(N+3,3)", N, n == static_cast<std::size_t>(binomial(N + 3, 3).get_num().get_si()));

  {
    Probe mat, dual, native;
    for (GeneratorId g : gens) {
      const Matrix4 m = generator(g);
      for (const auto* family : {&mono, &star})
        for (const PolyVec& f : *family) {
          const PolyVec want = act_generator(g, f);
          mat.require(same(act_matrix(m, f), want), [&] { return name(g) + " on " + f.str(); });
          // Same factorization in the starred variables, with A and A* swapped.
          const GeneratorId swapped{g.kind == Kind::A ? Kind::Astar : Kind::A, g.index};
          dual.require(same(derivation(generator(swapped), kStar, f), want), [&] { return name(g) + " on " + f.str(); });
          native.require(same(act_generator(g, convert_basis(f, other(f.basis()))), want),
                         [&] { return name(g) + " tables disagree across bases on " + f.str(); });
        }
    }
    mat.report(rep, "poly.dm_factorization", "A_i, A*_i = sum m_ab M_a D_b in x,y,z,w", N);
    dual.report(rep, "poly.dm_factorization_dual", "A*_i, A_i = sum m_ab M_a* D_b* in x*,y*,z*,w*", N);
    native.report(rep, "poly.tables_agree", "monomial and starred action tables agree under change of basis", N);
  }

  const QMatrix G = diag_factorials(N);
  {
    Probe adj;
    for (GeneratorId g : gens) {
      const QMatrix M = operator_matrix(N, N, Basis::monomial, [&](const PolyVec& f) { return act_generator(g, f); });
      adj.require(G * M == M.transpose() * G, [&] { return name(g) + " is not self-adjoint"; });
    }
    adj.report(rep, "poly.adjoint", "<X f, g> = <f, X g> for the six generators", N);
  }

  {
    Probe adj, comm, star_lr, commute;
    const QMatrix Gm2 = diag_factorials(std::max(N - 2, 0));
    const QMatrix I = QMatrix::identity(n);
    for (int i = 1; i <= 3; ++i) {
      const std::string t = std::to_string(i);
      if (N >= 2) {
        const QMatrix L = operator_matrix(N, N - 2, Basis::monomial, [&](const PolyVec& f) { return apply_L(i, f); });
        const QMatrix R = operator_matrix(N - 2, N, Basis::monomial, [&](const PolyVec& f) { return apply_R(i, f); });
        adj.require(Gm2 * L == R.transpose() * G, [&] { return "<L_" + t + " f, g> != <f, R_" + t + " g>"; });
      }
      const QMatrix LR = operator_matrix(N, N, Basis::monomial, [&](const PolyVec& f) { return apply_L(i, apply_R(i, f)); });
      const QMatrix RL = operator_matrix(N, N, Basis::monomial, [&](const PolyVec& f) { return apply_R(i, apply_L(i, f)); });
      comm.require(LR - RL == Rational(N + 2) * I, [&] { return "[L_" + t + ", R_" + t + "] != Omega + 2"; });

      for (const PolyVec& f : star) {
        star_lr.require(same(apply_L(i, f), apply_L(i, convert_basis(f, Basis::monomial))) &&
                            same(apply_R(i, f), apply_R(i, convert_basis(f, Basis::monomial))),
                        [&] { return "L_" + t + " / R_" + t + " differ in starred variables on " + f.str(); });
      }
      for (GeneratorId g : gens) {
        if (g.index == i) continue;
        for (const PolyVec& f : mono) {
          commute.require(apply_L(i, act_generator(g, f)) == act_generator(g, apply_L(i, f)) &&
                              apply_R(i, act_generator(g, f)) == act_generator(g, apply_R(i, f)),
                          [&] { return "L_" + t + " or R_" + t + " fails to commute with " + name(g) + " on " + f.str(); });
        }
      }
    }
    if (N >= 2) adj.report(rep, "poly.adjoint_lr", "<L_i f, g> = <f, R_i g>", N);
    comm.report(rep, "poly.lr_commutator", "[L_i, R_i] = Omega + 2I", N);
    star_lr.report(rep, "poly.lr_starred", "L_i, R_i take the same form in the starred variables", N);
    commute.report(rep, "poly.lr_commutes", "L_i, R_i commute with A_j, A*_j for j != i", N);
  }

  {
    Probe weyl;
    auto rng = rng_for(opts, Suite::poly, N);
    for (const Var* fam : {kMono, kStar}) {
      const Basis b = fam == kMono ? Basis::monomial : Basis::starred;
      const PolyVec f = random_poly(rng, N, b);
      for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) {
          const PolyVec got = apply_D(fam[a], apply_M(fam[c], f)) - apply_M(fam[c], apply_D(fam[a], f));
          const PolyVec want = a == c ? f : PolyVec(b);
          weyl.require(got == want, [&] { return "[D_" + std::to_string(a) + ", M_" + std::to_string(c) + "] in " + std::string(b == Basis::monomial ? "x,y,z,w" : "x*,y*,z*,w*"); });
        }
    }
    weyl.report(rep, "poly.weyl", "[D_a, M_b] = delta_ab I", N);
  }

  {
    Probe cas;
    for (int i = 1; i <= 3; ++i)
      for (const PolyVec& f : mono) {
        const PolyVec c = apply_C(i, f);
        cas.require(c == convert_basis(apply_C_bracket(i, 0, f), Basis::monomial) &&
                        c == convert_basis(apply_C_bracket(i, 1, f), Basis::monomial),
                    [&] { return "C_" + std::to_string(i) + " expressions differ on " + f.str(); });
      }
    cas.report(rep, "poly.casimir", "C_i from L_i, R_i equals both bracket expressions", N);
  }

  {
    Probe sform, conj, norm, inv;
    sform.require(gram(N, Basis::starred) == G, [] { return std::string("starred Gram matrix is not diag(p!)"); });
    for (GeneratorId g : gens) {
      const Matrix4 t = tau(generator(g));
      for (const PolyVec& f : mono) {
        const PolyVec lhs = sigma(act_generator(g, sigma(f)));
        conj.require(same(lhs, act_matrix(t, f)), [&] { return "sigma " + name(g) + " sigma^-1 != tau on " + f.str(); });
      }
    }
    const Rational want = factorial(N) / Rational(Integer(1) << N);
    const PolyVec top = PolyVec::term({N, 0, 0, 0}, Basis::starred);
    for (const PolyVec& f : mono) {
      const Rational h = hermitian(f, top);
      norm.require(h == want, [&] { return "<" + f.str() + ", x*^N> = " + to_string(h); });
    }
    const QMatrix& C = conversion_matrix(N);
    inv.require(C * C == QMatrix::identity(n), [] { return std::string("change of basis is not an involution"); });
    sform.report(rep, "poly.sigma_form", "<sigma f, sigma g> = <f, g>", N);
    conj.report(rep, "poly.sigma_conjugation", "sigma X sigma^-1 = tau(X) for the six generators", N);
    norm.report(rep, "poly.normalization", "<x^p, x*^N> = N!/2^N", N);
    inv.report(rep, "poly.conversion_involution", "converting twice is the identity", N);
  }

  {
    Probe ann;
    const KrawtchoukFamily fam = krawtchouk(N, opts.faults.corrupt_krawtchouk);
    for (GeneratorId g : gens)
      for (const PolyVec& f : mono) {
        const PolyVec v = apply_poly1(fam.f(N + 1), g, f);
        ann.require(v.is_zero(), [&] { return "f_{N+1}(" + name(g) + ") " + f.str() + " = " + v.str(); });
      }
    ann.report(rep, "poly.krawtchouk_annihilation", "f_{N+1}(A_i) = f_{N+1}(A*_i) = 0 on P_N", N);
  }

  {
    Probe w, eig;
    const auto wd = weight_decomposition(N);
    w.require(wd.size() == n, [&] { return "weight map not injective"; });
    for (const auto& [wt, p] : wd) {
      const auto back = profile_of_weight(N, wt);
      w.require(in_weight_set(N, wt) && back && *back == p, [&] { return "weight inverse fails at " + to_string(p); });
      const PolyVec f = PolyVec::term(p, Basis::monomial);
      w.require(act_generator({Kind::Astar, 1}, f) == Rational(wt.lambda) * f &&
                    act_generator({Kind::Astar, 2}, f) == Rational(wt.mu) * f &&
                    act_generator({Kind::Astar, 3}, f) == Rational(wt.nu) * f,
                [&] { return "weight of " + to_string(p) + " is not the A* eigenvalue triple"; });
    }
    for (GeneratorId g : gens) {
      const auto dims = eigenspace_dims(g, N);
      std::map<int, int> want;
      for (int k = 0; k <= N; ++k) want[N - 2 * k] = (k + 1) * (N - k + 1);
      eig.require(dims == want, [&] { return name(g) + " eigenspace dimensions differ"; });
    }
    w.report(rep, "poly.weights", "profiles <-> weight triples, simultaneous A* eigenvalues", N);
    eig.report(rep, "poly.eigenspaces", "eigenvalue N-2n with multiplicity (n+1)(N-n+1)", N);
  }

  {
    Probe words;
    for (bool starred : {false, true}) {
      std::vector<QVector> cols;
      for (const PolyVec& v : generator_word_family(N, starred)) cols.push_back(v.dense(N));
      const std::size_t r = rank(QMatrix::from_columns(cols, n));
      words.require(r == n, [&] { return std::string(starred ? "starred" : "monomial") + " words have rank " + std::to_string(r); });
    }
    words.report(rep, "poly.word_basis", "A_1^s A_2^t A_3^u x^N (and the dual words) form a basis", N);
  }

  for (int i = 1; i <= 3; ++i) check_decomposition(rep, N, i, opts);
  return rep;
}

}  // namespace sl4cube::detail
