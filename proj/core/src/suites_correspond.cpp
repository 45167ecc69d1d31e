#include <algorithm>

#include "sl4cube/correspond.hpp"
#include "sl4cube/decompose.hpp"
#include "suite_util.hpp"

namespace sl4cube::detail {

namespace {

QVector act_T(const TAlgebra& T, GeneratorId g, const QVector& b) {
  return g.kind == Kind::A ? T.calA(g.index, b) : T.calAstar(g.index, b);
}

QMatrix columns(const std::vector<QVector>& cols, std::size_t rows) { return QMatrix::from_columns(cols, rows); }

// Intertwining of theta with all six generators, and the Wedderburn
// correspondence; shared by the main run and the second basepoint.
void theta_module_checks(const TAlgebra& T, int N, Probe& inter, Probe& wed) {
  for (Basis b : {Basis::monomial, Basis::starred})
    for (const PolyVec& v : basis_vectors(N, b))
      for (GeneratorId g : all_generators()) {
        const QVector lhs = theta_scaled(T, act_generator(g, v), N);
        const QVector rhs = act_T(T, g, theta_scaled(T, v, N));
        inter.require(lhs == rhs, [&] { return "theta' and " + name(g) + " disagree at " + v.str(); });
      }

  const auto summands = graded_decomposition(1, N);
  const auto parts = wedderburn(T);
  wed.require(summands.size() == parts.size(), [&] { return std::to_string(summands.size()) + " graded summands"; });
  for (const GradedSummand& gs : summands) {
    const auto part = std::find_if(parts.begin(), parts.end(), [&](const WedderburnPart& w) { return w.ell == gs.ell; });
    if (part == parts.end()) {
      wed.fail("no Wedderburn ideal for l = " + std::to_string(gs.ell));
      continue;
    }
    std::vector<QVector> img;
    for (const PolyVec& v : gs.basis) img.push_back(theta_scaled(T, v, N));
    const QMatrix I = columns(img, T.dim());
    const QMatrix J = columns(part->ideal, T.dim());
    wed.require(rank(I) == part->ideal.size() && in_column_span(J, I) && in_column_span(I, J), [&] {
      return "theta' of summand " + std::to_string(gs.ell) + " does not span phi_l T (rank " + std::to_string(rank(I)) +
             " vs " + std::to_string(part->ideal.size()) + ")";
    });
  }
}

}  // namespace

VerificationReport run_correspond(int N, const SuiteOptions& opts) {
  VerificationReport rep;
  const Hypercube cube(N);
  const Vertex kappa = opts.basepoint;
  if (kappa >= cube.order()) {
    rep.skip("correspond.basepoint", "basepoint is a vertex", N, "basepoint " + std::to_string(kappa) + " outside the cube");
    return rep;
  }
  const TAlgebra T(cube, kappa);
  const auto profiles = enumerate_profiles(N);
  const std::size_t n = profiles.size();
  const Rational nf = factorial(N), two_n(Integer(1) << N);
  const bool oracle = N <= opts.oracle_n_max && N <= opts.tensor_n_max;
  const auto mono = basis_vectors(N, Basis::monomial);
  const auto star = basis_vectors(N, Basis::starred);
  auto rng = rng_for(opts, Suite::correspond, N);
  auto oracle_skip = [&](const std::string& id, const std::string& anchor) {
    rep.skip(id, anchor, N, "tensor route runs for N <= " + std::to_string(std::min(opts.oracle_n_max, opts.tensor_n_max)));
  };

  // ddag'
  {
    Probe inter;
    for (const PolyVec& v : mono)
      for (GeneratorId g : all_generators())
        inter.require(ddag_scaled(act_generator(g, v), N) == act_abstract(g, ddag_scaled(v, N)),
                      [&] { return "ddag' and " + name(g) + " disagree at " + v.str(); });
    for (const PolyVec& v : star)
      for (GeneratorId g : all_generators())
        inter.require(ddag_scaled_starred(act_generator(g, v), N) == act_abstract(g, ddag_scaled_starred(v, N)),
                      [&] { return "ddag' and " + name(g) + " disagree at " + v.str(); });
    inter.report(rep, "correspond.ddag.intertwine", "ddag' commutes with A_i, A*_i <-> A^(i), A*^(i)", N);
  }

  const QMatrix M = fix_change_of_basis(T);
  {
    Probe cb;
    cb.require(M == conversion_matrix(N), [] { return std::string("B~* in B~ coordinates differs from x* in x coordinates"); });
    cb.require(M * M == QMatrix::identity(n), [] { return std::string("change of basis on Fix(G) is not an involution"); });
    for (const PolyVec& v : star)
      cb.require(to_basis(T, ddag_scaled_starred(v, N), FixBasis::Btilde) ==
                     ddag_scaled(convert_basis(v, Basis::monomial), N),
                 [&] { return "starred and monomial routes differ at " + v.str(); });
    cb.report(rep, "correspond.ddag.consistency", "ddag'(x*^p) = ddag'(x*^p expanded in x^q)", N);
  }

  {
    Probe form, pair;
    const Rational scale = ddag_map(N).scale_squared;
    for (const auto* A : {&mono, &star})
      for (const auto* B : {&mono, &star})
        for (const PolyVec& f : *A)
          for (const PolyVec& g : *B) {
            const FixVec df = f.basis() == Basis::monomial ? ddag_scaled(f, N) : ddag_scaled_starred(f, N);
            const FixVec dg = g.basis() == Basis::monomial ? ddag_scaled(g, N) : ddag_scaled_starred(g, N);
            form.require(fix_inner(T, df, dg) == scale * hermitian(f, g),
                         [&] { return "<ddag' f, ddag' g> at f = " + f.str() + ", g = " + g.str(); });
          }
    const QMatrix& G = calP_genfunc_table(N);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        pair.require(fix_inner(T, ddag_scaled(mono[a], N), ddag_scaled_starred(star[b], N)) == nf * nf * G(a, b),
                     [&] { return "<ddag' x^p, ddag' x*^P> != (N!)^2 calP at " + to_string(profiles[a]) + ";" + to_string(profiles[b]); });
    form.report(rep, "correspond.ddag.form", "<ddag' f, ddag' g> = N! 2^N <f, g>", N);
    pair.report(rep, "correspond.ddag.pairing", "<ddag' x^p, ddag' x*^P> = N! 2^N (N!/2^N) calP(p;P)", N);
  }

  if (oracle) {
    Probe tr;
    for (const Profile& p : profiles) {
      const TripleTensor want = profile_factorial(p) * b_vector(N, p);
      tr.require(lift(cube, ddag_scaled(PolyVec::term(p, Basis::monomial), N)) == want,
                 [&] { return "ddag'(x^p) != p! B(p) at " + to_string(p); });
      const TripleTensor want_s = profile_factorial(p) * bstar_vector(cube, p);
      tr.require(lift(cube, ddag_scaled_starred(PolyVec::term(p, Basis::starred), N)) == want_s,
                 [&] { return "ddag'(x*^p) != p! B*(p) at " + to_string(p); });
      const PolyVec expanded = convert_basis(PolyVec::term(p, Basis::starred), Basis::monomial);
      tr.require(lift(cube, ddag_scaled(expanded, N)) == want_s,
                 [&] { return "consistency triangle fails at " + to_string(p); });
    }
    tr.report(rep, "correspond.ddag.tensor", "ddag'(x^p) = p! B(p), ddag'(x*^p) = p! B*(p) in V (x) V (x) V", N);
  } else {
    oracle_skip("correspond.ddag.tensor", "ddag' rules in V (x) V (x) V");
  }

  // eps'
  {
    Probe inter;
    for (FixBasis b : {FixBasis::Btilde, FixBasis::BstarTilde})
      for (const Profile& p : profiles) {
        const FixVec u = FixVec::unit(b, p);
        for (GeneratorId g : all_generators())
          inter.require(eps_scaled(T, act_abstract(g, u)) == act_T(T, g, eps_scaled(T, u)), [&] {
            return "eps' and " + name(g) + " disagree at " + (b == FixBasis::Btilde ? "B~" : "B~*") + to_string(p);
          });
      }
    inter.report(rep, "correspond.eps.intertwine", "eps' commutes with A^(i), A*^(i) <-> calA^(i), calA*^(i)", N);

    Probe form;
    const Rational scale = eps_map(N).scale_squared;
    std::vector<FixVec> all;
    for (FixBasis b : {FixBasis::Btilde, FixBasis::BstarTilde})
      for (const Profile& p : profiles) all.push_back(FixVec::unit(b, p));
    for (int k = 0; k < 4; ++k)
      all.push_back({k % 2 ? FixBasis::BstarTilde : FixBasis::Btilde, N, random_vector(rng, n)});
    for (const FixVec& u : all)
      for (const FixVec& v : all)
        form.require(T.inner(eps_scaled(T, u), eps_scaled(T, v)) == scale * fix_inner(T, u, v),
                     [] { return std::string("<eps' u, eps' v> != 2^-N <u, v>"); });
    form.report(rep, "correspond.eps.form", "<eps' u, eps' v> = 2^-N <u, v> on Fix(G)", N);

    std::vector<QVector> img;
    for (const Profile& p : profiles) img.push_back(eps_scaled(T, FixVec::unit(FixBasis::Btilde, p)));
    const std::size_t r = rank(columns(img, T.dim()));
    rep.expect("correspond.eps.rank", "eps' restricted to Fix(G) is a bijection onto T", N, r == n && T.dim() == n,
               [&] { return "rank " + std::to_string(r); });
  }

  if (oracle) {
    Probe rules, routes;
    for (const Profile& p : profiles) {
      const TripleIndex t = triple_of(p);
      const auto cb = T.coords_of(eps_scaled(cube, kappa, b_vector(N, p)));
      rules.require(cb && *cb == T.unit({t.h, t.j, t.i}), [&] { return "eps'(B(p)) != E*_j A_h E*_i at " + to_string(p); });
      const auto cq = T.coords_of(eps_scaled(cube, kappa, bstar_vector(cube, p)));
      rules.require(cq && *cq == T.dual_basis()[T.position(t)], [&] { return "eps'(B*(p)) != E_i A*_h E_j at " + to_string(p); });
    }
    for (FixBasis b : {FixBasis::Btilde, FixBasis::BstarTilde}) {
      const FixVec u{b, N, random_vector(rng, n)};
      const auto c = T.coords_of(eps_scaled(cube, kappa, lift(cube, u)));
      routes.require(c && *c == eps_scaled(T, u), [] { return std::string("tensor and basis-formula routes differ"); });
    }
    rules.report(rep, "correspond.eps.rules", "eps'(B(p)) = E*_j A_h E*_i, eps'(B*(p)) = E_i A*_h E_j", N);
    routes.report(rep, "correspond.eps.routes", "eps' via V (x) V (x) V agrees with the basis formulas", N);
  } else {
    oracle_skip("correspond.eps.rules", "eps' basis rules in V (x) V (x) V");
    oracle_skip("correspond.eps.routes", "eps' tensor and basis routes agree");
  }

  // theta'
  {
    Probe rules;
    for (const Profile& p : profiles) {
      const TripleIndex t = triple_of(p);
      const Rational pf = profile_factorial(p);
      rules.require(theta_scaled(T, mono[profile_index(p)], N) == pf * T.unit({t.h, t.j, t.i}),
                    [&] { return "theta'(x^p) != p! E*_j A_h E*_i at " + to_string(p); });
      rules.require(theta_scaled(T, star[profile_index(p)], N) == pf * T.dual_basis()[T.position(t)],
                    [&] { return "theta'(x*^p) != p! E_i A*_h E_j at " + to_string(p); });
    }
    // theta' = eps' o ddag' on both bases.
    for (const PolyVec& v : mono)
      rules.require(theta_scaled(T, v, N) == eps_scaled(T, ddag_scaled(v, N)), [&] { return "theta' != eps' ddag' at " + v.str(); });
    for (const PolyVec& v : star)
      rules.require(theta_scaled(T, v, N) == eps_scaled(T, ddag_scaled_starred(v, N)),
                    [&] { return "theta' != eps' ddag' at " + v.str(); });
    rules.require(ddag_map(N).scale_squared * eps_map(N).scale_squared == theta_map(N).scale_squared,
                  [] { return std::string("scale bookkeeping"); });
    if (oracle)
      for (const PolyVec& v : mono) {
        const auto c = T.coords_of(eps_scaled(cube, kappa, lift(cube, ddag_scaled(v, N))));
        rules.require(c && *c == theta_scaled(T, v, N), [&] { return "theta' != tensor composite at " + v.str(); });
      }
    rules.report(rep, "correspond.theta.rules", "theta'(x^p) = p! E*_j A_h E*_i, theta'(x*^p) = p! E_i A*_h E_j, theta' = eps' ddag'", N);
  }

  {
    Probe inter, wed;
    theta_module_checks(T, N, inter, wed);
    inter.report(rep, "correspond.theta.intertwine", "theta' commutes with A_i, A*_i <-> calA^(i), calA*^(i)", N);

    Probe form;
    const Rational scale = theta_map(N).scale_squared;
    std::vector<PolyVec> all(mono);
    all.insert(all.end(), star.begin(), star.end());
    for (int k = 0; k < 4; ++k) all.push_back(random_poly(rng, N, k % 2 ? Basis::starred : Basis::monomial));
    std::vector<QVector> img;
    for (const PolyVec& f : all) img.push_back(theta_scaled(T, f, N));
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a; b < all.size(); ++b)
        form.require(T.inner(img[a], img[b]) == scale * hermitian(all[a], all[b]),
                     [&] { return "<theta' f, theta' g> at f = " + all[a].str() + ", g = " + all[b].str(); });
    form.report(rep, "correspond.theta.form", "<theta' f, theta' g> = N! <f, g>", N);

    const std::size_t r = rank(columns(std::vector<QVector>(img.begin(), img.begin() + static_cast<long>(n)), T.dim()));
    rep.expect("correspond.theta.rank", "theta' is a bijection P_N -> T", N, r == n && T.dim() == n,
               [&] { return "rank " + std::to_string(r); });

    Probe sig;
    for (const auto* B : {&mono, &star})
      for (const PolyVec& v : *B)
        sig.require(theta_scaled(T, sigma(v), N) == T.S(theta_scaled(T, v, N)),
                    [&] { return "theta' sigma != S theta' at " + v.str(); });
    sig.require(is_zero(T.S(QVector(T.dim()))), [] { return std::string("S(0) != 0"); });
    sig.report(rep, "correspond.sigma_S", "theta' o sigma = S o theta'", N);

    Probe cas;
    const QVector phi = T.phi();
    for (const auto* B : {&mono, &star})
      for (const PolyVec& v : *B)
        cas.require(theta_scaled(T, apply_C(1, v), N) == T.product(phi, theta_scaled(T, v, N)),
                    [&] { return "theta' C_1 != phi theta' at " + v.str(); });
    cas.report(rep, "correspond.casimir", "theta'(C_1 f) = phi theta'(f)", N);

    wed.report(rep, "correspond.wedderburn", "theta' maps the l-th C_1 summand onto phi_l T", N);
  }

  if (N <= 3) {
    const Vertex k2 = static_cast<Vertex>(cube.order() - 1) ^ kappa;
    const TAlgebra T2(cube, k2);
    Probe inter, wed;
    theta_module_checks(T2, N, inter, wed);
    rep.expect("correspond.basepoint_independence", "theta' intertwines and matches phi_l T at a second basepoint", N,
               inter.ok() && wed.ok(), [&] { return "basepoint " + std::to_string(k2) + " fails"; });
  } else {
    rep.skip("correspond.basepoint_independence", "theta' at a second basepoint", N, "second basepoint checked for N <= 3");
  }
  return rep;
}

}  // namespace sl4cube::detail
