#include "rescat/sequences.hpp"

#include "rescat/errors.hpp"
#include "rescat/submodule.hpp"

namespace rescat {

namespace {

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Every column of B lies in the column span of A modulo I.
bool in_span(const Matrix& B, const Matrix& A, const GradedRing& R) {
  if (B.cols() == 0 || B.rows() == 0) return true;
  if (A.cols() == 0) return reduce_entries(B, R).is_zero();
  return columns_contained(B, A, R);
}

Module free_rank_one(const GradedRingPtr& R) { return Module::free(R, FreeModule{{0}}); }

Matrix negate(const Matrix& a, const PolyRing& P) {
  Matrix out(a.tgt(), a.src());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = scale(a.at(i, j), P.neg(1), P);
  return out;
}

// Rewrites every term on its minimal presentation, transporting the maps.
ExactSequence minimize(const ExactSequence& s) {
  ExactSequence out;
  for (const Module& m : s.terms) out.terms.push_back(m.minimized());
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    const MinimalPresentation& a = s.terms[i].minimal();
    const MinimalPresentation& b = s.terms[i + 1].minimal();
    const GradedRing& R = s.terms[i].ring();
    out.maps.push_back(compose(b.to_min, s.maps[i].select_columns(a.kept), R));
  }
  return out;
}

}  // namespace

Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
  if (!(top.src() == bottom.src())) throw InvariantError("stacking maps with different sources");
  Matrix out(direct_sum(top.tgt(), bottom.tgt()), top.src());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) out.at(i, j) = top.at(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) out.at(top.rows() + i, j) = bottom.at(i, j);
  }
  return out;
}

Matrix map_kernel(const Matrix& f, const Module& src, const Module& tgt) {
  const GradedRing& R = src.ring();
  const FreeModule& S = src.generators();
  if (S.rank() == 0) return Matrix(S, FreeModule{});
  if (tgt.generators().rank() == 0) return identity(S);
  Matrix K = kernel(concat_columns(f, tgt.presentation()), R);
  return minimize_columns(K.select_rows(iota(S.rank())), R);
}

Module map_image(const Matrix& f, const Module& tgt) {
  if (f.cols() == 0 || f.rows() == 0) return Module::zero(tgt.ring_ptr());
  return subquotient(f, tgt.presentation(), tgt.ring_ptr());
}

SequenceCheck verify_exact(const ExactSequence& s) {
  const std::size_t k = s.terms.size();
  if (k == 0) return {};
  if (s.maps.size() + 1 != k) return {false, "map count does not match term count"};
  const GradedRing& R = s.terms[0].ring();
  auto fail = [](std::string why) { return SequenceCheck{false, std::move(why)}; };

  for (std::size_t i = 0; i + 1 < k; ++i) {
    const Matrix& f = s.maps[i];
    const std::string at = "map " + std::to_string(i);
    if (!(f.src() == s.terms[i].generators()) || !(f.tgt() == s.terms[i + 1].generators()))
      return fail(at + ": shape does not match the terms");
    if (!f.is_homogeneous()) return fail(at + ": not homogeneous of degree 0");
    if (!in_span(compose(f, s.terms[i].presentation(), R), s.terms[i + 1].presentation(), R))
      return fail(at + ": not well defined");
  }
  for (std::size_t i = 0; i + 2 < k; ++i)
    if (!in_span(compose(s.maps[i + 1], s.maps[i], R), s.terms[i + 2].presentation(), R))
      return fail("maps " + std::to_string(i) + "," + std::to_string(i + 1) + " do not compose to zero");

  if (k == 1) {
    if (!s.terms[0].is_zero()) return fail("single nonzero term");
    return {};
  }
  if (!in_span(map_kernel(s.maps[0], s.terms[0], s.terms[1]), s.terms[0].presentation(), R))
    return fail("not exact at term 0");
  for (std::size_t i = 1; i + 1 < k; ++i) {
    Matrix K = map_kernel(s.maps[i], s.terms[i], s.terms[i + 1]);
    Matrix span = concat_columns(s.maps[i - 1], s.terms[i].presentation());
    if (!in_span(K, span, R)) return fail("not exact at term " + std::to_string(i));
  }
  const Module& last = s.terms[k - 1];
  if (!in_span(identity(last.generators()), concat_columns(s.maps[k - 2], last.presentation()), R))
    return fail("not exact at term " + std::to_string(k - 1));
  return {};
}

bool hilbert_additive(const ExactSequence& s) {
  Laurent acc;
  for (std::size_t i = 0; i < s.terms.size(); ++i)
    acc = laurent_add(acc, hilbert_numerator(s.terms[i]), i % 2 ? -1 : 1);
  return laurent_is_zero(acc);
}

Prop15 prop1_5_sequence(const Module& M) {
  const GradedRingPtr& R = M.ring_ptr();
  const Module Rf = free_rank_one(R);
  Module Mm = M.minimized();
  Resolution res = Mm.resolution(3);
  auto F = [&](std::size_t i) { return i < res.F.size() ? res.F[i] : FreeModule{}; };
  const Matrix d1 = res.d.size() > 0 ? res.d[0] : zero_map(F(0), F(1));
  const Matrix d2 = res.d.size() > 1 ? res.d[1] : zero_map(F(1), F(2));

  Module trM(R, d1.dual());
  Homology e1 = ext_data(Mm, Rf, 1);
  Homology e2 = ext_data(Mm, Rf, 2);
  Module om2 = syzygy(Mm, 2);
  HomData h = hom_data(om2, Rf);

  const FreeModule F1d = F(1).dual(), F2d = F(2).dual();
  Matrix z1 = e1.cycles.cols() ? e1.cycles : Matrix(F1d, FreeModule{});
  Matrix z2 = e2.cycles.cols() ? e2.cycles : Matrix(F2d, FreeModule{});
  Matrix zh = h.embedding.cols() ? h.embedding : Matrix(F2d, FreeModule{});

  Matrix f2 = zh.cols() ? lift_matrix(zh, d2.dual(), *R) : zero_map(zh.src(), F1d);
  Matrix f3 = z2.cols() && zh.cols() ? lift_matrix(z2, zh, *R) : zero_map(z2.src(), zh.src());

  ExactSequence seq;
  seq.terms = {z1.cols() ? e1.module : Module::zero(R), trM, zh.cols() ? h.module : Module::zero(R),
               z2.cols() ? e2.module : Module::zero(R)};
  seq.maps = {z1, f2, f3};

  Module image = map_image(f2, seq.terms[2]);
  Module otr = syzygy(transpose(syzygy(Mm, 1)), 1);
  Module a = free_summand_split(image).reduced;
  Module b = free_summand_split(otr).reduced;
  bool matches = a.is_zero() || b.is_zero() ? a.is_zero() && b.is_zero() : find_isomorphism(a, b).has_value();
  return Prop15{std::move(seq), std::move(image), std::move(otr), matches};
}

McmApproximation mcm_approximation(const Module& X) {
  const GradedRingPtr& R = X.ring_ptr();
  if (!X.ring().is_gorenstein()) throw PreconditionError("maximal Cohen-Macaulay approximation needs a Gorenstein ring");
  const Module Rf = free_rank_one(R);
  Module Xm = X.minimized();
  McmApproximation out;
  int n = 0;
  while (!is_mcm(syzygy(Xm, n))) {
    if (++n > X.ring().dim()) throw InvariantError("no maximal Cohen-Macaulay syzygy up to the dimension");
  }
  out.n = n;
  if (n == 0) {
    out.seq.terms = {Module::zero(R), Xm, Xm};
    out.seq.maps = {Matrix(Xm.generators(), FreeModule{}), identity(Xm.generators())};
    return out;
  }

  Resolution res = Xm.resolution(n + 1);
  Module Y = syzygy(Xm, n);
  HomData hy = hom_data(Y, Rf);
  const Module& ystar = hy.module;
  for (std::size_t i = 0; i < ystar.minimal().kept.size(); ++i)
    if (ystar.minimal().kept[i] != i) throw InvariantError("dual of a syzygy lost a generator");
  Resolution g = ystar.resolution(n + 1);
  auto G = [&](int j) { return j < static_cast<int>(g.F.size()) ? g.F[j] : FreeModule{}; };
  auto e = [&](int j) { return j - 1 < static_cast<int>(g.d.size()) ? g.d[j - 1] : zero_map(G(j - 1), G(j)); };

  // Chain map from the coresolution 0 -> Y -> G_0^* -> ... -> G_{n-1}^*
  // into the resolution 0 -> Y -> F_{n-1} -> ... -> F_0, extending the
  // identity of Y.
  Matrix alpha = lift_matrix(hy.embedding, res.d[n - 1].dual(), *R).dual();
  for (int j = 1; j < n; ++j) {
    Matrix target = compose(res.d[n - j - 1], alpha, *R);
    if (G(j).rank() == 0) {
      if (!target.is_zero()) throw InvariantError("chain map does not extend");
      alpha = zero_map(target.tgt(), FreeModule{});
    } else {
      alpha = lift_matrix(e(j), target.dual(), *R).dual();
    }
  }

  const FreeModule Gd = G(n - 1).dual();
  Matrix crel = G(n).rank() ? kernel(e(n).dual(), *R) : identity(Gd);
  const FreeModule& F0 = Xm.generators();
  Module Cp(R, block_sum(crel, Matrix(F0, FreeModule{})));
  Matrix psi = concat_columns(alpha, identity(F0));
  Matrix fk = map_kernel(psi, Cp, Xm);
  Module Fm = fk.cols() ? subquotient(fk, Cp.presentation(), R) : Module::zero(R);
  ExactSequence s;
  s.terms = {Fm, Cp, Xm};
  s.maps = {fk.cols() ? fk : Matrix(Cp.generators(), FreeModule{}), psi};
  out.seq = minimize(s);
  return out;
}

LciSplit lci_split(const Module& M) {
  const GradedRingPtr& R = M.ring_ptr();
  const PolyRing& P = M.ring().poly();
  LciSplit out{Module::zero(R), Module::zero(R), mcm_approximation(M), {}, {}};
  const Module& Fm = out.approx.seq.terms[0];
  const Module& C = out.approx.seq.terms[1];
  const Module& X = out.approx.seq.terms[2];
  const Matrix& fk = out.approx.seq.maps[0];
  const Matrix& psi = out.approx.seq.maps[1];

  HomData hc = hom_data(C, free_rank_one(R));
  const FreeModule& Xg = X.generators();
  const FreeModule Q = hc.embedding.src().dual();
  Matrix kappa = hc.embedding.cols() ? hc.embedding.dual() : Matrix(Q, C.generators());

  Module omega_inv(R, kappa);
  const Matrix& Ax = X.presentation();
  Matrix lpres = concat_columns(stack_rows(Ax, zero_map(Q, Ax.src())), stack_rows(psi, negate(kappa, P)));
  Module L(R, lpres);

  out.pushout.terms = {X, L, omega_inv};
  out.pushout.maps = {stack_rows(identity(Xg), zero_map(Q, Xg)), concat_columns(zero_map(Q, Xg), identity(Q))};
  out.free_side.terms = {Fm, Module::free(R, Q), L};
  out.free_side.maps = {compose(kappa, fk, *R), stack_rows(zero_map(Xg, Q), identity(Q))};
  out.pd_part = L.minimized();
  out.mcm_part = omega_inv.minimized();
  return out;
}

}  // namespace rescat
