#include "rescat/homological.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "rescat/errors.hpp"
#include "rescat/submodule.hpp"

namespace rescat {

std::string ExtInt::str() const {
  switch (kind) {
    case NegInf: return "-∞";
    case PosInf: return "∞";
    case Finite: return std::to_string(value);
  }
  return "?";
}

Module residue_field(const GradedRingPtr& R) {
  std::vector<Poly> vars;
  for (int i = 0; i < R->poly().nvars(); ++i) vars.push_back(variable(R->poly(), i));
  return Module::cyclic(R, vars);
}

Module syzygy(const Module& M, int n) {
  if (n < 0) throw PreconditionError("syzygy index must be nonnegative");
  if (n == 0) return M.minimized();
  Resolution res = M.resolution(n + 1);
  if (res.length() < n) return Module::zero(M.ring_ptr());
  Resolution tail;
  tail.F.assign(res.F.begin() + n, res.F.end());
  tail.d.assign(res.d.begin() + n, res.d.end());
  tail.terminated = res.terminated;
  return Module::from_resolution(M.ring_ptr(), std::move(tail));
}

Module transpose(const Module& M) {
  const Matrix& d1 = M.minimal().pres;
  if (d1.cols() == 0) return Module::zero(M.ring_ptr());
  return Module(M.ring_ptr(), d1.dual()).minimized();
}

HomData hom_data(const Module& M, const Module& N) {
  if (!M.ring().same_as(N.ring())) throw InputError("Hom of modules over different rings");
  const GradedRingPtr& R = M.ring_ptr();
  const Matrix& A = M.minimal().pres;
  const Matrix& B = N.minimal().pres;
  const FreeModule F0d = A.tgt().dual(), F1d = A.src().dual();
  const FreeModule& G0 = B.tgt();
  const FreeModule amb = tensor(F0d, G0);
  if (amb.rank() == 0) return {Module::zero(R), Matrix(amb, FreeModule{})};

  Matrix Z;
  if (A.cols() == 0) {
    Z = identity(amb);
  } else {
    Matrix X = kron_left(A.dual(), G0);
    Matrix Y = kron_right(F1d, B);
    Matrix K = kernel(concat_columns(X, Y), *R);
    std::vector<std::size_t> rows(amb.rank());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    Z = minimize_columns(K.select_rows(rows), *R);
  }
  if (Z.cols() == 0) return {Module::zero(R), Z};
  Matrix Bs = kron_right(F0d, B);
  return {subquotient(Z, Bs, R), Z};
}

Module hom(const Module& M, const Module& N) { return hom_data(M, N).module; }

Module dual(const Module& M) {
  return hom(M, Module::free(M.ring_ptr(), FreeModule{{0}}));
}

namespace {

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Elements x of `amb` with X x in the image of Y, as columns.
Matrix preimage(const Matrix& X, const Matrix& Y, const GradedRing& R) {
  Matrix K = kernel(concat_columns(X, Y), R);
  return minimize_columns(K.select_rows(iota(X.cols())), R);
}

}  // namespace

Homology ext_data(const Module& M, const Module& N, int i) {
  if (i < 0) throw PreconditionError("Ext index must be nonnegative");
  const GradedRingPtr& R = M.ring_ptr();
  if (!M.ring().same_as(N.ring())) throw InputError("Ext of modules over different rings");
  Resolution res = M.resolution(i + 1);
  const Matrix& B = N.minimal().pres;
  const FreeModule& G0 = B.tgt();
  if (res.length() < i) return {Module::zero(R), Matrix(), Matrix()};
  const FreeModule Fid = res.F[i].dual();
  const FreeModule amb = tensor(Fid, G0);
  if (amb.rank() == 0) return {Module::zero(R), Matrix(amb, FreeModule{}), Matrix(amb, FreeModule{})};

  Matrix Z;
  if (static_cast<int>(res.d.size()) > i) {
    const Matrix& dn = res.d[i];  // d_{i+1}
    Z = preimage(kron_left(dn.dual(), G0), kron_right(dn.src().dual(), B), *R);
  } else {
    Z = identity(amb);
  }
  Matrix Bd = kron_right(Fid, B);
  if (i > 0) Bd = concat_columns(kron_left(res.d[i - 1].dual(), G0), Bd);
  if (Z.cols() == 0) return {Module::zero(R), Z, Bd};
  return {subquotient(Z, Bd, R), Z, Bd};
}

Module ext(const Module& M, const Module& N, int i) {
  if (i == 0) return hom(M, N);
  return ext_data(M, N, i).module;
}

Module tor(const Module& M, const Module& N, int i) {
  if (i < 0) throw PreconditionError("Tor index must be nonnegative");
  const GradedRingPtr& R = M.ring_ptr();
  if (!M.ring().same_as(N.ring())) throw InputError("Tor of modules over different rings");
  Resolution res = M.resolution(i + 1);
  if (res.length() < i) return Module::zero(R);
  const Matrix& B = N.minimal().pres;
  const FreeModule& G0 = B.tgt();
  const FreeModule amb = tensor(res.F[i], G0);
  if (amb.rank() == 0) return Module::zero(R);

  Matrix Z;
  if (i == 0) {
    Z = identity(amb);
  } else {
    const Matrix& di = res.d[i - 1];
    Z = preimage(kron_left(di, G0), kron_right(di.tgt(), B), *R);
  }
  if (Z.cols() == 0) return Module::zero(R);
  Matrix Bd = kron_right(res.F[i], B);
  if (static_cast<int>(res.d.size()) > i) Bd = concat_columns(kron_left(res.d[i], G0), Bd);
  return subquotient(Z, Bd, R);
}

ExtInt pd(const Module& M) {
  if (M.is_zero()) return ExtInt::neg_inf();
  const int cutoff = M.ring().depth() + 1;
  Resolution res = M.resolution(cutoff);
  if (res.terminated && res.length() < cutoff) return ExtInt::of(res.length());
  return ExtInt::pos_inf();
}

ExtInt depth(const Module& M) {
  if (M.is_zero()) return ExtInt::pos_inf();
  Module k = residue_field(M.ring_ptr());
  const int dim = M.ring().dim();
  for (int i = 0; i <= dim; ++i)
    if (!ext(k, M, i).is_zero()) return ExtInt::of(i);
  throw InvariantError("Ext(k, M) vanished up to the dimension of R for a nonzero module");
}

ExtInt depth_via_ambient(const Module& M) {
  if (M.is_zero()) return ExtInt::pos_inf();
  GradedRingPtr P = M.ring().ambient();
  const Matrix& A = M.minimal().pres;
  const auto& I = M.ring().ideal().gb();
  FreeModule extra;
  std::vector<std::tuple<std::size_t, const Poly*>> cols;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (const Poly& g : I) {
      extra.deg.push_back(A.tgt().deg[i] + poly_degree(g));
      cols.emplace_back(i, &g);
    }
  Matrix E(A.tgt(), extra);
  for (std::size_t c = 0; c < cols.size(); ++c) E.at(std::get<0>(cols[c]), c) = *std::get<1>(cols[c]);
  Module MP(P, concat_columns(A, E));
  const int n = M.ring().poly().nvars();
  Resolution res = MP.resolution(n + 1);
  if (!res.terminated) throw InvariantError("resolution over the polynomial ring did not terminate");
  return ExtInt::of(n - res.length());
}

bool is_mcm(const Module& M) {
  if (!M.ring().is_cm()) throw PreconditionError("maximal Cohen-Macaulay test needs a Cohen-Macaulay ring");
  if (M.is_zero()) return true;
  ExtInt d = depth(M);
  return d.finite() && d.value == M.ring().dim();
}

Module cosyzygy(const Module& M, int n) {
  if (!M.ring().is_gorenstein()) throw PreconditionError("cosyzygies need a Gorenstein ring");
  if (!is_mcm(M)) throw PreconditionError("cosyzygies need a maximal Cohen-Macaulay module");
  Module Z = M.minimized();
  for (int k = 0; k < n; ++k) Z = dual(syzygy(dual(Z), 1)).minimized();
  return Z;
}

Ideal annihilator(const Module& M) {
  const GradedRing& R = M.ring();
  const Matrix& A = M.minimal().pres;
  Ideal acc = R.ideal_with({constant(1)});
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Matrix e(A.tgt(), FreeModule{{A.tgt().deg[i]}});
    e.at(i, 0) = constant(1);
    Matrix K = kernel(concat_columns(e, A), R);
    std::vector<Poly> gens;
    for (std::size_t j = 0; j < K.cols(); ++j)
      if (!K.at(0, j).empty()) gens.push_back(K.at(0, j));
    Ideal Ji = R.ideal_with(gens);
    acc = i == 0 ? Ji : ideal_intersection(acc, Ji);
  }
  return Ideal(acc.ring_ptr(), acc.gb());
}

Ideal trace_ideal(const Module& M) {
  HomData H = hom_data(M, Module::free(M.ring_ptr(), FreeModule{{0}}));
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < H.embedding.rows(); ++i)
    for (std::size_t j = 0; j < H.embedding.cols(); ++j)
      if (!H.embedding.at(i, j).empty()) gens.push_back(H.embedding.at(i, j));
  return M.ring().ideal_with(gens);
}

FreeSplit free_summand_split(const Module& M) {
  Module tt = transpose(transpose(M));
  int n = static_cast<int>(M.num_generators()) - static_cast<int>(tt.num_generators());
  return {n, tt};
}

Laurent hilbert_numerator(const Module& M) {
  const GradedRing& R = M.ring();
  const Matrix& A = M.minimal().pres;
  const PolyRing& P = R.poly();
  TermOrder ord = module_order(P, A.tgt());
  GroebnerEngine eng(ord);
  for (const Vec& v : A.columns(ord)) eng.add(v);
  for (std::size_t c = 0; c < A.rows(); ++c)
    for (const Poly& g : R.ideal().gb()) eng.add(embed(g, static_cast<uint32_t>(c), ord));
  eng.complete();
  std::vector<std::vector<Monomial>> lead(A.rows());
  for (const Term& t : eng.leading_terms()) lead[t.comp].push_back(t.m);
  Laurent acc;
  for (std::size_t c = 0; c < A.rows(); ++c)
    acc = laurent_add(acc, laurent_shift(monomial_hilbert_numerator(lead[c], P), A.tgt().deg[c]));
  return acc;
}

std::vector<Monomial> monomials_of_degree(const PolyRing& P, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == P.nvars()) {
      if (left == 0) {
        cur.deg = d;
        out.push_back(cur);
      }
      return;
    }
    const int w = P.weights()[var];
    for (int e = 0; e * w <= left; ++e) {
      cur.e[var] = static_cast<uint16_t>(e);
      rec(var + 1, left - e * w);
    }
    cur.e[var] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return P.cmp(a, b) > 0; });
  return out;
}

bool same_betti(const Module& M, const Module& N) {
  auto key = [](const Matrix& A) {
    std::vector<int> a = A.tgt().deg, b = A.src().deg;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return std::make_pair(a, b);
  };
  return key(M.minimal().pres) == key(N.minimal().pres);
}

std::optional<Matrix> find_isomorphism(const Module& M, const Module& N, int attempts) {
  if (!same_betti(M, N)) return std::nullopt;
  const GradedRing& R = M.ring();
  const PolyRing& P = R.poly();
  const Matrix& A = M.minimal().pres;
  const Matrix& B = N.minimal().pres;
  const std::size_t nF = A.rows(), nG = B.rows();
  if (nF == 0) return Matrix(B.tgt(), A.tgt());
  HomData H = hom_data(M, N);
  const TermOrder g = TermOrder::grevlex(P);
  std::mt19937 rng(0x5eedu);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    Matrix Phi(B.tgt(), A.tgt());
    for (std::size_t l = 0; l < H.embedding.cols(); ++l) {
      const int need = -H.embedding.src().deg[l];
      if (need < 0) continue;
      Poly r;
      for (const Monomial& m : monomials_of_degree(P, need)) {
        uint32_t c = static_cast<uint32_t>(rng() % P.p());
        if (c) r.push_back(Term{m, 0, c});
      }
      if (r.empty()) continue;
      for (std::size_t j = 0; j < nF; ++j)
        for (std::size_t k = 0; k < nG; ++k) {
          const Poly& z = H.embedding.at(j * nG + k, l);
          if (z.empty()) continue;
          Phi.at(k, j) = add(Phi.at(k, j), poly_mul(r, z, P), g);
        }
    }
    Phi = reduce_entries(Phi, R);
    Matrix PB = concat_columns(Phi, B);
    if (!columns_contained(identity(B.tgt()), PB, R)) continue;
    Matrix K = kernel(PB, R);
    Matrix proj = K.select_rows(iota(nF));
    if (!columns_contained(proj, A, R)) continue;
    return Phi;
  }
  return std::nullopt;
}

}  // namespace rescat
