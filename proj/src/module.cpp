#include "rescat/module.hpp"

#include <sstream>

#include "rescat/errors.hpp"
#include "rescat/submodule.hpp"

namespace rescat {

int Resolution::length() const {
  if (F.empty() || F[0].rank() == 0) return -1;
  return static_cast<int>(d.size());
}

bool Resolution::minimal() const {
  for (const Matrix& m : d)
    if (!m.is_minimal()) return false;
  return true;
}

std::vector<std::size_t> Resolution::betti() const {
  std::vector<std::size_t> out;
  for (const FreeModule& f : F) out.push_back(f.rank());
  return out;
}

Module::Module(GradedRingPtr R, Matrix presentation)
    : R_(std::move(R)), pres_(std::move(presentation)), cache_(std::make_shared<Cache>()) {
  if (!pres_.is_homogeneous()) throw InputError("presentation matrix is not homogeneous");
}

Module Module::free(GradedRingPtr R, FreeModule F) { return Module(std::move(R), Matrix(F, FreeModule{})); }

Module Module::zero(GradedRingPtr R) { return Module(std::move(R), Matrix()); }

Module Module::cyclic(GradedRingPtr R, const std::vector<Poly>& ideal_gens, int shift) {
  FreeModule src;
  std::vector<Poly> gens;
  for (const Poly& g : ideal_gens) {
    if (g.empty()) continue;
    if (!is_homogeneous(g)) throw InputError("cyclic module needs homogeneous generators");
    gens.push_back(g);
    src.deg.push_back(poly_degree(g) + shift);
  }
  Matrix m(FreeModule{{shift}}, src);
  for (std::size_t j = 0; j < gens.size(); ++j) m.at(0, j) = gens[j];
  return Module(std::move(R), m);
}

Module Module::from_minimal(GradedRingPtr R, Matrix presentation) {
  Module m(std::move(R), std::move(presentation));
  m.cache_->is_minimal = true;
  return m;
}

Module Module::from_resolution(GradedRingPtr R, Resolution res) {
  Matrix pres = res.d.empty() ? Matrix(res.F.empty() ? FreeModule{} : res.F[0], FreeModule{}) : res.d[0];
  Module m = from_minimal(std::move(R), pres);
  m.cache_->res = std::move(res);
  m.cache_->res_started = true;
  return m;
}

MinimalPresentation prune_presentation(const Matrix& A0, const GradedRing& R) {
  const PolyRing& P = R.poly();
  const TermOrder g = TermOrder::grevlex(P);
  Matrix A = reduce_entries(A0, R);
  Matrix T = identity(A.tgt());
  std::vector<std::size_t> kept(A.rows());
  for (std::size_t i = 0; i < kept.size(); ++i) kept[i] = i;

  while (true) {
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t j = 0; j < A.cols() && !found; ++j)
      for (std::size_t i = 0; i < A.rows(); ++i) {
        const Poly& e = A.at(i, j);
        if (e.size() == 1 && e[0].m.is_one()) {
          pi = i;
          pj = j;
          found = true;
          break;
        }
      }
    if (!found) break;
    const uint32_t cinv = P.inv(A.at(pi, pj)[0].c);
    // clear row pi outside column pj
    for (std::size_t l = 0; l < A.cols(); ++l) {
      if (l == pj || A.at(pi, l).empty()) continue;
      Poly f = scale(A.at(pi, l), cinv, P);
      for (std::size_t k = 0; k < A.rows(); ++k) {
        if (A.at(k, pj).empty()) continue;
        A.at(k, l) = R.reduce(sub(A.at(k, l), poly_mul(f, A.at(k, pj), P), g));
      }
    }
    // generator pi = -c^{-1} sum_{k != pi} a_{k,pj} e_k
    for (std::size_t k = 0; k < A.rows(); ++k) {
      if (k == pi || A.at(k, pj).empty()) continue;
      Poly f = scale(A.at(k, pj), P.neg(cinv), P);
      for (std::size_t c = 0; c < T.cols(); ++c) {
        if (T.at(pi, c).empty()) continue;
        T.at(k, c) = R.reduce(add(T.at(k, c), poly_mul(f, T.at(pi, c), P), g));
      }
    }
    std::vector<std::size_t> rows, cols;
    for (std::size_t k = 0; k < A.rows(); ++k)
      if (k != pi) rows.push_back(k);
    for (std::size_t l = 0; l < A.cols(); ++l)
      if (l != pj) cols.push_back(l);
    A = A.select_rows(rows).select_columns(cols);
    T = T.select_rows(rows);
    kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(pi));
  }
  MinimalPresentation out;
  out.pres = minimize_columns(A, R);
  out.to_min = T;
  out.kept = kept;
  return out;
}

const MinimalPresentation& Module::minimal() const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  if (!cache_->minimal) {
    if (cache_->is_minimal) {
      auto mp = std::make_unique<MinimalPresentation>();
      mp->pres = pres_;
      mp->to_min = identity(pres_.tgt());
      for (std::size_t i = 0; i < pres_.rows(); ++i) mp->kept.push_back(i);
      cache_->minimal = std::move(mp);
    } else {
      cache_->minimal = std::make_unique<MinimalPresentation>(prune_presentation(pres_, *R_));
    }
  }
  return *cache_->minimal;
}

Module Module::minimized() const {
  Module m(R_, minimal().pres);
  m.cache_->is_minimal = true;
  {
    std::lock_guard<std::recursive_mutex> lock(cache_->mu);
    if (cache_->res_started) {
      std::lock_guard<std::recursive_mutex> lock2(m.cache_->mu);
      m.cache_->res = cache_->res;
      m.cache_->res_started = true;
    }
  }
  return m;
}

Resolution Module::resolution(int steps) const {
  std::lock_guard<std::recursive_mutex> lock(cache_->mu);
  Resolution& res = cache_->res;
  if (!cache_->res_started) {
    const Matrix& d1 = minimal().pres;
    res.F.push_back(d1.tgt());
    if (d1.rows() == 0 || d1.cols() == 0) {
      res.terminated = true;
    } else {
      res.d.push_back(d1);
      res.F.push_back(d1.src());
    }
    cache_->res_started = true;
  }
  while (!res.terminated && static_cast<int>(res.d.size()) < steps) {
    Matrix K = kernel(res.d.back(), *R_);
    if (K.cols() == 0) {
      res.terminated = true;
    } else {
      res.F.push_back(K.src());
      res.d.push_back(std::move(K));
    }
  }
  return res;
}

Module direct_sum(const Module& a, const Module& b) {
  if (!a.ring().same_as(b.ring())) throw InputError("direct sum of modules over different rings");
  return Module(a.ring_ptr(), block_sum(a.presentation(), b.presentation()));
}

Module direct_sum(const std::vector<Module>& ms) {
  if (ms.empty()) throw InvariantError("direct sum of nothing");
  Module acc = ms[0];
  for (std::size_t i = 1; i < ms.size(); ++i) acc = direct_sum(acc, ms[i]);
  return acc;
}

Module shift_degrees(const Module& M, int shift) {
  const Matrix& A = M.presentation();
  FreeModule t = A.tgt(), s = A.src();
  for (int& d : t.deg) d += shift;
  for (int& d : s.deg) d += shift;
  Matrix B(t, s);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) B.at(i, j) = A.at(i, j);
  return Module(M.ring_ptr(), B);
}

Module subquotient(const Matrix& Z, const Matrix& B, const GradedRingPtr& R) {
  Matrix K = kernel(concat_columns(Z, B), *R);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < Z.cols(); ++i) rows.push_back(i);
  Matrix rel = K.select_rows(rows);
  return Module(R, rel);
}

std::string format_betti(const Resolution& res) {
  std::ostringstream os;
  for (std::size_t i = 0; i < res.F.size(); ++i) {
    const FreeModule& f = res.F[i];
    if (f.rank() == 0 && i > 0) break;
    os << i << ": (" << f.rank();
    for (int d : f.deg) os << ", " << d;
    os << ")\n";
  }
  return os.str();
}

std::string format_module(const Module& M) {
  const Matrix& A = M.presentation();
  const PolyRing& P = M.ring().poly();
  std::ostringstream os;
  os << "gens";
  for (int d : A.tgt().deg) os << ' ' << d;
  os << '\n';
  for (std::size_t j = 0; j < A.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < A.rows() && zero; ++i) zero = A.at(i, j).empty();
    if (zero) continue;
    os << "rel";
    for (std::size_t i = 0; i < A.rows(); ++i) os << (i ? "; " : " ") << P.format(A.at(i, j));
    os << '\n';
  }
  return os.str();
}

}  // namespace rescat
