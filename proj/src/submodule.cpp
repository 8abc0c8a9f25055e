#include "rescat/submodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rescat/dense.hpp"
#include "rescat/errors.hpp"

namespace rescat {

TermOrder module_order(const PolyRing& P, const FreeModule& F) {
  TermOrder ord = TermOrder::grevlex(P);
  ord.twist = F.deg;
  return ord;
}

std::vector<Vec> columns_of(const Matrix& m, const PolyRing& P) {
  return m.columns(module_order(P, m.tgt()));
}

int vec_degree(const Vec& v, const FreeModule& F, int fallback) {
  if (v.empty()) return fallback;
  return v.front().m.deg + F.deg[v.front().comp];
}

Vec reduce_mod_ideal(const Vec& v, const GradedRing& R, const TermOrder& ord) {
  if (R.ideal().is_zero()) return v;
  std::map<uint32_t, Poly> parts;
  for (const Term& t : v) parts[t.comp].push_back(Term{t.m, 0, t.c});
  Vec out;
  TermOrder g = TermOrder::grevlex(R.poly());
  for (auto& [c, p] : parts) {
    normalize(p, g);
    for (const Term& t : R.reduce(p)) out.push_back(Term{t.m, c, t.c});
  }
  normalize(out, ord);
  return out;
}

SubmoduleGB::SubmoduleGB(const GradedRing& R, const Matrix& gens, bool tagged)
    : R_(R), nrows_(gens.rows()), ncols_(gens.cols()), tagged_(tagged) {
  const PolyRing& P = R.poly();
  amb_ord_ = module_order(P, gens.tgt());
  src_ord_ = module_order(P, gens.src());
  ord_ = TermOrder::grevlex(P);
  ord_.twist = gens.tgt().deg;
  if (tagged_) {
    ord_.twist.insert(ord_.twist.end(), gens.src().deg.begin(), gens.src().deg.end());
    ord_.block.assign(nrows_, 1);
    ord_.block.resize(nrows_ + ncols_, 0);
  }
  eng_ = std::make_unique<GroebnerEngine>(ord_);
  for (std::size_t j = 0; j < ncols_; ++j) {
    Vec v;
    for (std::size_t i = 0; i < nrows_; ++i)
      for (const Term& t : gens.at(i, j)) v.push_back(Term{t.m, static_cast<uint32_t>(i), t.c});
    if (tagged_) v.push_back(Term{P.one(), static_cast<uint32_t>(nrows_ + j), 1});
    eng_->add(std::move(v));
  }
  const auto& I = R.ideal().gb();
  const std::size_t ncomp = tagged_ ? nrows_ + ncols_ : nrows_;
  for (std::size_t c = 0; c < ncomp; ++c)
    for (const Poly& g : I) eng_->add(embed(g, static_cast<uint32_t>(c), ord_));
  eng_->complete();
}

Vec SubmoduleGB::reduce(const Vec& v) const {
  Vec r = eng_->reduce(v);
  normalize(r, amb_ord_);
  return r;
}

bool SubmoduleGB::contains(const Vec& v) const { return eng_->reduce(v).empty(); }

std::optional<Vec> SubmoduleGB::lift(const Vec& v) const {
  if (!tagged_) throw InvariantError("lift needs a tagged submodule basis");
  Vec r = eng_->reduce(v);
  Vec coeffs;
  const PolyRing& P = R_.poly();
  for (const Term& t : r) {
    if (t.comp < nrows_) return std::nullopt;
    coeffs.push_back(Term{t.m, static_cast<uint32_t>(t.comp - nrows_), P.neg(t.c)});
  }
  normalize(coeffs, src_ord_);
  return reduce_mod_ideal(coeffs, R_, src_ord_);
}

std::vector<Vec> SubmoduleGB::syzygies() const {
  if (!tagged_) throw InvariantError("syzygies need a tagged submodule basis");
  std::vector<Vec> out;
  for (const Vec& g : eng_->reduced_basis()) {
    if (g.front().comp < nrows_) continue;
    Vec s;
    for (const Term& t : g) s.push_back(Term{t.m, static_cast<uint32_t>(t.comp - nrows_), t.c});
    normalize(s, src_ord_);
    s = reduce_mod_ideal(s, R_, src_ord_);
    if (!s.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::size_t> minimal_generators(const GradedRing& R, const FreeModule& F,
                                            const std::vector<Vec>& elems) {
  const PolyRing& P = R.poly();
  TermOrder ord = module_order(P, F);
  std::vector<Vec> reduced(elems.size());
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    Vec v = elems[k];
    normalize(v, ord);
    reduced[k] = reduce_mod_ideal(v, R, ord);
    if (!reduced[k].empty()) {
      if (!is_homogeneous_vec(reduced[k], ord)) throw InvariantError("minimal generators need homogeneous elements");
      idx.push_back(k);
    }
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return vec_degree(reduced[a], F) < vec_degree(reduced[b], F);
  });

  GroebnerEngine eng(ord);
  for (std::size_t c = 0; c < F.rank(); ++c)
    for (const Poly& g : R.ideal().gb()) eng.add(embed(g, static_cast<uint32_t>(c), ord));

  std::vector<std::size_t> kept;
  std::size_t pos = 0;
  while (pos < idx.size()) {
    const int d = vec_degree(reduced[idx[pos]], F);
    std::size_t end = pos;
    while (end < idx.size() && vec_degree(reduced[idx[end]], F) == d) ++end;
    eng.complete(d);

    std::vector<Vec> nfs;
    std::map<std::pair<uint32_t, std::array<uint16_t, kMaxVars>>, std::size_t> col_of;
    for (std::size_t k = pos; k < end; ++k) {
      nfs.push_back(eng.reduce(reduced[idx[k]]));
      for (const Term& t : nfs.back()) col_of.emplace(std::make_pair(t.comp, t.m.e), 0);
    }
    std::size_t ncols = 0;
    for (auto& kv : col_of) kv.second = ncols++;
    std::vector<std::vector<uint32_t>> rows;
    for (const Vec& v : nfs) {
      std::vector<uint32_t> row(ncols, 0);
      for (const Term& t : v) row[col_of[{t.comp, t.m.e}]] = t.c;
      rows.push_back(std::move(row));
    }
    for (std::size_t r : select_independent(rows, ncols, P.p())) {
      kept.push_back(idx[pos + r]);
      eng.add(reduced[idx[pos + r]]);
    }
    pos = end;
  }
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    int da = vec_degree(reduced[a], F), db = vec_degree(reduced[b], F);
    if (da != db) return da < db;
    return a < b;
  });
  return kept;
}

Matrix kernel(const Matrix& A, const GradedRing& R) {
  SubmoduleGB gb(R, A, true);
  std::vector<Vec> syz = gb.syzygies();
  std::vector<std::size_t> keep = minimal_generators(R, A.src(), syz);
  FreeModule K;
  std::vector<Vec> cols;
  for (std::size_t k : keep) {
    K.deg.push_back(vec_degree(syz[k], A.src()));
    cols.push_back(reduce_mod_ideal(syz[k], R, module_order(R.poly(), A.src())));
  }
  return Matrix::from_columns(A.src(), K, cols, R.poly());
}

Matrix minimize_columns(const Matrix& A, const GradedRing& R) {
  std::vector<Vec> cols = columns_of(A, R.poly());
  std::vector<std::size_t> keep = minimal_generators(R, A.tgt(), cols);
  return reduce_entries(A.select_columns(keep), R);
}

bool columns_contained(const Matrix& B, const Matrix& A, const GradedRing& R) {
  if (!(A.tgt() == B.tgt())) throw InvariantError("comparing submodules of different free modules");
  SubmoduleGB gb(R, A, false);
  for (const Vec& v : columns_of(B, R.poly()))
    if (!gb.contains(v)) return false;
  return true;
}

bool same_image(const Matrix& A, const Matrix& B, const GradedRing& R) {
  return columns_contained(A, B, R) && columns_contained(B, A, R);
}

Matrix lift_matrix(const Matrix& A, const Matrix& B, const GradedRing& R) {
  if (!(A.tgt() == B.tgt())) throw InvariantError("lifting across different free modules");
  SubmoduleGB gb(R, A, true);
  std::vector<Vec> cols;
  for (const Vec& v : columns_of(B, R.poly())) {
    auto c = gb.lift(v);
    if (!c) throw InvariantError("map does not factor through the given image");
    cols.push_back(*c);
  }
  return Matrix::from_columns(A.src(), B.src(), cols, R.poly());
}

}  // namespace rescat
