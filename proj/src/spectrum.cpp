#include "rescat/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rescat/errors.hpp"
#include "rescat/submodule.hpp"

namespace rescat {

ClosedSet::ClosedSet(GradedRingPtr R, const std::vector<Poly>& gens) : R_(std::move(R)), J_(R_->ideal_with(gens)) {}

ClosedSet ClosedSet::empty(GradedRingPtr R) { return ClosedSet(std::move(R), {constant(1)}); }

ClosedSet ClosedSet::whole(GradedRingPtr R) { return ClosedSet(std::move(R), {}); }

ClosedSet ClosedSet::of(GradedRingPtr R, const Ideal& J) { return ClosedSet(std::move(R), J.gb()); }

bool ClosedSet::is_empty() const { return J_.is_unit(); }

std::vector<Poly> ClosedSet::generators() const {
  std::vector<Poly> out;
  for (const Poly& g : J_.gb())
    if (!R_->reduce(g).empty()) out.push_back(g);
  const PolyRing& P = R_->poly();
  std::stable_sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    if (a[0].m.deg != b[0].m.deg) return a[0].m.deg < b[0].m.deg;
    return P.cmp(a[0].m, b[0].m) > 0;
  });
  return out;
}

std::string ClosedSet::str() const {
  if (is_empty()) return "∅";
  std::vector<Poly> g = generators();
  if (g.empty()) return "V(0)";
  std::string s = "V(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "; " : "") + R_->poly().format(g[i]);
  return s + ")";
}

bool closed_contains(const ClosedSet& A, const ClosedSet& B) {
  if (B.is_empty()) return true;
  for (const Poly& g : A.ideal().gb())
    if (!radical_contains(B.ideal(), g)) return false;
  return true;
}

bool closed_equal(const ClosedSet& A, const ClosedSet& B) { return closed_contains(A, B) && closed_contains(B, A); }

ClosedSet closed_union(const ClosedSet& A, const ClosedSet& B) {
  if (A.is_empty()) return B;
  if (B.is_empty()) return A;
  return ClosedSet::of(A.ring_ptr(), ideal_intersection(A.ideal(), B.ideal()));
}

ClosedSet closed_intersection(const ClosedSet& A, const ClosedSet& B) {
  return ClosedSet::of(A.ring_ptr(), ideal_sum(A.ideal(), B.ideal()));
}

void Chain::trim() {
  while (!levels.empty() && levels.back().is_empty()) levels.pop_back();
}

std::string Chain::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < levels.size(); ++i) os << "level " << i + 1 << ": " << levels[i].str() << '\n';
  return os.str();
}

bool chain_descending(const Chain& c) {
  for (std::size_t i = 1; i < c.levels.size(); ++i)
    if (!closed_contains(c.levels[i - 1], c.levels[i])) return false;
  return true;
}

bool chain_contained(const Chain& a, const Chain& b) {
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    if (i < b.levels.size()) {
      if (!closed_contains(b.levels[i], a.levels[i])) return false;
    } else if (!a.levels[i].is_empty()) {
      return false;
    }
  }
  return true;
}

bool chain_equal(const Chain& a, const Chain& b) { return chain_contained(a, b) && chain_contained(b, a); }

Chain chain_union(const Chain& a, const Chain& b) {
  Chain out;
  for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i) {
    if (i >= a.length())
      out.levels.push_back(b.levels[i]);
    else if (i >= b.length())
      out.levels.push_back(a.levels[i]);
    else
      out.levels.push_back(closed_union(a.levels[i], b.levels[i]));
  }
  out.trim();
  return out;
}

Chain chain_intersection(const Chain& a, const Chain& b) {
  Chain out;
  for (std::size_t i = 0; i < std::min(a.length(), b.length()); ++i)
    out.levels.push_back(closed_intersection(a.levels[i], b.levels[i]));
  out.trim();
  return out;
}

int quotient_dim(const GradedRing& R, const Ideal& J) {
  (void)R;
  return dimension_from_numerator(hilbert_numerator(J), J.ring());
}

PrimeCatalog::PrimeCatalog(GradedRingPtr R, const std::vector<std::vector<Poly>>& primes) : R_(std::move(R)) {
  const int d = R_->dim();
  for (const auto& gens : primes) {
    ClosedSet Y(R_, gens);
    if (Y.is_empty()) throw InputError("catalog entry is the unit ideal");
    std::vector<Poly> g = Y.generators();
    std::string label = "(";
    for (std::size_t i = 0; i < g.size(); ++i) label += (i ? "; " : "") + R_->poly().format(g[i]);
    label += g.empty() ? "0)" : ")";
    primes_.push_back({label, Y, d - quotient_dim(*R_, Y.ideal())});
  }
}

ExtInt grade(const GradedRing& R, const Ideal& J) {
  if (J.is_unit()) return ExtInt::pos_inf();
  GradedRingPtr Rp = R.shared_from_this();
  std::vector<Poly> gens;
  for (const Poly& g : J.gb())
    if (!R.reduce(g).empty()) gens.push_back(g);
  Module M = Module::cyclic(Rp, gens);
  Module Rf = Module::free(Rp, FreeModule{{0}});
  for (int i = 0; i <= R.dim(); ++i)
    if (!ext(M, Rf, i).is_zero()) return ExtInt::of(i);
  throw InvariantError("Ext(R/J, R) vanished up to the dimension of R");
}

ExtInt grade(const ClosedSet& Y) { return grade(*Y.ring_ptr(), Y.ideal()); }

ClosedSet support(const Module& M) { return ClosedSet::of(M.ring_ptr(), annihilator(M)); }

ClosedSet nonfree_locus(const Module& M) {
  Module Mm = M.minimized();
  if (Mm.is_free()) return ClosedSet::empty(M.ring_ptr());
  return support(ext(Mm, syzygy(Mm, 1), 1));
}

ClosedSet ipd_locus(const Module& M) { return nonfree_locus(syzygy(M, M.ring().dim())); }

Poly determinant(const std::vector<std::vector<Poly>>& a, const GradedRing& R) {
  const PolyRing& P = R.poly();
  const TermOrder g = TermOrder::grevlex(P);
  const std::size_t n = a.size();
  if (n == 0) return constant(1);
  if (n == 1) return R.reduce(a[0][0]);
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].empty()) continue;
    std::vector<std::vector<Poly>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(a[i][k]);
    Poly term = poly_mul(a[0][j], determinant(minor, R), P);
    acc = j % 2 ? sub(acc, term, g) : add(acc, term, g);
  }
  return R.reduce(acc);
}

namespace {

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      fn(idx);
      return;
    }
    for (std::size_t i = from; i + (k - pos) <= n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

std::vector<Poly> minors(const Matrix& A, std::size_t s, const GradedRing& R) {
  std::vector<Poly> out;
  subsets(A.rows(), s, [&](const std::vector<std::size_t>& rows) {
    subsets(A.cols(), s, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Poly>> m(s);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) m[i].push_back(A.at(rows[i], cols[j]));
      Poly d = determinant(m, R);
      if (!d.empty()) out.push_back(d);
    });
  });
  return out;
}

}  // namespace

Ideal fitting_ideal(const Module& M, int j) {
  const GradedRing& R = M.ring();
  const Matrix& A = M.minimal().pres;
  const int s = static_cast<int>(A.rows()) - j;
  if (s <= 0) return R.ideal_with({constant(1)});
  if (s > static_cast<int>(std::min(A.rows(), A.cols()))) return R.ideal_with({});
  return R.ideal_with(minors(A, static_cast<std::size_t>(s), R));
}

ClosedSet fitting_nonfree_locus(const Module& M) {
  const GradedRing& R = M.ring();
  for (int r = 0;; ++r) {
    Ideal F = fitting_ideal(M, r);
    if (!R.ideal().contains(F)) return ClosedSet::of(M.ring_ptr(), F);
  }
}

ClosedSet singular_locus(const GradedRingPtr& R) {
  if (R->is_regular()) return ClosedSet::empty(R);
  const PolyRing& P = R->poly();
  Module cyc = Module::cyclic(R->ambient(), R->ideal().gb());
  const Matrix& A = cyc.minimal().pres;
  const int c = static_cast<int>(A.cols());
  if (c != R->invariants().codim)
    throw PreconditionError("singular locus needs a complete intersection; the defining ideal has " +
                            std::to_string(c) + " minimal generators in codimension " +
                            std::to_string(R->invariants().codim));
  Matrix J(FreeModule(std::vector<int>(c, 0)), FreeModule(std::vector<int>(P.nvars(), 0)));
  for (int i = 0; i < c; ++i)
    for (int v = 0; v < P.nvars(); ++v) J.at(i, v) = derivative(A.at(0, i), v, P);
  std::vector<Poly> m = minors(J, static_cast<std::size_t>(c), *R->ambient());
  return ClosedSet(R, m);
}

Chain pd_profile(const Module& M) {
  const int d = M.ring().dim();
  Chain out;
  for (int i = 1; i <= d + 1; ++i) {
    Module om = syzygy(M, i - 1);
    if (om.is_free()) break;
    out.levels.push_back(nonfree_locus(om));
  }
  out.trim();
  return out;
}

Chain codepth_profile(const Module& M) {
  const GradedRing& R = M.ring();
  if (!R.is_gorenstein()) throw PreconditionError("codepth profile needs a Gorenstein ring");
  const int d = R.dim();
  Module Rf = Module::free(M.ring_ptr(), FreeModule{{0}});
  Chain out;
  out.levels.assign(d, ClosedSet::empty(M.ring_ptr()));
  ClosedSet acc = ClosedSet::empty(M.ring_ptr());
  for (int j = d; j >= 1; --j) {
    Module e = ext(M, Rf, j);
    if (!e.is_zero()) acc = closed_union(acc, support(e));
    out.levels[j - 1] = acc;
  }
  out.trim();
  return out;
}

Chain ext_pd_profile(const Module& M) {
  if (!pd(M).finite() && !M.is_zero()) throw PreconditionError("Ext profile needs finite projective dimension");
  const int t = M.ring().depth();
  Module Rf = Module::free(M.ring_ptr(), FreeModule{{0}});
  Chain out;
  out.levels.assign(t, ClosedSet::empty(M.ring_ptr()));
  ClosedSet acc = ClosedSet::empty(M.ring_ptr());
  for (int j = t; j >= 1; --j) {
    Module e = ext(M, Rf, j);
    if (!e.is_zero()) acc = closed_union(acc, support(e));
    out.levels[j - 1] = acc;
  }
  out.trim();
  return out;
}

}  // namespace rescat
