#include "rescat/classification.hpp"

#include "rescat/errors.hpp"
#include "rescat/submodule.hpp"

namespace rescat {

namespace {

Module quotient_by(const GradedRingPtr& R, const ClosedSet& Y) { return Module::cyclic(R, Y.generators()); }

bool all_finite_pd(const std::vector<Module>& gens) {
  for (const Module& g : gens)
    if (!g.is_zero() && !pd(g).finite()) return false;
  return true;
}

// First level where a ⊄ b, 0 when a ⊆ b levelwise.
int first_excess(const Chain& a, const Chain& b) {
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    const ClosedSet* bi = b.level(i + 1);
    if (bi ? !closed_contains(*bi, a.levels[i]) : !a.levels[i].is_empty()) return static_cast<int>(i + 1);
  }
  return 0;
}

std::string level_str(const Chain& c, int i) {
  const ClosedSet* y = c.level(static_cast<std::size_t>(i));
  return y ? y->str() : "∅";
}

}  // namespace

GcfReport gcf_validate(const Chain& f) {
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    const int lvl = static_cast<int>(i + 1);
    if (i > 0 && !closed_contains(f.levels[i - 1], f.levels[i]))
      return {false, lvl, "level " + std::to_string(lvl) + " is not contained in level " + std::to_string(lvl - 1)};
    ExtInt g = grade(f.levels[i]);
    if (g.finite() && g.value < lvl)
      return {false, lvl, "grade of level " + std::to_string(lvl) + " is " + g.str() + " < " + std::to_string(lvl)};
  }
  return {};
}

Chain gcf_lattice(LatticeOp op, const Chain& f, const Chain& g) {
  Chain out = op == LatticeOp::Meet ? chain_intersection(f, g) : chain_union(f, g);
  GcfReport r = gcf_validate(out);
  if (!r.valid) throw InvariantError("lattice operation produced an invalid function: " + r.reason);
  return out;
}

Chain phi_pd(const std::vector<Module>& gens) {
  Chain acc;
  for (const Module& g : gens) {
    Chain p = pd_profile(g);
    if (static_cast<int>(p.length()) > g.ring().dim())
      throw PreconditionError("generator has infinite projective dimension; IPD = " + ipd_locus(g).str());
    acc = chain_union(acc, p);
  }
  return acc;
}

Verdict psi_pd_verdict(const Chain& f, const Module& M) {
  const int d = M.ring().dim();
  for (int i = 1; i <= d + 1; ++i) {
    Module om = syzygy(M, i - 1);
    if (om.is_free()) break;
    ClosedSet nf = nonfree_locus(om);
    const ClosedSet* y = f.level(static_cast<std::size_t>(i));
    if (y ? !closed_contains(*y, nf) : !nf.is_empty())
      return {false, "level " + std::to_string(i) + ": NF = " + nf.str() + " not in " + level_str(f, i)};
  }
  return {};
}

bool psi_pd_member(const Chain& f, const Module& M) { return psi_pd_verdict(f, M).member; }

bool res_member(const Module& M, const std::vector<Module>& gens) {
  Chain U;
  for (const Module& g : gens) {
    if (!g.is_zero() && !pd(g).finite()) throw PreconditionError("generator has infinite projective dimension");
    U = chain_union(U, ext_pd_profile(g));
  }
  if (M.is_zero()) return true;
  if (!pd(M).finite()) return false;
  return chain_contained(ext_pd_profile(M), U);
}

Pd0Witness pd0_witness(const GradedRingPtr& R, int n) {
  const int t = R->depth();
  if (n < 1 || n > t)
    throw PreconditionError("witness index must satisfy 1 <= n <= depth R = " + std::to_string(t));
  Resolution kres = residue_field(R).resolution(n);
  if (static_cast<int>(kres.d.size()) < n) throw InvariantError("resolution of k is shorter than depth R");

  Pd0Witness out{Module(R, kres.d[n - 1].dual()), {}, false, false};
  Resolution& res = out.res;
  for (int j = 0; j <= n; ++j) res.F.push_back(kres.F[n - j].dual());
  for (int j = 1; j <= n; ++j) res.d.push_back(kres.d[n - j].dual());
  res.terminated = true;

  out.minimal = res.minimal();
  bool exact = true;
  for (int j = 0; j + 1 < n && exact; ++j)
    exact = compose(res.d[j], res.d[j + 1], *R).is_zero() && same_image(kernel(res.d[j], *R), res.d[j + 1], *R);
  if (exact) exact = kernel(res.d[n - 1], *R).cols() == 0;
  out.exact = exact;
  return out;
}

TransposeClass finite_length_transpose_class(const Module& L, int n) {
  const GradedRingPtr& R = L.ring_ptr();
  if (L.is_zero() || !closed_equal(support(L), ClosedSet::of(R, R->maximal_ideal())))
    throw PreconditionError("module does not have finite length");
  if (n < 0 || n >= R->depth()) throw PreconditionError("need 0 <= n < depth R");
  Module a = transpose(syzygy(L, n));
  Module b = transpose(syzygy(residue_field(R), n));
  TransposeClass out;
  out.equal = res_member(a, {b}) && res_member(b, {a});
  out.profile = pd_profile(b);
  return out;
}

WitnessSearch gcf_witness(const GradedRingPtr& R, const Chain& f, int budget, const PrimeCatalog* catalog) {
  GcfReport rep = gcf_validate(f);
  if (!rep.valid) throw PreconditionError("not grade consistent: " + rep.reason);
  WitnessSearch out;
  if (f.length() == 0) {
    out.found = true;
    out.modules.push_back(Module::free(R, FreeModule{{0}}));
    return out;
  }
  const PolyRing& P = R->poly();
  std::vector<ClosedSet> cands;
  for (std::size_t i = f.length(); i >= 1; --i) {
    const ClosedSet& y = f.levels[i - 1];
    cands.push_back(y);
    std::vector<Poly> sq;
    std::vector<Poly> g = y.generators();
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a; b < g.size(); ++b) sq.push_back(poly_mul(g[a], g[b], P));
    cands.emplace_back(R, sq);
  }
  if (catalog)
    for (const CatalogPrime& p : catalog->primes())
      if (closed_contains(f.levels[0], p.set)) cands.push_back(p.set);

  Chain U;
  const int d = R->dim();
  for (const ClosedSet& J : cands) {
    for (int a = 0; a <= d; ++a) {
      if (out.examined >= budget) break;
      ++out.examined;
      Module E = syzygy(quotient_by(R, J), a);
      if (E.is_free()) break;
      if (!psi_pd_member(f, E)) continue;
      Chain next = chain_union(U, pd_profile(E));
      if (chain_equal(next, U)) continue;
      U = next;
      out.modules.push_back(E);
      if (chain_equal(U, f)) {
        out.found = true;
        return out;
      }
    }
  }
  out.uncovered_level = first_excess(f, U);
  return out;
}

Chain phi_dominant(const std::vector<Module>& gens) {
  Chain acc;
  for (const Module& g : gens) acc = chain_union(acc, codepth_profile(g));
  return acc;
}

bool psi_dominant_member(const Chain& f, const Module& M) { return chain_contained(codepth_profile(M), f); }

HyperDescriptor hyper_phi(const std::vector<Module>& gens) {
  if (gens.empty()) throw PreconditionError("no generators");
  const GradedRingPtr& R = gens[0].ring_ptr();
  if (!R->is_hypersurface()) throw PreconditionError("ring is not a hypersurface");
  HyperDescriptor D{ClosedSet::empty(R), {}};
  for (const Module& g : gens) {
    D.W = closed_union(D.W, ipd_locus(g));
    D.f = chain_union(D.f, codepth_profile(g));
  }
  if (!closed_contains(singular_locus(R), D.W)) throw InvariantError("IPD locus is not inside the singular locus");
  return D;
}

Verdict hyper_psi_verdict(const HyperDescriptor& D, const Module& M) {
  ClosedSet ipd = ipd_locus(M);
  if (!closed_contains(D.W, ipd)) return {false, "IPD = " + ipd.str() + " not in W = " + D.W.str()};
  Chain c = codepth_profile(M);
  if (int i = first_excess(c, D.f))
    return {false, "level " + std::to_string(i) + ": codepth locus " + level_str(c, i) + " not in " + level_str(D.f, i)};
  return {};
}

bool hyper_psi_member(const HyperDescriptor& D, const Module& M) { return hyper_psi_verdict(D, M).member; }

namespace {

Verdict dominant_verdict(const Chain& f, const Module& M) {
  Chain c = codepth_profile(M);
  if (int i = first_excess(c, f))
    return {false, "level " + std::to_string(i) + ": codepth locus " + level_str(c, i) + " not in " + level_str(f, i)};
  return {};
}

Verdict generated_verdict(const std::vector<Module>& gens, const Module& M) {
  const GradedRing& R = M.ring();
  if (all_finite_pd(gens)) {
    if (res_member(M, gens)) return {};
    if (!pd(M).finite()) return {false, "infinite projective dimension; IPD = " + ipd_locus(M).str()};
    Verdict v = psi_pd_verdict(phi_pd(gens), M);
    return {false, v.detail.empty() ? "profile not dominated" : v.detail};
  }
  if (R.is_hypersurface()) return hyper_psi_verdict(hyper_phi(gens), M);
  if (R.is_gorenstein()) return dominant_verdict(phi_dominant(gens), M);
  throw PreconditionError("no membership criterion for infinite-pd generators over a non-Gorenstein ring");
}

}  // namespace

DominanceReport is_dominant(const std::vector<Module>& gens, const PrimeCatalog& catalog) {
  const GradedRingPtr& R = catalog.ring_ptr();
  if (!R->is_cm()) throw PreconditionError("dominance test needs a Cohen-Macaulay ring");
  const int d = R->dim();
  DominanceReport out;
  for (const CatalogPrime& p : catalog.primes()) {
    Module X = syzygy(quotient_by(R, p.set), d);
    if (!generated_verdict(gens, X).member) {
      out.dominant = false;
      out.failing.push_back(p.label);
    }
  }
  return out;
}

Verdict descriptor_member(const Descriptor& D, const Module& M) {
  switch (D.kind) {
    case Descriptor::FinPD:
      return psi_pd_verdict(D.f, M);
    case Descriptor::Dominant:
      if (!M.ring().is_gorenstein()) throw PreconditionError("dominant descriptor needs a Gorenstein ring");
      return dominant_verdict(D.f, M);
    case Descriptor::Hyper:
      if (!D.W) throw InputError("hyper descriptor without W");
      return hyper_psi_verdict(HyperDescriptor{*D.W, D.f}, M);
    case Descriptor::Generated:
      return generated_verdict(D.gens, M);
  }
  return {};
}

TorRigidityReport tor_rigidity_check(const Module& M, const Module& N, const std::vector<Module>& X,
                                     int i_max, const PrimeCatalog& catalog) {
  const GradedRingPtr& R = M.ring_ptr();
  if (!R->is_regular()) throw PreconditionError("Tor-rigidity check runs over regular rings");
  ExtInt pm = pd(M), pn = pd(N);
  if (!pm.finite() || !pn.finite()) throw PreconditionError("modules must have finite projective dimension");
  TorRigidityReport out;
  out.i_max = std::max({i_max, pm.value, pn.value});
  out.pd_dominated = chain_contained(pd_profile(M), pd_profile(N));
  out.res_contained = res_member(M, {N});
  out.tor_supports = true;
  for (const Module& x : X) {
    for (int i = 1; i <= out.i_max && out.tor_supports; ++i)
      out.tor_supports = closed_contains(support(tor(N, x, i)), support(tor(M, x, i)));
  }
  if (!out.pd_dominated) {
    for (const CatalogPrime& p : catalog.primes()) {
      Module Rp = quotient_by(R, p.set);
      for (int i = 1; i <= out.i_max; ++i) {
        bool in_m = closed_contains(support(tor(M, Rp, i)), p.set);
        bool in_n = closed_contains(support(tor(N, Rp, i)), p.set);
        if (in_m && !in_n) {
          out.witness_prime = p.label;
          out.witness_index = i;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace rescat
