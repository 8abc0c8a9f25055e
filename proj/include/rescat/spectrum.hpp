#pragma once

// Closed subsets of Spec R, compared up to radical, and the loci and
// profile chains attached to modules.

#include <string>
#include <vector>

#include "rescat/homological.hpp"

namespace rescat {

// V(J) for an ideal J of P containing the defining ideal of R.
class ClosedSet {
 public:
  ClosedSet(GradedRingPtr R, const std::vector<Poly>& gens);
  static ClosedSet empty(GradedRingPtr R);
  static ClosedSet whole(GradedRingPtr R);
  static ClosedSet of(GradedRingPtr R, const Ideal& J);

  const GradedRingPtr& ring_ptr() const { return R_; }
  const Ideal& ideal() const { return J_; }
  bool is_empty() const;
  // Generators of J outside the defining ideal of R, reduced.
  std::vector<Poly> generators() const;
  std::string str() const;

 private:
  GradedRingPtr R_;
  Ideal J_;
};

// B ⊆ A, decided by I_A ⊆ sqrt(I_B).
bool closed_contains(const ClosedSet& A, const ClosedSet& B);
bool closed_equal(const ClosedSet& A, const ClosedSet& B);
ClosedSet closed_union(const ClosedSet& A, const ClosedSet& B);
ClosedSet closed_intersection(const ClosedSet& A, const ClosedSet& B);

// Descending Y_1 ⊇ Y_2 ⊇ ... ; trailing empty levels are dropped.
struct Chain {
  std::vector<ClosedSet> levels;

  std::size_t length() const { return levels.size(); }
  // Y_i for i >= 1, or nothing past the end.
  const ClosedSet* level(std::size_t i) const { return i >= 1 && i <= levels.size() ? &levels[i - 1] : nullptr; }
  void trim();
  std::string str() const;
};

bool chain_descending(const Chain& c);
bool chain_equal(const Chain& a, const Chain& b);
// a_i ⊆ b_i for every level.
bool chain_contained(const Chain& a, const Chain& b);
Chain chain_union(const Chain& a, const Chain& b);
Chain chain_intersection(const Chain& a, const Chain& b);

struct CatalogPrime {
  std::string label;
  ClosedSet set;
  int height = 0;
};

// Ideals asserted prime, with cached heights.
class PrimeCatalog {
 public:
  PrimeCatalog(GradedRingPtr R, const std::vector<std::vector<Poly>>& primes);
  const std::vector<CatalogPrime>& primes() const { return primes_; }
  const GradedRingPtr& ring_ptr() const { return R_; }

 private:
  GradedRingPtr R_;
  std::vector<CatalogPrime> primes_;
};

// Krull dimension of R/J.
int quotient_dim(const GradedRing& R, const Ideal& J);

// min{ i : Ext^i(R/J, R) != 0 }, +inf for the unit ideal.
ExtInt grade(const GradedRing& R, const Ideal& J);
ExtInt grade(const ClosedSet& Y);

ClosedSet support(const Module& M);
ClosedSet nonfree_locus(const Module& M);
ClosedSet ipd_locus(const Module& M);
ClosedSet singular_locus(const GradedRingPtr& R);

// Y_i = NF(Ω^{i-1} M) for 1 <= i <= dim R + 1.
Chain pd_profile(const Module& M);
// W_i = union_{j >= i} Supp Ext^j(M, R), Gorenstein rings only.
Chain codepth_profile(const Module& M);

// For finite-pd M: level i = union_{j >= i} Supp Ext^j(M, R), which is
// {p : pd M_p >= i}. Computed without syzygies.
Chain ext_pd_profile(const Module& M);

// Ideal of (r - j)-minors of a presentation with r generators.
Ideal fitting_ideal(const Module& M, int j);
// V(Fitt_r) for the least r with Fitt_r != 0 (locus where M is not free of
// its generic rank, on a domain).
ClosedSet fitting_nonfree_locus(const Module& M);

// Determinant of a square matrix of polynomials, reduced modulo I.
Poly determinant(const std::vector<std::vector<Poly>>& a, const GradedRing& R);

}  // namespace rescat
