#pragma once

// Syzygies, transposes, Hom/Ext/Tor and the numerical invariants built on
// them, all computed from graded minimal data at the irrelevant ideal.

#include <optional>
#include <string>

#include "rescat/ideal.hpp"
#include "rescat/module.hpp"

namespace rescat {

// Integer extended by -inf and +inf.
struct ExtInt {
  enum Kind { NegInf, Finite, PosInf };
  Kind kind = Finite;
  int value = 0;

  static ExtInt neg_inf() { return {NegInf, 0}; }
  static ExtInt pos_inf() { return {PosInf, 0}; }
  static ExtInt of(int v) { return {Finite, v}; }
  bool finite() const { return kind == Finite; }
  bool operator==(const ExtInt& o) const { return kind == o.kind && (kind != Finite || value == o.value); }
  std::string str() const;
};

Module residue_field(const GradedRingPtr& R);

Module syzygy(const Module& M, int n);
Module cosyzygy(const Module& M, int n);
Module transpose(const Module& M);
Module dual(const Module& M);

// Hom(M, N) together with its generators as elements of F0^* ⊗ G0, where
// F0, G0 are the generators of the minimal presentations of M and N.
struct HomData {
  Module module;
  Matrix embedding;  // columns: generators, rows indexed (j, k) -> j*|G0| + k
};
HomData hom_data(const Module& M, const Module& N);
Module hom(const Module& M, const Module& N);
Module ext(const Module& M, const Module& N, int i);

// Ext^i(M, N) as cycles modulo boundaries inside F_i^* ⊗ G0, with F the
// cached minimal resolution of M.
struct Homology {
  Module module;
  Matrix cycles;
  Matrix boundaries;
};
Homology ext_data(const Module& M, const Module& N, int i);
Module tor(const Module& M, const Module& N, int i);

ExtInt pd(const Module& M);
ExtInt depth(const Module& M);
// depth computed as n - pd over the ambient polynomial ring.
ExtInt depth_via_ambient(const Module& M);
bool is_mcm(const Module& M);

Ideal annihilator(const Module& M);
Ideal trace_ideal(const Module& M);

struct FreeSplit {
  int rank = 0;
  Module reduced;
};
FreeSplit free_summand_split(const Module& M);

// Hilbert series numerator over prod (1 - u^{w_i}).
Laurent hilbert_numerator(const Module& M);

// Degree-zero map G0(M) -> G0(N) (as a matrix on minimal generators)
// inducing an isomorphism M -> N, found by sampling Hom(M, N)_0.
std::optional<Matrix> find_isomorphism(const Module& M, const Module& N, int attempts = 8);
bool same_betti(const Module& M, const Module& N);

// Monomials of P of weighted degree d.
std::vector<Monomial> monomials_of_degree(const PolyRing& P, int d);

}  // namespace rescat
