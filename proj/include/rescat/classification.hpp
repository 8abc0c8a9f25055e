#pragma once

// Grade consistent functions and the descriptors classifying resolving
// subcategories, with their membership tests and witnesses.

#include <optional>
#include <string>
#include <vector>

#include "rescat/sequences.hpp"
#include "rescat/spectrum.hpp"

namespace rescat {

struct GcfReport {
  bool valid = true;
  int violated_level = 0;  // 1-based, 0 when valid
  std::string reason;
};
GcfReport gcf_validate(const Chain& f);

enum class LatticeOp { Meet, Join };
Chain gcf_lattice(LatticeOp op, const Chain& f, const Chain& g);

// A membership verdict with the violated level or locus when negative.
struct Verdict {
  bool member = true;
  std::string detail;
};

Chain phi_pd(const std::vector<Module>& gens);
Verdict psi_pd_verdict(const Chain& f, const Module& M);
bool psi_pd_member(const Chain& f, const Module& M);
// Membership in the resolving closure of finite-pd generators, decided
// from Ext supports.
bool res_member(const Module& M, const std::vector<Module>& gens);

struct Pd0Witness {
  Module witness;     // Tr Ω^{n-1} k
  Resolution res;     // 0 -> F_0^* -> ... -> F_n^* -> witness -> 0
  bool exact = false;
  bool minimal = false;
};
Pd0Witness pd0_witness(const GradedRingPtr& R, int n);

struct TransposeClass {
  bool equal = false;
  Chain profile;
};
TransposeClass finite_length_transpose_class(const Module& L, int n);

struct WitnessSearch {
  bool found = false;
  std::vector<Module> modules;
  int uncovered_level = 0;  // first level not reached when not found
  int examined = 0;
};
WitnessSearch gcf_witness(const GradedRingPtr& R, const Chain& f, int budget, const PrimeCatalog* catalog = nullptr);

Chain phi_dominant(const std::vector<Module>& gens);
bool psi_dominant_member(const Chain& f, const Module& M);

struct HyperDescriptor {
  ClosedSet W;
  Chain f;
};
HyperDescriptor hyper_phi(const std::vector<Module>& gens);
Verdict hyper_psi_verdict(const HyperDescriptor& D, const Module& M);
bool hyper_psi_member(const HyperDescriptor& D, const Module& M);

struct DominanceReport {
  bool dominant = true;
  std::vector<std::string> failing;  // catalog primes where Ω^d(R/p) is not a member
};
DominanceReport is_dominant(const std::vector<Module>& gens, const PrimeCatalog& catalog);

struct Descriptor {
  enum Kind { Generated, FinPD, Dominant, Hyper };
  Kind kind = Generated;
  std::vector<Module> gens;
  Chain f;
  std::optional<ClosedSet> W;
};
Verdict descriptor_member(const Descriptor& D, const Module& M);

struct TorRigidityReport {
  bool pd_dominated = false;   // (1) pd M_p <= pd N_p everywhere
  bool res_contained = false;  // (2) M in res N
  bool tor_supports = false;   // (3) on the X catalog for 1 <= i <= i_max
  int i_max = 0;
  // Violation of (3) at X = R/p when (1) fails.
  std::optional<std::string> witness_prime;
  int witness_index = 0;
};
TorRigidityReport tor_rigidity_check(const Module& M, const Module& N, const std::vector<Module>& X,
                                     int i_max, const PrimeCatalog& catalog);

}  // namespace rescat
