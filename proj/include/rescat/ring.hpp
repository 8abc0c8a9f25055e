#pragma once

// R = P/I for a homogeneous ideal I of a weighted polynomial ring P.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "rescat/ideal.hpp"
#include "rescat/poly.hpp"

namespace rescat {

class GradedRing;
using GradedRingPtr = std::shared_ptr<const GradedRing>;

struct RingInvariants {
  int dim = 0;
  int depth = 0;
  bool cm = false;
  bool gorenstein = false;
  bool hypersurface = false;
  bool regular = false;
  int codim = 0;             // height of I in P
  int min_relations = 0;     // minimal number of generators of I
};

class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  static GradedRingPtr make(RingPtr P, std::vector<Poly> relations);
  static GradedRingPtr polynomial(RingPtr P) { return make(std::move(P), {}); }

  const PolyRing& poly() const { return *P_; }
  const RingPtr& poly_ptr() const { return P_; }
  const Ideal& ideal() const { return I_; }
  // The ambient polynomial ring P viewed as a graded ring (I = 0).
  GradedRingPtr ambient() const;

  Poly reduce(const Poly& f) const { return I_.is_zero() ? f : I_.normal_form(f); }
  bool same_as(const GradedRing& o) const;

  // Ideal of P generated by `gens` together with I.
  Ideal ideal_with(const std::vector<Poly>& gens) const;
  Ideal maximal_ideal() const;

  const RingInvariants& invariants() const;
  int dim() const { return invariants().dim; }
  int depth() const { return invariants().depth; }
  bool is_cm() const { return invariants().cm; }
  bool is_gorenstein() const { return invariants().gorenstein; }
  bool is_hypersurface() const { return invariants().hypersurface; }
  bool is_regular() const { return invariants().regular; }

  std::string describe() const;

 private:
  GradedRing(RingPtr P, Ideal I) : P_(std::move(P)), I_(std::move(I)) {}

  RingPtr P_;
  Ideal I_;
  mutable std::once_flag inv_once_;
  mutable RingInvariants inv_;
  mutable std::once_flag amb_once_;
  mutable GradedRingPtr ambient_;
};

}  // namespace rescat
