#pragma once

// Ideals of P = k[x_1..x_n] and the operations built on Groebner bases.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "rescat/groebner.hpp"
#include "rescat/poly.hpp"

namespace rescat {

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr R, std::vector<Poly> gens);

  const RingPtr& ring_ptr() const { return ring_; }
  const PolyRing& ring() const { return *ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  // Reduced Groebner basis under grevlex, computed once.
  const std::vector<Poly>& gb() const;
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const { return normal_form(f).empty(); }
  bool contains(const Ideal& J) const;
  bool is_zero() const { return gb().empty(); }
  bool is_unit() const;
  bool is_homogeneous() const;
  bool equals(const Ideal& J) const { return contains(J) && J.contains(*this); }
  // Completed engine holding the basis, for repeated reductions.
  const GroebnerEngine& engine() const;

 private:
  struct State {
    std::once_flag once;
    std::unique_ptr<GroebnerEngine> engine;
    std::vector<Poly> gb;
  };
  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<State> state_;
};

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const PolyRing& R);
Poly normal_form(const Poly& f, const std::vector<Poly>& G, const PolyRing& R);

enum class Combine { Sum, Product, Intersection, Quotient };
Ideal ideal_combine(Combine kind, const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Poly& g);
// Contraction I ∩ k[variables not in `vars`], returned in the same ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// f in sqrt(I), via 1 in I + (1 - t f) in P[t].
bool radical_contains(const Ideal& I, const Poly& f);

// Laurent polynomial with integer coefficients, exponent -> coefficient.
using Laurent = std::map<int, long long>;

// Hilbert series of P/I as numerator over prod_i (1 - u^{w_i}).
Laurent hilbert_numerator(const Ideal& I);
// Numerator for P/(monomial ideal generated by `mons`).
Laurent monomial_hilbert_numerator(const std::vector<Monomial>& mons, const PolyRing& R);
Laurent laurent_add(const Laurent& a, const Laurent& b, long long sign = 1);
Laurent laurent_shift(const Laurent& a, int s);
bool laurent_is_zero(const Laurent& a);
// Order of vanishing at u = 1 (number of (1-u) factors); a must be nonzero.
int vanishing_order_at_one(const Laurent& a);
// Krull dimension of a module with numerator `num` over P.
int dimension_from_numerator(const Laurent& num, const PolyRing& R);
std::string format_laurent(const Laurent& a);
std::string format_hilbert_series(const Laurent& num, const PolyRing& R);

}  // namespace rescat
