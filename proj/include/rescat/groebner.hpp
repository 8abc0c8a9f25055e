#pragma once

// Buchberger's algorithm on submodules of P^r with Gebauer-Moeller pair
// elimination and the sugar selection strategy. Works for ideals (r = 1)
// and for any TermOrder from poly.hpp, homogeneous or not.

#include <limits>
#include <vector>

#include "rescat/poly.hpp"

namespace rescat {

class GroebnerEngine {
 public:
  explicit GroebnerEngine(TermOrder order);

  const TermOrder& order() const { return ord_; }
  const PolyRing& ring() const { return *ord_.ring; }

  // Queues a generator (any sort order; it is normalized here).
  void add(Vec v);

  // Runs Buchberger until every pair with sugar <= max_sugar is processed.
  // With homogeneous input and max_sugar = d the basis is a d-truncated
  // Groebner basis, enough to decide membership in degrees <= d.
  void complete(int max_sugar = std::numeric_limits<int>::max());

  // Full normal form with respect to the current basis.
  Vec reduce(const Vec& v) const;
  // Only the leading part: stops at the first irreducible term.
  bool reduces_to_zero(const Vec& v) const { return reduce(v).empty(); }

  // Minimal, interreduced, monic, sorted ascending by leading term.
  std::vector<Vec> reduced_basis() const;

  // Leading terms of the active (minimal) basis elements.
  std::vector<Term> leading_terms() const;

  bool has_pending() const { return !pairs_.empty() || !inputs_.empty(); }

 private:
  struct Elem {
    Vec v;
    int sugar = 0;
    uint32_t mask = 0;
    bool active = true;
    bool single = false;  // all terms in one component
  };
  struct Pair {
    size_t i, j;
    Monomial lcm;
    uint32_t comp;
    int sugar;
  };

  void insert(Vec v, int sugar);
  int find_reducer(const Term& t, uint32_t mask) const;
  Vec spoly(const Pair& pr, int& sugar) const;
  Vec reduce_with_sugar(Vec v, int& sugar) const;
  bool pair_less(const Pair& a, const Pair& b) const;

  TermOrder ord_;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
  std::vector<Vec> inputs_;
  long reductions_ = 0;
};

}  // namespace rescat
