#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rescat/classification.hpp"
#include "rescat/errors.hpp"

namespace rescat::test {

inline GradedRingPtr ring(const std::vector<std::string>& vars, const std::vector<std::string>& rels = {},
                          uint32_t p = 101) {
  auto P = std::make_shared<PolyRing>(p, vars, std::vector<int>(vars.size(), 1));
  std::vector<Poly> r;
  for (const std::string& s : rels) r.push_back(parse_poly(s, *P));
  return GradedRing::make(P, r);
}

inline Poly poly(const GradedRingPtr& R, const std::string& s) { return parse_poly(s, R->poly()); }

inline std::vector<Poly> polys(const GradedRingPtr& R, const std::vector<std::string>& s) {
  std::vector<Poly> out;
  for (const std::string& t : s) out.push_back(poly(R, t));
  return out;
}

inline Ideal ideal(const GradedRingPtr& R, const std::vector<std::string>& s) {
  return Ideal(R->poly_ptr(), polys(R, s));
}

inline Module cyc(const GradedRingPtr& R, const std::vector<std::string>& gens, int shift = 0) {
  return Module::cyclic(R, polys(R, gens), shift);
}

inline Module free_mod(const GradedRingPtr& R, std::vector<int> degs = {0}) {
  return Module::free(R, FreeModule{std::move(degs)});
}

inline ClosedSet V(const GradedRingPtr& R, const std::vector<std::string>& gens) {
  return ClosedSet(R, polys(R, gens));
}

inline Chain chain(std::vector<ClosedSet> levels) {
  Chain c{std::move(levels)};
  c.trim();
  return c;
}

inline bool isomorphic(const Module& a, const Module& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace rescat::test
