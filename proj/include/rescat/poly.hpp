#pragma once

// Monomials, coefficients and sparse polynomial vectors over Z/p.
//
// A Vec is a sparse element of a free module P^r: a list of terms
// (coefficient, monomial, component) sorted strictly descending in some
// TermOrder. A polynomial is a Vec whose terms all sit in component 0,
// sorted by the ring's graded reverse lexicographic order.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace rescat {

constexpr int kMaxVars = 16;

struct Monomial {
  std::array<uint16_t, kMaxVars> e{};
  int32_t deg = 0;  // weighted degree, kept in sync by PolyRing helpers

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool is_one() const { return deg == 0 && e == std::array<uint16_t, kMaxVars>{}; }
};

struct Term {
  Monomial m;
  uint32_t comp = 0;
  uint32_t c = 0;
};

using Vec = std::vector<Term>;
using Poly = Vec;

class PolyRing {
 public:
  PolyRing(uint32_t p, std::vector<std::string> names, std::vector<int> weights);

  uint32_t p() const { return p_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& weights() const { return weights_; }
  int var_index(std::string_view name) const;  // -1 when absent

  uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p_ ? s - p_ : s; }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }
  uint32_t inv(uint32_t a) const { return (*inverse_)[a]; }
  uint32_t from_int(long long v) const;

  Monomial one() const { return Monomial{}; }
  Monomial var(int i, int power = 1) const;
  int degree_of(const Monomial& m) const;
  Monomial mul(const Monomial& a, const Monomial& b) const;
  Monomial div(const Monomial& a, const Monomial& b) const;  // requires b | a
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  bool divides(const Monomial& a, const Monomial& b) const;  // a | b
  bool coprime(const Monomial& a, const Monomial& b) const;
  uint32_t divmask(const Monomial& m) const;

  // graded reverse lexicographic comparison: -1, 0, 1
  int cmp(const Monomial& a, const Monomial& b) const;

  bool same_as(const PolyRing& o) const;

  // Ring with extra variables appended after the existing ones.
  std::shared_ptr<const PolyRing> extended(const std::vector<std::string>& names,
                                           const std::vector<int>& weights) const;

  std::string format(const Poly& f) const;
  std::string format_monomial(const Monomial& m) const;

 private:
  uint32_t p_;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::shared_ptr<const std::vector<uint32_t>> inverse_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

bool is_prime(uint32_t n);

// Term orders on P^r. Comparison keys in sequence: component block (higher
// block wins), weighted degree in the eliminated variables, shifted degree
// deg(m) + twist[comp], reverse lexicographic on exponents, then the lower
// component index wins.
struct TermOrder {
  const PolyRing* ring = nullptr;
  uint32_t elim_mask = 0;
  std::vector<int> twist;
  std::vector<int> block;

  static TermOrder grevlex(const PolyRing& R) { TermOrder o; o.ring = &R; return o; }

  int tw(uint32_t c) const { return c < twist.size() ? twist[c] : 0; }
  int blk(uint32_t c) const { return c < block.size() ? block[c] : 0; }
  int elim_degree(const Monomial& m) const;
  int shifted_degree(const Term& t) const { return t.m.deg + tw(t.comp); }
  int cmp(const Monomial& a, uint32_t ca, const Monomial& b, uint32_t cb) const;
  int cmp(const Term& a, const Term& b) const { return cmp(a.m, a.comp, b.m, b.comp); }
};

// ---- Vec arithmetic; every routine keeps the sort order of `ord` ----

void normalize(Vec& v, const TermOrder& ord);  // sort, merge duplicates, drop zeros
Vec add(const Vec& a, const Vec& b, const TermOrder& ord);
Vec sub(const Vec& a, const Vec& b, const TermOrder& ord);
Vec scale(const Vec& a, uint32_t c, const PolyRing& R);
Vec mul_term(const Vec& a, uint32_t c, const Monomial& m, const PolyRing& R);
// a - c*m*b
Vec sub_mul(const Vec& a, uint32_t c, const Monomial& m, const Vec& b, const TermOrder& ord);
Vec make_monic(const Vec& a, const PolyRing& R);
Poly poly_mul(const Poly& a, const Poly& b, const PolyRing& R);
Poly poly_pow(const Poly& a, int e, const PolyRing& R);
Poly constant(uint32_t c);
Poly variable(const PolyRing& R, int i);
// Polynomial f placed in component `comp` (order `ord` for sorting).
Vec embed(const Poly& f, uint32_t comp, const TermOrder& ord);
// Terms of component `comp`, as a polynomial sorted by grevlex.
Poly component(const Vec& v, uint32_t comp, const PolyRing& R);
void resort(Vec& v, const TermOrder& ord);

bool is_homogeneous(const Poly& f);
int poly_degree(const Poly& f);  // degree of leading term; requires f != 0
bool is_homogeneous_vec(const Vec& v, const TermOrder& ord);
Poly derivative(const Poly& f, int var, const PolyRing& R);

Poly parse_poly(std::string_view text, const PolyRing& R);

}  // namespace rescat
