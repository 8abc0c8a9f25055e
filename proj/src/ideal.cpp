#include "rescat/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "rescat/errors.hpp"

namespace rescat {

namespace {

void check_same(const Ideal& I, const Ideal& J) {
  if (!I.ring().same_as(J.ring())) throw InputError("ideals live in different rings");
}

// Components of GB elements lying entirely in the tag component 1.
std::vector<Poly> tagged_elimination(const PolyRing& R, const std::vector<Vec>& gens) {
  TermOrder ord = TermOrder::grevlex(R);
  ord.block = {1, 0};
  GroebnerEngine eng(ord);
  for (const Vec& v : gens) eng.add(v);
  eng.complete();
  std::vector<Poly> out;
  for (const Vec& g : eng.reduced_basis()) {
    if (g.front().comp != 1) continue;
    out.push_back(component(g, 1, R));
  }
  return out;
}

}  // namespace

Ideal::Ideal(RingPtr R, std::vector<Poly> gens) : ring_(std::move(R)), state_(std::make_shared<State>()) {
  TermOrder ord = TermOrder::grevlex(*ring_);
  for (Poly& g : gens) {
    normalize(g, ord);
    if (!g.empty()) gens_.push_back(std::move(g));
  }
}

const GroebnerEngine& Ideal::engine() const {
  std::call_once(state_->once, [&] {
    state_->gb = buchberger(gens_, *ring_);
    auto eng = std::make_unique<GroebnerEngine>(TermOrder::grevlex(*ring_));
    for (const Poly& g : state_->gb) eng->add(g);
    eng->complete(std::numeric_limits<int>::min());
    state_->engine = std::move(eng);
  });
  return *state_->engine;
}

const std::vector<Poly>& Ideal::gb() const {
  engine();
  return state_->gb;
}

Poly Ideal::normal_form(const Poly& f) const {
  Poly g = f;
  normalize(g, TermOrder::grevlex(*ring_));
  return engine().reduce(g);
}

bool Ideal::contains(const Ideal& J) const {
  for (const Poly& g : J.gens())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& G = gb();
  return G.size() == 1 && G[0].size() == 1 && G[0][0].m.is_one();
}

bool Ideal::is_homogeneous() const {
  for (const Poly& g : gens_)
    if (!rescat::is_homogeneous(g)) return false;
  return true;
}

std::vector<Poly> buchberger(const std::vector<Poly>& gens, const PolyRing& R) {
  GroebnerEngine eng(TermOrder::grevlex(R));
  for (const Poly& g : gens) {
    for (const Term& t : g)
      if (t.comp != 0) throw InputError("buchberger expects polynomials, not module elements");
    eng.add(g);
  }
  eng.complete();
  return eng.reduced_basis();
}

Poly normal_form(const Poly& f, const std::vector<Poly>& G, const PolyRing& R) {
  // G is a Groebner basis already; the engine only needs its elements.
  GroebnerEngine eng(TermOrder::grevlex(R));
  for (const Poly& g : G) eng.add(g);
  eng.complete(std::numeric_limits<int>::min());
  return eng.reduce(f);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  std::vector<Poly> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  Ideal out(I.ring_ptr(), g);
  return Ideal(I.ring_ptr(), out.gb());
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  std::vector<Poly> g;
  for (const Poly& a : I.gens())
    for (const Poly& b : J.gens()) g.push_back(poly_mul(a, b, I.ring()));
  Ideal out(I.ring_ptr(), g);
  return Ideal(I.ring_ptr(), out.gb());
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  const PolyRing& R = I.ring();
  std::vector<Vec> gens;
  for (const Poly& f : I.gens()) {
    Vec v = embed(f, 0, TermOrder::grevlex(R));
    Vec w = embed(f, 1, TermOrder::grevlex(R));
    v.insert(v.end(), w.begin(), w.end());
    gens.push_back(v);
  }
  for (const Poly& g : J.gens()) gens.push_back(embed(g, 0, TermOrder::grevlex(R)));
  return Ideal(I.ring_ptr(), buchberger(tagged_elimination(R, gens), R));
}

Ideal ideal_quotient(const Ideal& I, const Poly& g) {
  const PolyRing& R = I.ring();
  if (g.empty()) return Ideal(I.ring_ptr(), {constant(1)});
  std::vector<Vec> gens;
  Vec v = embed(g, 0, TermOrder::grevlex(R));
  v.push_back(Term{R.one(), 1, 1});
  gens.push_back(v);
  for (const Poly& f : I.gens()) gens.push_back(embed(f, 0, TermOrder::grevlex(R)));
  return Ideal(I.ring_ptr(), buchberger(tagged_elimination(R, gens), R));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  check_same(I, J);
  Ideal acc(I.ring_ptr(), {constant(1)});
  for (const Poly& g : J.gens()) acc = ideal_intersection(acc, ideal_quotient(I, g));
  return acc;
}

Ideal ideal_combine(Combine kind, const Ideal& I, const Ideal& J) {
  switch (kind) {
    case Combine::Sum: return ideal_sum(I, J);
    case Combine::Product: return ideal_product(I, J);
    case Combine::Intersection: return ideal_intersection(I, J);
    case Combine::Quotient: return ideal_quotient(I, J);
  }
  throw InputError("unknown ideal operation");
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  const PolyRing& R = I.ring();
  TermOrder ord = TermOrder::grevlex(R);
  for (int v : vars) {
    if (v < 0 || v >= R.nvars()) throw InputError("elimination variable out of range");
    ord.elim_mask |= 1u << v;
  }
  GroebnerEngine eng(ord);
  for (const Poly& f : I.gens()) eng.add(f);
  eng.complete();
  std::vector<Poly> keep;
  for (const Vec& g : eng.reduced_basis()) {
    bool free_of = true;
    for (const Term& t : g)
      for (int v : vars)
        if (t.m.e[v]) free_of = false;
    if (free_of) {
      Poly p = g;
      normalize(p, TermOrder::grevlex(R));
      keep.push_back(p);
    }
  }
  return Ideal(I.ring_ptr(), buchberger(keep, R));
}

bool radical_contains(const Ideal& I, const Poly& f) {
  if (f.empty() || I.contains(f)) return true;
  const PolyRing& R = I.ring();
  auto Rt = R.extended({"_t"}, {1});
  const int t = R.nvars();
  std::vector<Poly> gens;
  for (const Poly& g : I.gens()) {
    Poly h = g;
    normalize(h, TermOrder::grevlex(*Rt));
    gens.push_back(h);
  }
  Poly tf = poly_mul(variable(*Rt, t), f, *Rt);
  Poly r = sub(constant(1), tf, TermOrder::grevlex(*Rt));
  normalize(r, TermOrder::grevlex(*Rt));
  gens.push_back(r);
  auto G = buchberger(gens, *Rt);
  return G.size() == 1 && G[0].size() == 1 && G[0][0].m.is_one();
}

// ---- Hilbert series ----

Laurent laurent_add(const Laurent& a, const Laurent& b, long long sign) {
  Laurent out = a;
  for (auto [e, c] : b) {
    out[e] += sign * c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

Laurent laurent_shift(const Laurent& a, int s) {
  Laurent out;
  for (auto [e, c] : a) out[e + s] = c;
  return out;
}

bool laurent_is_zero(const Laurent& a) {
  for (auto [e, c] : a)
    if (c != 0) return false;
  return true;
}

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> mons, const PolyRing& R) {
  std::sort(mons.begin(), mons.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return R.cmp(a, b) < 0;
  });
  std::vector<Monomial> out;
  for (const Monomial& m : mons) {
    bool redundant = false;
    for (const Monomial& k : out)
      if (R.divides(k, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

Laurent numerator_rec(std::vector<Monomial> mons, const PolyRing& R) {
  mons = minimalize(std::move(mons), R);
  if (mons.empty()) return Laurent{{0, 1}};
  bool pairwise_coprime = true;
  for (size_t i = 0; i < mons.size() && pairwise_coprime; ++i)
    for (size_t j = i + 1; j < mons.size(); ++j)
      if (!R.coprime(mons[i], mons[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    Laurent acc{{0, 1}};
    for (const Monomial& m : mons) {
      Laurent next;
      for (auto [e, c] : acc) {
        next[e] += c;
        next[e + m.deg] -= c;
      }
      std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
      acc = next;
    }
    return acc;
  }
  Monomial m = mons.back();
  mons.pop_back();
  std::vector<Monomial> colon;
  for (const Monomial& k : mons) {
    Monomial l = R.lcm(k, m);
    colon.push_back(R.div(l, m));
  }
  Laurent a = numerator_rec(mons, R);
  Laurent b = laurent_shift(numerator_rec(colon, R), m.deg);
  return laurent_add(a, b, -1);
}

}  // namespace

Laurent monomial_hilbert_numerator(const std::vector<Monomial>& mons, const PolyRing& R) {
  return numerator_rec(mons, R);
}

Laurent hilbert_numerator(const Ideal& I) {
  if (!I.is_homogeneous()) throw PreconditionError("Hilbert series needs a homogeneous ideal");
  std::vector<Monomial> lead;
  for (const Poly& g : I.gb()) lead.push_back(g.front().m);
  return monomial_hilbert_numerator(lead, I.ring());
}

int vanishing_order_at_one(const Laurent& a) {
  if (laurent_is_zero(a)) throw InvariantError("vanishing order of the zero series");
  int lo = a.begin()->first;
  int hi = a.rbegin()->first;
  std::vector<long long> c(hi - lo + 1, 0);
  for (auto [e, v] : a) c[e - lo] = v;
  int order = 0;
  while (true) {
    long long s = 0;
    for (long long v : c) s += v;
    if (s != 0) return order;
    // divide by (u - 1): synthetic division from the top coefficient
    std::vector<long long> q(c.size() - 1, 0);
    long long carry = 0;
    for (size_t k = c.size() - 1; k >= 1; --k) {
      carry += c[k];
      q[k - 1] = carry;
    }
    c = q;
    ++order;
  }
}

int dimension_from_numerator(const Laurent& num, const PolyRing& R) {
  if (laurent_is_zero(num)) return -1;
  return R.nvars() - vanishing_order_at_one(num);
}

std::string format_laurent(const Laurent& a) {
  if (laurent_is_zero(a)) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : a) {
    if (c == 0) continue;
    long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << "u";
      if (e != 1) os << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
    }
  }
  return os.str();
}

std::string format_hilbert_series(const Laurent& num, const PolyRing& R) {
  std::string den;
  std::map<int, int> powers;
  for (int w : R.weights()) powers[w]++;
  for (auto [w, k] : powers) {
    std::string f = w == 1 ? "(1 - u)" : "(1 - u^" + std::to_string(w) + ")";
    if (!den.empty()) den += "*";
    den += f;
    if (k > 1) den += "^" + std::to_string(k);
  }
  std::string n = format_laurent(num);
  if (den.empty()) return n;
  return "(" + n + ")/" + den;
}

}  // namespace rescat
